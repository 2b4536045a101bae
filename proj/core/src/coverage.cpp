#include "amitsur/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <thread>

#include "amitsur/errors.hpp"

namespace amitsur {

std::vector<SElement> dihedral_generators(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw InvalidArgument("dihedral generators need odd n >= 3, got " + std::to_string(n));
  std::vector<SElement> out;
  out.push_back(SElement::rho_power(n, 1) + SElement::rho_power(n, -1));
  for (std::size_t k = 1; 2 * k + 1 < n; ++k) {
    SElement sum = SElement::zero(n);
    const auto kk = static_cast<std::int64_t>(k);
    for (std::int64_t e = -kk; e <= kk; ++e) sum = sum + SElement::rho_power(n, e);
    out.push_back(sum);
  }
  return out;
}

SElement tau_symmetrize(const SElement& s, const TauData& t) {
  SElement product = SElement::one(s.order());
  SElement image = s;
  for (std::uint64_t i = 0; i < t.m; ++i) {
    product = product * image;
    image = tau_apply_s(image, t);
  }
  return product;
}

namespace {

// Appends c to out unless already present; keeps first-seen order.
void push_unique(std::vector<SElement>& out, std::set<SElement>& seen, SElement c) {
  if (seen.insert(c).second) out.push_back(std::move(c));
}

SElement make_fixed(const SElement& s, const TauData& t) {
  return is_tau_fixed(s, t) ? s : tau_symmetrize(s, t);
}

bool is_fixed_unit(const SElement& s, const TauData& t) {
  return is_tau_fixed(s, t) && is_unit(s);
}

}  // namespace

std::vector<SElement> fixed_unit_generators(std::size_t n, std::uint64_t r, unsigned depth) {
  const TauData t = TauData::make(n, r);
  if (depth == 0) throw InvalidArgument("depth must be positive");
  const SElement one = SElement::one(n);

  std::vector<SElement> candidates;
  if (n % 2 == 1 && r == n - 1)
    for (auto& g : dihedral_generators(n)) candidates.push_back(std::move(g));
  for (std::size_t i = 0; i < n; ++i) {
    const SElement rho_i = SElement::rho_power(n, static_cast<std::int64_t>(i));
    candidates.push_back(make_fixed(-rho_i, t));
    candidates.push_back(make_fixed(rho_i, t));
  }
  for (std::size_t j = 2; j < n; ++j) {
    if (gcd_u64(j, n) != 1) continue;
    candidates.push_back(make_fixed(reduce(partial_norm(n, 1, j)), t));
  }

  std::vector<SElement> base;
  std::set<SElement> seen{one};
  for (auto& c : candidates) {
    if (seen.count(c) || !is_fixed_unit(c, t)) continue;
    push_unique(base, seen, std::move(c));
  }

  // Multisets of size 2..depth over the base list, enumerated as
  // non-decreasing index sequences.
  std::vector<SElement> out = base;
  std::function<void(std::size_t, unsigned, const SElement&)> extend =
      [&](std::size_t start, unsigned remaining, const SElement& acc) {
        if (remaining == 0) return;
        for (std::size_t i = start; i < base.size(); ++i) {
          SElement prod = acc * base[i];
          if (!seen.count(prod) && is_fixed_unit(prod, t)) push_unique(out, seen, prod);
          extend(i, remaining - 1, prod);
        }
      };
  for (std::size_t i = 0; i < base.size() && depth > 1; ++i) extend(i, depth - 1, base[i]);
  return out;
}

std::vector<std::uint64_t> subgroup_closure(std::uint64_t n,
                                            const std::vector<std::uint64_t>& residues) {
  std::set<std::uint64_t> group{1 % n};
  std::deque<std::uint64_t> frontier{1 % n};
  while (!frontier.empty()) {
    const std::uint64_t x = frontier.front();
    frontier.pop_front();
    for (std::uint64_t g : residues) {
      const std::uint64_t y = mul_mod(x, g % n, n);
      if (group.insert(y).second) frontier.push_back(y);
    }
  }
  return {group.begin(), group.end()};
}

std::map<std::uint64_t, SElement> residue_representatives(std::size_t n,
                                                          const std::vector<SElement>& generators) {
  std::map<std::uint64_t, SElement> reached;
  reached.emplace(1 % n, SElement::one(n));
  std::deque<std::uint64_t> frontier{1 % n};
  std::vector<std::uint64_t> gen_residues;
  gen_residues.reserve(generators.size());
  for (const auto& g : generators) gen_residues.push_back(eps_bar(g));

  while (!frontier.empty()) {
    const std::uint64_t x = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const std::uint64_t y = mul_mod(x, gen_residues[i], n);
      if (reached.count(y)) continue;
      reached.emplace(y, reached.at(x) * generators[i]);
      frontier.push_back(y);
    }
  }
  return reached;
}

namespace {

CoverageReport make_report(std::size_t n, std::uint64_t r, const std::vector<SElement>& units,
                           std::string strategy) {
  const TauData t = TauData::make(n, r);
  CoverageReport report;
  report.n = n;
  report.r = r;
  report.m = t.m;
  report.strategy = std::move(strategy);
  std::vector<std::uint64_t> residues;
  for (const auto& u : units) {
    const std::uint64_t e = eps_bar(u);
    report.generators.emplace_back(u, e);
    residues.push_back(e);
  }
  report.subgroup = subgroup_closure(n, residues);
  report.is_full = report.subgroup == units_mod(n);
  return report;
}

}  // namespace

CoverageReport coverage_subgroup(std::size_t n, std::uint64_t r, unsigned depth) {
  return make_report(n, r, fixed_unit_generators(n, r, depth),
                     "generator-based(depth=" + std::to_string(depth) + ")");
}

std::vector<SElement> exhaustive_fixed_units(std::size_t n, std::uint64_t r, unsigned bound,
                                             unsigned threads) {
  const TauData t = TauData::make(n, r);
  const std::size_t dim = n - 1;
  const std::int64_t width = 2 * static_cast<std::int64_t>(bound) + 1;
  const double candidates = std::pow(static_cast<double>(width), static_cast<double>(dim));
  if (candidates > kMaxExhaustiveCandidates)
    throw SearchSpaceTooLarge("exhaustive search over " + std::to_string(width) + "^" +
                              std::to_string(dim) + " candidates exceeds the 1e8 guard");

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, width));

  // Worker w owns every candidate whose leading coefficient index is ≡ w mod threads.
  std::vector<std::vector<SElement>> found(threads);
  auto worker = [&](unsigned w) {
    std::vector<std::int64_t> digits(dim, 0);
    for (std::int64_t lead = w; lead < width; lead += threads) {
      std::fill(digits.begin(), digits.end(), 0);
      digits[0] = lead;
      while (true) {
        std::vector<Integer> c(dim);
        for (std::size_t i = 0; i < dim; ++i)
          c[i] = static_cast<long>(digits[i] - static_cast<std::int64_t>(bound));
        SElement s(n, std::move(c));
        if (is_tau_fixed(s, t) && is_unit(s)) found[w].push_back(std::move(s));

        std::size_t pos = 1;
        while (pos < dim && ++digits[pos] == width) digits[pos++] = 0;
        if (pos >= dim) break;
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  for (auto& th : pool) th.join();

  std::vector<SElement> out;
  for (auto& part : found)
    for (auto& s : part) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

CoverageReport exhaustive_coverage(std::size_t n, std::uint64_t r, unsigned bound,
                                   unsigned threads) {
  return make_report(n, r, exhaustive_fixed_units(n, r, bound, threads),
                     "exhaustive(" + std::to_string(bound) + ")");
}

CyclicReduction reduce_to_cyclic(std::uint64_t p, const std::vector<std::uint64_t>& action_images) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  for (std::uint64_t a : action_images)
    if (a % p == 0) throw InvalidArgument("action image " + std::to_string(a) + " is 0 mod p");

  const std::vector<std::uint64_t> sub = subgroup_closure(p, action_images);
  CyclicReduction out;
  out.m = sub.size();
  for (std::uint64_t g : sub) {
    if (multiplicative_order(g, p) == out.m) {
      out.r = g;
      break;
    }
  }
  return out;
}

}  // namespace amitsur
