// One line per acceptance criterion; exit status is nonzero if any line fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "amitsur/coverage.hpp"
#include "amitsur/crossed_product.hpp"
#include "amitsur/errors.hpp"
#include "amitsur/field_tower.hpp"
#include "amitsur/group_ring.hpp"
#include "amitsur/monomial.hpp"
#include "amitsur/quotient_s.hpp"

using namespace amitsur;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  if (!in_time) out.fail("runtime over limit");
  if (!out.ok) ++failures;

  std::ostringstream line;
  line << (out.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << std::fixed << std::setprecision(3)
       << secs << " s";
  if (limit_s > 0) line << ", limit " << std::setprecision(0) << limit_s << " s";
  line << ")";
  if (!out.detail.empty()) line << ": " << out.detail;
  std::cout << line.str() << std::endl;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string tag(std::size_t n, std::uint64_t r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

}  // namespace

int main() {
  criterion(1, "dihedral coverage is full for odd n <= 15, r = n-1", 5.0, [] {
    Outcome out;
    for (std::size_t n : {3, 5, 7, 9, 11, 13, 15}) {
      const CoverageReport rep = coverage_subgroup(n, n - 1);
      const TauData t = TauData::make(n, n - 1);
      if (rep.subgroup != units_mod(n)) out.fail(tag(n, n - 1) + " subgroup is not (Z/nZ)*");
      for (const auto& [g, e] : rep.generators) {
        const Integer res = norm_resultant(g);
        if (res != 1 && res != -1) out.fail(tag(n, n - 1) + " generator " + g.to_string() + " is not a unit");
        if (!is_tau_fixed(g, t)) out.fail(tag(n, n - 1) + " generator " + g.to_string() + " is not tau-fixed");
        if (eps_bar(g) != e) out.fail(tag(n, n - 1) + " stale eps-bar for " + g.to_string());
      }
    }
    return out;
  });

  criterion(2, "exhaustive oracle (B=2) agrees with generator coverage (depth 3), n in {3,5,7}", 60.0, [] {
    Outcome out;
    std::size_t pairs = 0;
    for (std::size_t n : {3, 5, 7})
      for (auto r : units_mod(n)) {
        const auto oracle = exhaustive_coverage(n, r, 2).subgroup;
        const auto gens = coverage_subgroup(n, r, 3).subgroup;
        if (oracle != gens) out.fail(tag(n, r) + " subgroups differ");
        ++pairs;
      }
    if (out.ok) out.detail = std::to_string(pairs) + " (n, r) pairs";
    return out;
  });

  criterion(3, "certificates build and verify for every covered l, n in {3,5,7}", 30.0, [] {
    Outcome out;
    std::size_t count = 0;
    for (std::size_t n : {3, 5, 7})
      for (auto r : units_mod(n))
        for (auto l : coverage_subgroup(n, r).subgroup) {
          const Certificate c = make_certificate(n, r, Integer(static_cast<unsigned long>(l)));
          const VerificationRecord v = verify_certificate(c);
          ++count;
          if (!v.passed()) {
            for (const auto& chk : v.checks)
              if (!chk.passed) out.fail(tag(n, r) + " l=" + std::to_string(l) + ": " + chk.name);
          }
          if (v.final_shift != 0) out.fail(tag(n, r) + " l=" + std::to_string(l) + ": nonzero final shift");
          if (c.beta_tilde * c.alpha_tilde != GroupRingElement::one(n) + v.r_prime * GroupRingElement::full_norm(n))
            out.fail(tag(n, r) + " l=" + std::to_string(l) + ": beta~ alpha~ != 1 + r' N");
        }
    if (out.ok) out.detail = std::to_string(count) + " certificates";
    return out;
  });

  criterion(4, "group-ring laws and partial-norm identity, 1000 random cases, n <= 24", 0, [] {
    Outcome out;
    std::mt19937_64 rng(4);
    auto rand_el = [&](std::size_t n) {
      std::vector<Integer> c(n);
      for (auto& x : c) x = static_cast<long>(uniform(rng, -5, 5));
      return GroupRingElement(n, std::move(c));
    };
    for (int i = 0; i < 1000; ++i) {
      const auto n = static_cast<std::size_t>(uniform(rng, 1, 24));
      const auto a = rand_el(n), b = rand_el(n), c = rand_el(n);
      if ((a * b) * c != a * (b * c) || a * b != b * a || a * (b + c) != a * b + a * c ||
          (a + b) + c != a + (b + c) || augmentation(a * b) != augmentation(a) * augmentation(b))
        out.fail("ring law fails at case " + std::to_string(i));
      const auto g = uniform(rng, 0, static_cast<std::int64_t>(n) - 1);
      const auto ii = static_cast<std::uint64_t>(uniform(rng, 1, 3 * static_cast<std::int64_t>(n)));
      const auto jj = static_cast<std::uint64_t>(uniform(rng, 1, 3 * static_cast<std::int64_t>(n)));
      if (partial_norm(n, g, jj) * partial_norm(n, g * static_cast<std::int64_t>(jj), ii) != partial_norm(n, g, ii * jj))
        out.fail("partial-norm identity fails at case " + std::to_string(i));
    }
    return out;
  });

  criterion(5, "S3 tower: self-checks, tau-hat on norm sets, commutation with fixed monomials and phi_k", 10.0, [] {
    Outcome out;
    const FieldTower tw = builtin_s3();
    for (const auto& c : FieldTower::self_check(tw.data()))
      if (!c.passed) out.fail("self-check: " + c.name);

    const TauData t = tw.tau_data();
    std::vector<GroupRingElement> fixed;
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c) {
          const GroupRingElement p(3, {Integer(a), Integer(b), Integer(c)});
          if (is_tau_fixed(p, t) && p != GroupRingElement::zero(3)) fixed.push_back(p);
        }

    std::size_t points = 0;
    for (long k : {1L, -1L, 2L, 0L}) {
      const auto pts = sample_points(tw, Integer(k), 12, 100 + static_cast<std::uint64_t>(k + 5));
      Matrix rows;
      for (const auto& p : pts) rows.push_back(p.x);
      if (row_reduce(tw.base(), rows, tw.dim()).rank() != tw.dim())
        out.fail("points with k=" + std::to_string(k) + " do not span E");
      if (k == 1 && pts.front().x != tw.scalar(-1)) out.fail("x = -1 missing from the k=1 points");
      for (const auto& pt : pts) {
        ++points;
        const NormSetPoint th = tau_hat(tw, pt);
        if (!on_norm_set(tw, th.x, th.k) || th.k != pt.k) out.fail("tau-hat leaves the norm set");
        if (tau_hat(tw, th).x != pt.x) out.fail("tau-hat^2 != id");
        for (long j = -3; j <= 3; ++j) {
          const NormSetPoint a = tau_hat(tw, phi_k_apply(tw, pt, Integer(j)));
          const NormSetPoint b = phi_k_apply(tw, th, Integer(j));
          if (a.x != b.x || a.k != b.k) out.fail("tau-hat does not commute with phi_" + std::to_string(j));
        }
        for (const auto& p : fixed) {
          const NormSetPoint image{apply_monomial(tw, p, pt.x), pt.k * augmentation(p)};
          if (tau_hat(tw, image).x != apply_monomial(tw, p, th.x))
            out.fail("tau-hat does not commute with " + p.to_string());
        }
      }
    }
    if (out.ok)
      out.detail = std::to_string(fixed.size()) + " fixed monomials x " + std::to_string(points) + " points";
    return out;
  });

  criterion(6, "crossed-product correspondence on 100 seeded instances, q in {3,5}, n in {2,3}", 30.0, [] {
    Outcome out;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t q = i % 2 ? 5 : 3;
      const std::size_t n = (i / 2) % 2 ? 3 : 2;
      const std::string where = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " seed=" + std::to_string(i);
      const RandomInstance inst = random_cyclic_instance(q, n, i);
      const CrossedProduct& a = inst.algebra;
      const FieldTower& tw = a.tower();
      if (!is_splitting(a, inst.chain)) out.fail(where + ": delta z != c");
      const LeftIdeal ideal = lambda_inv(a, inst.chain);
      if (ideal.basis.rank() != (n * n - n) * tw.l_dimension()) out.fail(where + ": wrong ideal dimension");
      const SplittingChain back = lambda(a, ideal);
      if (back != inst.chain) out.fail(where + ": lambda(lambda_inv(z)) != z");
      if (lambda_inv(a, back) != ideal) out.fail(where + ": lambda_inv(lambda(I)) != I");

      Cocycle bad = a.cocycle();
      bad[1][n - 1] = tw.mul(bad[1][n - 1], tw.basis_element(1));
      bool rejected = false;
      try {
        CrossedProduct(tw, bad);
      } catch (const CocycleError&) {
        rejected = true;
      }
      if (!rejected) out.fail(where + ": corrupted cocycle accepted");

      SplittingChain scaled = inst.chain;
      for (auto& z : scaled.z) z = tw.scale(Rational(2), z);
      rejected = false;
      try {
        lambda_inv(a, scaled);
      } catch (const NonSplittingChain&) {
        rejected = true;
      }
      if (!rejected) out.fail(where + ": corrupted chain accepted");
    }
    return out;
  });

  criterion(7, "norm-element identity (i <= 2n, spanning sets) and tensor-square symbol algebra", 10.0, [] {
    Outcome out;
    std::size_t checks = 0;
    auto sweep = [&](const CrossedProduct& a, const std::string& label) {
      const FieldTower& tw = a.tower();
      for (std::size_t j = 0; j < tw.dim(); ++j)
        for (std::uint64_t i = 1; i <= 2 * a.n(); ++i) {
          ++checks;
          if (!norm_element_check(a, tw.basis_element(j), i).passed)
            out.fail(label + ": fails for basis " + std::to_string(j) + ", i=" + std::to_string(i));
        }
    };
    sweep(random_cyclic_instance(3, 2, 1).algebra, "F_9");
    sweep(random_cyclic_instance(3, 3, 1).algebra, "F_27");
    sweep(random_cyclic_instance(5, 3, 2).algebra, "F_125");
    const FieldTower s3 = builtin_s3();
    const CrossedProduct a3(s3, standard_cyclic_cocycle(s3, s3.b()));
    sweep(a3, "S3");
    const RandomInstance inst = random_cyclic_instance(3, 2, 7);
    for (const auto& c : tensor_power_check(inst.algebra, 2)) {
      ++checks;
      if (!c.passed) out.fail("tensor square: " + c.name);
    }
    if (out.ok) out.detail = std::to_string(checks) + " checks";
    return out;
  });

  criterion(8, "canonical lift of a tau-fixed S-element is tau-fixed, 500 random cases, n <= 15", 0, [] {
    Outcome out;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
      const auto n = static_cast<std::size_t>(uniform(rng, 2, 15));
      const auto units = units_mod(n);
      const TauData t = TauData::make(n, units[rng() % units.size()]);
      std::vector<Integer> c(n - 1);
      for (auto& x : c) x = static_cast<long>(uniform(rng, -4, 4));
      SElement img(n, c), s = SElement::zero(n);
      for (std::uint64_t k = 0; k < t.m; ++k) {
        s = s + img;
        img = tau_apply_s(img, t);
      }
      if (!is_tau_fixed(s, t)) out.fail("orbit sum is not fixed: " + tag(n, t.r));
      if (!is_tau_fixed(lift(s), t)) out.fail(tag(n, t.r) + " s=" + s.to_string());
    }
    return out;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
