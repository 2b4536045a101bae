#include "suites.hpp"

#include <map>
#include <random>

#include "amitsur/coverage.hpp"
#include "amitsur/crossed_product.hpp"
#include "amitsur/errors.hpp"
#include "amitsur/field_tower.hpp"
#include "amitsur/fixture.hpp"
#include "amitsur/group_ring.hpp"
#include "amitsur/monomial.hpp"
#include "amitsur/quotient_s.hpp"

namespace amitsur::cli {

namespace {

// Aggregates many cases under one named invariant; keeps insertion order.
class Tally {
 public:
  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, entries_.size()).first;
      entries_.push_back({name, 0, 0, {}});
    }
    Entry& e = entries_[it->second];
    ++e.total;
    if (ok) {
      ++e.ok;
    } else if (e.first_failure.empty()) {
      e.first_failure = detail.empty() ? "case " + std::to_string(e.total) : detail;
    }
  }

  void record(const CheckResult& c, const std::string& prefix = {}) {
    record(prefix + c.name, c.passed, c.detail);
  }

  std::vector<CheckResult> results() const {
    std::vector<CheckResult> out;
    for (const auto& e : entries_) {
      std::string detail = std::to_string(e.ok) + "/" + std::to_string(e.total) + " cases";
      if (!e.first_failure.empty()) detail += "; first failure: " + e.first_failure;
      out.push_back({e.name, e.ok == e.total, detail});
    }
    return out;
  }

 private:
  struct Entry {
    std::string name;
    std::size_t ok, total;
    std::string first_failure;
  };
  std::map<std::string, std::size_t> index_;
  std::vector<Entry> entries_;
};

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GroupRingElement random_element(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 3) {
  std::vector<Integer> c(n);
  for (auto& x : c) x = static_cast<long>(uniform(rng, -bound, bound));
  return GroupRingElement(n, std::move(c));
}

SElement random_s(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 3) {
  std::vector<Integer> c(n - 1);
  for (auto& x : c) x = static_cast<long>(uniform(rng, -bound, bound));
  return SElement(n, std::move(c));
}

std::uint64_t random_unit(std::mt19937_64& rng, std::size_t n) {
  const auto units = units_mod(n);
  return units[rng() % units.size()];
}

GroupRingElement orbit_sum(const GroupRingElement& p, const TauData& t) {
  GroupRingElement acc = GroupRingElement::zero(p.order());
  GroupRingElement img = p;
  for (std::uint64_t i = 0; i < t.m; ++i) {
    acc = acc + img;
    img = tau_apply(img, t);
  }
  return acc;
}

SElement orbit_sum(const SElement& s, const TauData& t) {
  SElement acc = SElement::zero(s.order());
  SElement img = s;
  for (std::uint64_t i = 0; i < t.m; ++i) {
    acc = acc + img;
    img = tau_apply_s(img, t);
  }
  return acc;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group-ring", "quotient", "monomial", "tower", "crossed"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed, const SuiteOptions& opts) {
  if (name == "group-ring") return group_ring_suite(seed, opts.group_ring_cases);
  if (name == "quotient") return quotient_suite(seed);
  if (name == "monomial") return monomial_suite(seed);
  if (name == "tower") return tower_suite(seed, opts.tower_fixture);
  if (name == "crossed") return crossed_suite(seed, opts.crossed_instances);
  throw InvalidArgument("unknown suite '" + name + "'");
}

std::vector<CheckResult> group_ring_suite(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 24));
    const std::string where = "n=" + std::to_string(n) + ", case " + std::to_string(c);
    const auto a = random_element(rng, n), b = random_element(rng, n), d = random_element(rng, n);

    tally.record("addition is commutative and associative", a + b == b + a && (a + b) + d == a + (b + d), where);
    tally.record("multiplication is commutative", a * b == b * a, where);
    tally.record("multiplication is associative", (a * b) * d == a * (b * d), where);
    tally.record("multiplication distributes over addition", a * (b + d) == a * b + a * d, where);
    tally.record("one is neutral", a * GroupRingElement::one(n) == a, where);
    tally.record("augmentation is a ring homomorphism",
                 augmentation(a * b) == augmentation(a) * augmentation(b) &&
                     augmentation(a + b) == augmentation(a) + augmentation(b),
                 where);

    const GroupRingElement norm = GroupRingElement::full_norm(n);
    const Integer nn(static_cast<unsigned long>(n));
    tally.record("sigma N = N and N^2 = n N",
                 GroupRingElement::sigma_power(n, 1) * norm == norm && norm * norm == nn * norm, where);

    const auto g = uniform(rng, 0, static_cast<std::int64_t>(n) - 1);
    const auto i = static_cast<std::uint64_t>(uniform(rng, 1, 2 * static_cast<std::int64_t>(n)));
    const auto j = static_cast<std::uint64_t>(uniform(rng, 1, 2 * static_cast<std::int64_t>(n)));
    const auto gj = static_cast<std::int64_t>(j) * g;
    tally.record("partial-norm identity N_g^j N_{g^j}^i = N_g^{ij}",
                 partial_norm(n, g, j) * partial_norm(n, gj, i) == partial_norm(n, g, i * j),
                 where + ", g=" + std::to_string(g) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
    tally.record("partial norm N^n is the full norm", partial_norm(n, 1, n) == norm, where);

    const TauData t = TauData::make(n, random_unit(rng, n));
    tally.record("tau acts as a ring automorphism",
                 tau_apply(a * b, t) == tau_apply(a, t) * tau_apply(b, t) &&
                     tau_apply(a + b, t) == tau_apply(a, t) + tau_apply(b, t),
                 where);
    GroupRingElement iter = a;
    for (std::uint64_t k = 0; k < t.m; ++k) iter = tau_apply(iter, t);
    tally.record("tau has order m", iter == a, where);
    tally.record("orbit sums are tau-fixed", is_tau_fixed(orbit_sum(a, t), t), where);
  }
  return tally.results();
}

std::vector<CheckResult> quotient_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (std::size_t c = 0; c < 300; ++c) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 12));
    const std::string where = "n=" + std::to_string(n) + ", case " + std::to_string(c);
    const SElement a = random_s(rng, n), b = random_s(rng, n);
    const GroupRingElement p = random_element(rng, n), q = random_element(rng, n);

    tally.record("reduce(lift(s)) = s", reduce(lift(a)) == a, where);
    tally.record("reduce is a ring homomorphism",
                 reduce(p * q) == reduce(p) * reduce(q) && reduce(p + q) == reduce(p) + reduce(q), where);
    tally.record("reduce kills N", reduce(GroupRingElement::full_norm(n)) == SElement::zero(n), where);
    tally.record("rho^n = 1", pow(SElement::rho_power(n, 1), n) == SElement::one(n), where);
    tally.record("resultant is multiplicative", norm_resultant(a * b) == norm_resultant(a) * norm_resultant(b),
                 where);

    bool agree = true;
    if (is_unit(a)) {
      try {
        agree = a * invert(a) == SElement::one(n);
      } catch (const NotInvertible&) {
        agree = false;
      }
    } else {
      try {
        invert(a);
        agree = false;
      } catch (const NotInvertible&) {
      }
    }
    tally.record("unit test agrees with inversion", agree, where + ", s=" + a.to_string());

    const TauData t = TauData::make(n, random_unit(rng, n));
    tally.record("tau commutes with reduce", reduce(tau_apply(p, t)) == tau_apply_s(reduce(p), t), where);
    if (is_unit(a) && is_unit(b))
      tally.record("eps-bar is multiplicative on units", eps_bar(a * b) == (eps_bar(a) * eps_bar(b)) % n, where);
  }
  for (std::size_t c = 0; c < 500; ++c) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 15));
    const TauData t = TauData::make(n, random_unit(rng, n));
    const SElement s = orbit_sum(random_s(rng, n), t);
    tally.record("canonical lift of a tau-fixed element is tau-fixed", is_tau_fixed(s, t) && is_tau_fixed(lift(s), t),
                 "n=" + std::to_string(n) + ", r=" + std::to_string(t.r) + ", s=" + s.to_string());
  }
  for (std::size_t n = 3; n <= 15; n += 2) {
    const auto gens = dihedral_generators(n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string where = "n=" + std::to_string(n) + ": " + gens[i].to_string();
      tally.record("dihedral generators are tau-fixed", is_tau_fixed(gens[i], TauData::make(n, n - 1)), where);
      if (i == 0) {
        tally.record("rho + rho^-1 is a unit", is_unit(gens[i]), where);
      } else {
        // rho^-k + ... + rho^k = rho^-k (rho^(2k+1) - 1) / (rho - 1)
        const bool expected = gcd_u64(2 * i + 1, n) == 1;
        tally.record("symmetric sum of length L is a unit iff gcd(L, n) = 1", is_unit(gens[i]) == expected, where);
      }
    }
  }
  return tally.results();
}

std::vector<CheckResult> monomial_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (std::size_t c = 0; c < 300; ++c) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 12));
    const std::string where = "n=" + std::to_string(n) + ", case " + std::to_string(c);
    const Integer src(static_cast<long>(uniform(rng, -4, 4)));
    const NormSetMap f1(random_element(rng, n, 2), Integer(static_cast<long>(uniform(rng, -3, 3))), src);
    const NormSetMap f2(random_element(rng, n, 2), Integer(static_cast<long>(uniform(rng, -3, 3))), f1.target_exp());
    const NormSetMap f3(random_element(rng, n, 2), Integer(static_cast<long>(uniform(rng, -3, 3))), f2.target_exp());
    tally.record("composition is associative", compose(f3, compose(f2, f1)) == compose(compose(f3, f2), f1), where);
    tally.record("identity is neutral",
                 compose(f1, NormSetMap::identity(n, src)) == f1 &&
                     compose(NormSetMap::identity(n, f1.target_exp()), f1) == f1,
                 where);
    tally.record("canonical form has zero top coefficient", f1.monomial().coeff(n - 1) == 0, where);

    const Integer j(static_cast<long>(uniform(rng, -3, 3))), k(static_cast<long>(uniform(rng, -3, 3)));
    tally.record("phi_j o phi_k = phi_{j+k}",
                 compose(NormSetMap::phi(n, j, src + Integer(static_cast<unsigned long>(n)) * k),
                         NormSetMap::phi(n, k, src)) == NormSetMap::phi(n, j + k, src),
                 where);

    const GroupRingElement p = random_element(rng, n, 2);
    const NormSetMap pm = NormSetMap::monomial_map(p, src);
    const NormSetMap lhs = compose(NormSetMap::monomial_map(p, src + Integer(static_cast<unsigned long>(n)) * k),
                                   NormSetMap::phi(n, k, src));
    const NormSetMap rhs = compose(NormSetMap::phi(n, augmentation(p) * k, pm.target_exp()), pm);
    tally.record("P o phi_k = phi_{eps(P) k} o P", lhs == rhs, where);
    tally.record("target exponent is i eps(P) + n shift",
                 f1.target_exp() ==
                     src * augmentation(f1.monomial()) + Integer(static_cast<unsigned long>(n)) * f1.shift(),
                 where);

    const TauData t = TauData::make(n, random_unit(rng, n));
    const NormSetMap fixed = NormSetMap::monomial_map(orbit_sum(p, t), src);
    tally.record("tau conjugation fixes tau-fixed monomials", tau_conjugate(fixed, t) == fixed, where);
    NormSetMap iter = f1;
    for (std::uint64_t i = 0; i < t.m; ++i) iter = tau_conjugate(iter, t);
    tally.record("tau conjugation has order m", iter == f1, where);
  }

  for (std::size_t n : {3, 5, 7})
    for (auto r : units_mod(n)) {
      const CoverageReport cov = coverage_subgroup(n, r);
      for (auto l : cov.subgroup) {
        const std::string where = "n=" + std::to_string(n) + ", r=" + std::to_string(r) + ", l=" + std::to_string(l);
        try {
          const VerificationRecord v = verify_certificate(make_certificate(n, r, Integer(static_cast<unsigned long>(l))));
          for (const auto& c : v.checks) tally.record("certificate: " + c.name, c.passed, where);
        } catch (const Error& e) {
          tally.record("certificate: construction", false, where + ": " + e.what());
        }
      }
    }
  return tally.results();
}

namespace {

std::vector<GroupRingElement> fixed_monomials(const FieldTower& tw, std::mt19937_64& rng) {
  const std::size_t n = tw.n();
  const TauData t = tw.tau_data();
  std::vector<GroupRingElement> out;
  if (n <= 3) {
    // every tau-fixed element with coefficients in [-2, 2]
    std::vector<Integer> c(n, Integer(-2));
    while (true) {
      const GroupRingElement p(n, c);
      if (is_tau_fixed(p, t) && p != GroupRingElement::zero(n)) out.push_back(p);
      std::size_t pos = 0;
      while (pos < n && c[pos] == 2) c[pos++] = -2;
      if (pos == n) break;
      c[pos] += 1;
    }
  } else {
    for (int i = 0; i < 40; ++i) out.push_back(orbit_sum(random_element(rng, n, 2), t));
  }
  return out;
}

void tower_checks(Tally& tally, const FieldTower& tw, std::uint64_t seed, const std::string& prefix) {
  std::mt19937_64 rng(seed);
  for (const auto& c : FieldTower::self_check(tw.data())) tally.record(c, prefix + "self-check: ");

  const auto base_pts = sample_points(tw, 1, 6 * tw.dim(), seed);
  Matrix rows;
  for (const auto& pt : base_pts) rows.push_back(pt.x);
  const std::size_t rank = row_reduce(tw.base(), rows, tw.dim()).rank();
  tally.record(prefix + "sample points span E", rank == tw.dim(), "rank " + std::to_string(rank));

  const auto monomials = fixed_monomials(tw, rng);
  for (long k : {1L, -1L, 2L}) {
    const auto pts = sample_points(tw, Integer(k), 2 * tw.dim(), seed + static_cast<std::uint64_t>(k + 7));
    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
      const NormSetPoint& pt = pts[idx];
      const std::string where = "k=" + std::to_string(k) + ", x=" + tw.format(pt.x);
      const NormSetPoint th = tau_hat(tw, pt);
      tally.record(prefix + "tau-hat preserves norm sets", on_norm_set(tw, th.x, th.k) && th.k == pt.k, where);
      NormSetPoint iter = pt;
      for (std::uint64_t i = 0; i < tw.m(); ++i) iter = tau_hat(tw, iter);
      tally.record(prefix + "tau-hat has order m", iter.x == pt.x, where);

      for (long j = -3; j <= 3; ++j) {
        const NormSetPoint a = tau_hat(tw, phi_k_apply(tw, pt, Integer(j)));
        const NormSetPoint b = phi_k_apply(tw, tau_hat(tw, pt), Integer(j));
        tally.record(prefix + "tau-hat commutes with phi_k", a.x == b.x && a.k == b.k, where + ", j=" + std::to_string(j));
        const NormSetPoint back = phi_k_apply(tw, phi_k_apply(tw, pt, Integer(j)), Integer(-j));
        tally.record(prefix + "phi_j then phi_{-j} is the identity", back.x == pt.x && back.k == pt.k, where);
      }

      // one point per exponent is enough to sweep every monomial; the rest get a sample
      const std::size_t stride = idx == 0 ? 1 : 7;
      for (std::size_t mi = idx % stride; mi < monomials.size(); mi += stride) {
        const GroupRingElement& p = monomials[mi];
        const Integer e = augmentation(p);
        const NormSetPoint image{apply_monomial(tw, p, pt.x), pt.k * e};
        const NormSetPoint lhs = tau_hat(tw, image);
        const FieldElement rhs = apply_monomial(tw, p, tau_hat(tw, pt).x);
        tally.record(prefix + "tau-hat commutes with fixed monomials", lhs.x == rhs,
                     where + ", P=" + p.to_string());
      }

      const GroupRingElement q = random_element(rng, tw.n(), 2);
      const FieldElement qx = apply_monomial(tw, q, pt.x);
      tally.record(prefix + "norm bookkeeping N(P(x)) = b^(k eps(P))",
                   tw.norm(qx) == tw.pow(tw.b(), pt.k * augmentation(q)), where + ", P=" + q.to_string());
      const Integer j(static_cast<long>(uniform(rng, -2, 2)));
      tally.record(prefix + "P o phi_k = phi_{eps(P) k} o P on points",
                   apply_monomial(tw, q, phi_k_apply(tw, pt, j).x) == phi_k_apply(tw, NormSetPoint{qx, pt.k * augmentation(q)}, augmentation(q) * j).x,
                   where);

      const NormSetMap g(random_element(rng, tw.n(), 2), Integer(static_cast<long>(uniform(rng, -2, 2))), pt.k);
      const NormSetMap f(random_element(rng, tw.n(), 2), Integer(static_cast<long>(uniform(rng, -2, 2))), g.target_exp());
      const NormSetPoint composed = apply_map(tw, compose(f, g), pt);
      const NormSetPoint stepwise = apply_map(tw, f, apply_map(tw, g, pt));
      tally.record(prefix + "formal and pointwise composition agree",
                   composed.x == stepwise.x && composed.k == stepwise.k && on_norm_set(tw, composed.x, composed.k),
                   where);
    }
  }
}

}  // namespace

std::vector<CheckResult> tower_suite(std::uint64_t seed, const std::optional<std::string>& fixture) {
  Tally tally;
  if (fixture) {
    tower_checks(tally, load_tower_file(*fixture), seed, "");
    return tally.results();
  }

  const FieldTower s3 = builtin_s3();
  tower_checks(tally, s3, seed, "");
  const FieldElement minus_one = s3.scalar(-1);
  tally.record("N(-1) = b in the S3 model", s3.norm(minus_one) == s3.b());
  tally.record("N(c) = 2 in the S3 model", s3.norm(s3.basis_element(2)) == s3.scalar(2));
  const NormSetPoint th = tau_hat(s3, NormSetPoint{minus_one, 1});
  tally.record("tau-hat(-1) = -1 in the S3 model", th.x == minus_one && th.k == 1);
  tally.record("fixed field of sigma has degree 2", s3.l_dimension() == 2);
  tally.record("fixed field of tau has degree 3", s3.fixed_dimension(s3.data().tau) == 3);

  for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{3, 2}, {5, 2}, {3, 3}, {4, 2}}) {
    const FieldTower ff = builtin_finite(q, n, 1);
    const std::string prefix = "F_" + std::to_string(q) + "^" + std::to_string(n) + ": ";
    tower_checks(tally, ff, seed, prefix);
  }
  // norm-one elements of F_9 over F_3: (9 - 1) / (3 - 1) = 4
  const FieldTower f9 = builtin_finite(3, 2, 1);
  std::size_t count = 0;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      const FieldElement x{Rational(a), Rational(b)};
      if (on_norm_set(f9, x, 0)) ++count;
    }
  tally.record("F_9 has 4 elements of norm 1", count == 4, std::to_string(count) + " found");
  return tally.results();
}

std::vector<CheckResult> crossed_suite(std::uint64_t seed, std::size_t instances) {
  Tally tally;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::uint64_t q = i % 2 == 0 ? 3 : 5;
    const std::size_t n = (i / 2) % 2 == 0 ? 2 : 3;
    const std::uint64_t inst_seed = seed * 1000003ULL + i;
    const std::string where = "q=" + std::to_string(q) + ", n=" + std::to_string(n) + ", seed=" + std::to_string(inst_seed);
    try {
      const RandomInstance inst = random_cyclic_instance(q, n, inst_seed);
      const CrossedProduct& a = inst.algebra;
      const FieldTower& tw = a.tower();
      tally.record("delta z = c", is_splitting(a, inst.chain), where);

      const LeftIdeal ideal = lambda_inv(a, inst.chain);
      for (const auto& c : left_ideal_checks(a, ideal)) tally.record(c.name, c.passed, where);
      tally.record("dim A/I = n", a.dim() - ideal.basis.rank() == n * tw.l_dimension(), where);
      const SplittingChain back = lambda(a, ideal);
      tally.record("lambda(lambda_inv(z)) = z", back == inst.chain, where);
      tally.record("lambda_inv(lambda(I)) = I", lambda_inv(a, back) == ideal, where);

      std::uint64_t state = inst_seed;
      bool assoc = true;
      for (int k = 0; k < 3; ++k) {
        CrossedElement x = a.zero(), y = a.zero(), z = a.zero();
        for (std::size_t g = 0; g < n; ++g) {
          x[g] = random_nonzero(tw, state);
          y[g] = random_nonzero(tw, state);
          z[g] = random_nonzero(tw, state);
        }
        assoc = assoc && a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z));
      }
      tally.record("multiplication is associative", assoc, where);
      tally.record("u^n = b", a.pow(a.u(), n) == a.embed(tw.norm(inst.y)), where);

      // negative controls
      SplittingChain scaled = inst.chain;
      for (auto& z : scaled.z) z = tw.scale(Rational(2), z);
      bool rejected = false;
      try {
        lambda_inv(a, scaled);
      } catch (const NonSplittingChain&) {
        rejected = true;
      }
      tally.record("scaled chain is rejected", rejected && !is_splitting(a, scaled), where);

      Cocycle bad = a.cocycle();
      bad[1][n - 1] = tw.mul(bad[1][n - 1], tw.basis_element(1));
      rejected = false;
      try {
        CrossedProduct(tw, bad);
      } catch (const CocycleError&) {
        rejected = true;
      }
      const CrossedProduct broken = CrossedProduct::unchecked(tw, bad);
      const auto basis = broken.basis();
      bool nonassoc = false;
      for (std::size_t x = 0; x < basis.size() && !nonassoc; ++x)
        for (std::size_t y = 0; y < basis.size() && !nonassoc; ++y)
          for (std::size_t z = 0; z < basis.size() && !nonassoc; ++z)
            nonassoc = broken.mul(broken.mul(basis[x], basis[y]), basis[z]) !=
                       broken.mul(basis[x], broken.mul(basis[y], basis[z]));
      tally.record("corrupted cocycle is rejected and breaks associativity", rejected && nonassoc, where);

      Matrix rows = ideal.basis.rows;
      for (std::size_t j = 0; j < tw.dim(); ++j) rows.push_back(a.flatten(a.embed(tw.basis_element(j))));
      const LeftIdeal big{row_reduce(tw.base(), rows, a.dim())};
      rejected = false;
      try {
        lambda(a, big);
      } catch (const NotInOpenSubset&) {
        rejected = true;
      }
      tally.record("ideal containing E is outside the open subset", rejected, where);
    } catch (const Error& e) {
      tally.record("instance completed", false, where + ": " + e.what());
    }
  }

  // norm-element identity on spanning sets
  {
    const RandomInstance inst = random_cyclic_instance(3, 3, seed);
    const FieldTower& tw = inst.algebra.tower();
    std::uint64_t state = seed ^ 0x5bd1e995ULL;
    std::vector<FieldElement> xs;
    for (std::size_t j = 0; j < tw.dim(); ++j) xs.push_back(tw.basis_element(j));
    xs.push_back(random_nonzero(tw, state));
    for (const auto& x : xs)
      for (std::uint64_t i = 1; i <= 2 * tw.n(); ++i)
        tally.record("norm-element identity (F_27 over F_3)", norm_element_check(inst.algebra, x, i).passed,
                     "x=" + tw.format(x) + ", i=" + std::to_string(i));
  }
  const FieldTower s3 = builtin_s3();
  const CrossedProduct a3(s3, standard_cyclic_cocycle(s3, s3.b()));
  for (std::size_t j = 0; j < s3.dim(); ++j)
    for (std::uint64_t i = 1; i <= 2 * s3.n(); ++i)
      tally.record("norm-element identity (S3 model)", norm_element_check(a3, s3.basis_element(j), i).passed,
                   "x=" + s3.format(s3.basis_element(j)) + ", i=" + std::to_string(i));
  for (const auto& c : tau_action_check(a3)) tally.record(c, "S3 model: ");

  for (std::uint64_t q : {3ULL, 5ULL}) {
    const RandomInstance inst = random_cyclic_instance(q, 2, seed + q);
    for (unsigned l : {1U, 2U})
      for (const auto& c : tensor_power_check(inst.algebra, l))
        tally.record(c, "tensor power l=" + std::to_string(l) + ": ");
  }
  return tally.results();
}

}  // namespace amitsur::cli
