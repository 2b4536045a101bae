#include "amitsur/monomial.hpp"

#include <sstream>

#include "amitsur/errors.hpp"
#include "amitsur/quotient_s.hpp"

namespace amitsur {

NormSetMap::NormSetMap(GroupRingElement monomial, Integer shift, Integer source_exp)
    : monomial_(std::move(monomial)), shift_(std::move(shift)), source_(std::move(source_exp)) {
  const std::size_t n = monomial_.order();
  const Integer top = monomial_.coeff(n - 1);
  if (top != 0) {
    monomial_ = monomial_ - top * GroupRingElement::full_norm(n);
    shift_ += source_ * top;
  }
}

NormSetMap NormSetMap::identity(std::size_t n, const Integer& source_exp) {
  return NormSetMap(GroupRingElement::one(n), 0, source_exp);
}

NormSetMap NormSetMap::phi(std::size_t n, const Integer& k, const Integer& source_exp) {
  return NormSetMap(GroupRingElement::one(n), k, source_exp);
}

NormSetMap NormSetMap::monomial_map(const GroupRingElement& p, const Integer& source_exp) {
  return NormSetMap(p, 0, source_exp);
}

Integer NormSetMap::target_exp() const {
  return source_ * augmentation(monomial_) +
         Integer(static_cast<unsigned long>(order())) * shift_;
}

std::string NormSetMap::to_string() const {
  std::ostringstream out;
  out << "phi_" << shift_.get_str() << " o (" << monomial_.to_string() << ") : [N = b^"
      << source_.get_str() << "] -> [N = b^" << target_exp().get_str() << "]";
  return out.str();
}

NormSetMap compose(const NormSetMap& f, const NormSetMap& g) {
  if (f.order() != g.order()) throw OrderMismatch(f.order(), g.order());
  const Integer mid = g.target_exp();
  if (f.source_exp() != mid)
    throw ExponentMismatch("cannot compose: outer map starts at b^" + f.source_exp().get_str() +
                           " but inner map ends at b^" + mid.get_str());
  // φ_a P φ_b Q = φ_a φ_{ε(P) b} P Q
  Integer shift = f.shift() + augmentation(f.monomial()) * g.shift();
  return NormSetMap(f.monomial() * g.monomial(), std::move(shift), g.source_exp());
}

NormSetMap tau_conjugate(const NormSetMap& f, const TauData& t) {
  return NormSetMap(tau_apply(f.monomial(), t), f.shift(), f.source_exp());
}

bool is_identity(const NormSetMap& f) {
  return f.monomial() == GroupRingElement::one(f.order()) && f.shift() == 0;
}

GroupRingElement normalized_lift(const SElement& s) {
  const std::size_t n = s.order();
  const GroupRingElement base = lift(s);
  const Integer aug = augmentation(base);
  const Integer nn(static_cast<unsigned long>(n));
  Integer c;
  mpz_fdiv_q(c.get_mpz_t(), aug.get_mpz_t(), nn.get_mpz_t());
  return base - c * GroupRingElement::full_norm(n);
}

namespace {

// Exact quotient a / n; throws if n does not divide a.
Integer exact_div(const Integer& a, std::size_t n, const char* what) {
  const Integer nn(static_cast<unsigned long>(n));
  if (a % nn != 0) throw InternalConsistency(std::string(what) + " is not divisible by n");
  return a / nn;
}

}  // namespace

Certificate make_certificate(std::size_t n, std::uint64_t r, const Integer& l,
                             const std::vector<SElement>& generators) {
  TauData::make(n, r);
  const Integer nn(static_cast<unsigned long>(n));
  Integer g;
  mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), nn.get_mpz_t());
  if (g != 1) throw InvalidArgument("l must be coprime to n");

  const std::uint64_t target = mod_residue(l, n);
  const auto reps = residue_representatives(n, generators);
  const auto it = reps.find(target);
  if (it == reps.end())
    throw NotCovered("residue " + std::to_string(target) + " mod " + std::to_string(n) +
                     " is not reached by the tau-fixed unit generators");
  const SElement& alpha = it->second;
  const SElement beta = invert(alpha);

  Certificate c;
  c.n = n;
  c.r = r;
  c.l = l;
  c.alpha_tilde = normalized_lift(alpha);
  c.beta_tilde = normalized_lift(beta);
  c.k = exact_div(augmentation(c.alpha_tilde) - l, n, "eps(alpha~) - l");
  c.s = exact_div(augmentation(c.beta_tilde) * l - 1, n, "eps(beta~) l - 1");
  return c;
}

Certificate make_certificate(std::size_t n, std::uint64_t r, const Integer& l, unsigned depth) {
  return make_certificate(n, r, l, fixed_unit_generators(n, r, depth));
}

VerificationRecord verify_certificate(const Certificate& c) {
  VerificationRecord rec;
  auto check = [&rec](std::string name, bool ok, std::string detail = {}) {
    rec.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  TauData t;
  try {
    t = TauData::make(c.n, c.r);
  } catch (const Error& e) {
    check("tau data valid", false, e.what());
    return rec;
  }
  const std::size_t n = c.n;
  if (c.alpha_tilde.order() != n || c.beta_tilde.order() != n) {
    check("group orders agree", false, "alpha~ or beta~ has the wrong order");
    return rec;
  }
  const Integer nn(static_cast<unsigned long>(n));
  const Integer eps_alpha = augmentation(c.alpha_tilde);
  const Integer eps_beta = augmentation(c.beta_tilde);
  const SElement alpha = reduce(c.alpha_tilde);
  const SElement beta = reduce(c.beta_tilde);

  check("alpha~ is tau-fixed", is_tau_fixed(c.alpha_tilde, t));
  check("beta~ is tau-fixed", is_tau_fixed(c.beta_tilde, t));
  check("alpha is a unit of S", is_unit(alpha), "resultant " + norm_resultant(alpha).get_str());
  check("beta is a unit of S", is_unit(beta), "resultant " + norm_resultant(beta).get_str());
  check("alpha * beta = 1 in S", alpha * beta == SElement::one(n));
  check("exponent bookkeeping: eps(alpha~) = l + k n", eps_alpha == c.l + c.k * nn,
        "eps(alpha~) = " + eps_alpha.get_str());
  check("exponent bookkeeping: eps(beta~) l = 1 + n s", eps_beta * c.l == 1 + nn * c.s,
        "eps(beta~) = " + eps_beta.get_str());

  // β̃ α̃ - 1 must be a constant multiple r' of N.
  const GroupRingElement prod = c.beta_tilde * c.alpha_tilde;
  const GroupRingElement rest = prod - GroupRingElement::one(n);
  const Integer r_prime = rest.coeff(0);
  const bool product_form = rest == r_prime * GroupRingElement::full_norm(n);
  check("beta~ alpha~ = 1 + r' N", product_form, "beta~ alpha~ = " + prod.to_string());
  rec.r_prime = r_prime;
  rec.final_shift = r_prime - c.s - eps_beta * c.k;

  // φ_{-s} ∘ β̃ ∘ φ_{-k} ∘ α̃ on [N = b].
  try {
    const NormSetMap a = NormSetMap::monomial_map(c.alpha_tilde, 1);
    const NormSetMap pk = NormSetMap::phi(n, -c.k, a.target_exp());
    const NormSetMap b = NormSetMap::monomial_map(c.beta_tilde, c.l);
    const NormSetMap ps = NormSetMap::phi(n, -c.s, b.target_exp());
    const NormSetMap forward = compose(pk, a);
    check("phi_{-k} o alpha~ lands in [N = b^l]", forward.target_exp() == c.l,
          "target exponent " + forward.target_exp().get_str());
    const NormSetMap composite = compose(ps, compose(b, forward));
    const bool is_phi = composite.monomial() == GroupRingElement::one(n) &&
                        composite.shift() == rec.final_shift;
    check("composite equals phi_{r' - s - eps(beta~) k}", product_form && is_phi,
          composite.to_string());
    check("r' - s - eps(beta~) k = 0", product_form && rec.final_shift == 0,
          "value " + rec.final_shift.get_str());
    check("composite is the identity on [N = b]", is_identity(composite) && composite.source_exp() == 1);
  } catch (const ExponentMismatch& e) {
    check("composite is well-typed", false, e.what());
    check("r' - s - eps(beta~) k = 0", product_form && rec.final_shift == 0,
          "value " + rec.final_shift.get_str());
  }
  return rec;
}

}  // namespace amitsur
