#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amitsur/check.hpp"
#include "amitsur/group_ring.hpp"
#include "amitsur/linalg.hpp"
#include "amitsur/numbers.hpp"

namespace amitsur {

class NormSetMap;

// Coordinates of an element of E over the prime field, in the tower's basis.
using FieldElement = std::vector<Rational>;

// Raw description of a tower F ⊂ {L, K} ⊂ E.
//
// E is given as a commutative algebra of dimension D over the prime field
// (Q or Z/pZ) with basis element 0 equal to 1. `mul[i][j]` holds the
// coordinates of e_i·e_j. `sigma[i][j]` is the coefficient of e_i in σ(e_j),
// likewise for `tau`. L = E^σ, K = E^τ.
struct TowerData {
  std::string name;
  std::uint64_t characteristic = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<FieldElement>> mul;
  Matrix sigma;
  Matrix tau;
  std::size_t n = 0;    // order of σ
  std::uint64_t m = 1;  // order of τ
  std::uint64_t r = 1;  // τστ^{-1} = σ^r
  std::uint64_t t = 1;  // r t = s n + 1
  Integer s = 0;
  FieldElement b;       // in L, τ(b) = λ^n b^r
  FieldElement lambda;  // in L
};

// Immutable, self-checked exact model of the Galois tower.
class FieldTower {
 public:
  // Runs self_check on `data` and throws InvalidArgument listing the failures.
  explicit FieldTower(TowerData data);

  // Every structural invariant of `data`, one record per check.
  static std::vector<CheckResult> self_check(const TowerData& data);

  const TowerData& data() const { return data_; }
  const BaseField& base() const { return field_; }
  std::size_t dim() const { return data_.basis.size(); }
  std::size_t n() const { return data_.n; }
  std::uint64_t m() const { return data_.m; }
  std::uint64_t r() const { return data_.r; }
  TauData tau_data() const { return TauData::make(data_.n, data_.r); }
  const FieldElement& b() const { return data_.b; }
  const FieldElement& lambda() const { return data_.lambda; }

  FieldElement zero() const { return FieldElement(dim(), Rational(0)); }
  FieldElement one() const;
  FieldElement scalar(const Rational& c) const;
  FieldElement basis_element(std::size_t i) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement scale(const Rational& c, const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // x^{-1} = (σ(x)⋯σ^{n-1}(x)) · N(x)^{-1}, with N(x) inverted inside L.
  FieldElement inverse(const FieldElement& x) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  // Negative exponents invert first.
  FieldElement pow(const FieldElement& x, const Integer& e) const;
  bool is_zero(const FieldElement& x) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;

  // σ^k(x) for any integer k.
  FieldElement sigma(const FieldElement& x, std::int64_t k = 1) const;
  // τ^k(x) for any integer k.
  FieldElement tau(const FieldElement& x, std::int64_t k = 1) const;

  // x·σ(x)⋯σ^{j-1}(x).
  FieldElement partial_norm(const FieldElement& x, std::uint64_t j) const;
  // N_{E/L}(x) = x·σ(x)⋯σ^{n-1}(x).
  FieldElement norm(const FieldElement& x) const;

  // Dimension over the prime field of the subfield fixed by the matrix.
  std::size_t fixed_dimension(const Matrix& automorphism) const;
  // [L : prime field].
  std::size_t l_dimension() const { return fixed_dimension(data_.sigma); }

  // Coordinates reduced into the base field (mod p in characteristic p).
  FieldElement normalize(FieldElement x) const;

  std::string format(const FieldElement& x) const;

 private:
  FieldElement apply(const Matrix& mat, const FieldElement& x) const;
  FieldElement invert_in_subfield(const FieldElement& x) const;

  TowerData data_;
  BaseField field_;
  std::vector<Matrix> sigma_powers_;
  std::vector<Matrix> tau_powers_;
};

// E = Q(ζ, ∛2) with σ(∛2) = ζ∛2, τ(ζ) = ζ², so G = S₃ = C₃ ⋊ C₂ with r = 2.
// Basis {1, ζ, c, ζc, c², ζc²} (c = ∛2), b = λ = -1, t = 2, s = 1.
FieldTower builtin_s3();

// E = F_{q^n} over L = F_q with σ the q-power Frobenius and trivial τ
// (m = 1, r = 1, t = 1, s = 0, λ = 1). The modulus is the smallest monic
// irreducible of degree [E : F_p], ordering coefficient vectors as base-p
// numbers with the constant term least significant. `b_value` is read in F_p.
FieldTower builtin_finite(std::uint64_t q, std::size_t n, std::int64_t b_value);

// A point x of the norm set [N_{E/L} = b^k].
struct NormSetPoint {
  FieldElement x;
  Integer k;
};

bool on_norm_set(const FieldTower& tw, const FieldElement& x, const Integer& k);

// Validating constructor; throws InvalidArgument if N(x) != b^k.
NormSetPoint make_point(const FieldTower& tw, FieldElement x, Integer k);

// P(x) = ∏ σ^i(x)^{n_i}. Throws NotInvertible if x = 0 and some n_i < 0.
FieldElement apply_monomial(const FieldTower& tw, const GroupRingElement& p, const FieldElement& x);

// The τ-action on [N = b^k]: x ↦ τ(N_σ^t(x)) / (λ^{kt} b^{ks}).
NormSetPoint tau_hat(const FieldTower& tw, const NormSetPoint& pt);

// φ_j: [N = b^i] -> [N = b^{i + n j}], x ↦ x b^j.
NormSetPoint phi_k_apply(const FieldTower& tw, const NormSetPoint& pt, const Integer& j);

// Evaluates a canonical norm-set map on a point of its source norm set.
NormSetPoint apply_map(const FieldTower& tw, const NormSetMap& f, const NormSetPoint& pt);

// Some x with N(x) = b. Tries b, -1 and 1 first; finite models fall back to
// enumerating E. Throws InvalidArgument if nothing is found.
FieldElement norm_b_point(const FieldTower& tw);

// `count` points of [N = b^k]: w^k · y/σ(y) for w = norm_b_point and seeded
// random nonzero y with coefficients in [-2, 2]. The first point is w^k itself.
std::vector<NormSetPoint> sample_points(const FieldTower& tw, const Integer& k,
                                        std::size_t count, std::uint64_t seed);

}  // namespace amitsur
