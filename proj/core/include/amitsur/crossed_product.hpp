#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "amitsur/check.hpp"
#include "amitsur/field_tower.hpp"
#include "amitsur/linalg.hpp"

namespace amitsur {

// Σ_g x_g u_g over the cyclic group <σ>: entry g holds x_g ∈ E.
using CrossedElement = std::vector<FieldElement>;

// c[i][j] = c(σ^i, σ^j) ∈ E*.
using Cocycle = std::vector<std::vector<FieldElement>>;

// One record per violated normalization or cocycle identity (empty list = valid).
std::vector<CheckResult> cocycle_checks(const FieldTower& tw, const Cocycle& c);

// c(σ^i, σ^j) = 1 if i + j < n, else b. Throws CocycleError unless b ∈ L*.
Cocycle standard_cyclic_cocycle(const FieldTower& tw, const FieldElement& b);

// The crossed product (E, <σ>, c) with u_g x = g(x) u_g and
// u_g u_h = c(g, h) u_{gh}.
class CrossedProduct {
 public:
  // Throws CocycleError if c is not a normalized 2-cocycle.
  CrossedProduct(FieldTower tower, Cocycle c);
  // Skips validation; multiplication is then associative only if c is a cocycle.
  static CrossedProduct unchecked(FieldTower tower, Cocycle c);

  const FieldTower& tower() const { return tower_; }
  const Cocycle& cocycle() const { return cocycle_; }
  std::size_t n() const { return tower_.n(); }
  // Dimension over the prime field.
  std::size_t dim() const { return tower_.n() * tower_.dim(); }

  CrossedElement zero() const;
  CrossedElement one() const;
  // x · u_id
  CrossedElement embed(const FieldElement& x) const;
  // x · u_{σ^g}
  CrossedElement term(const FieldElement& x, std::int64_t g) const;
  // u_σ
  CrossedElement u() const { return term(tower_.one(), 1); }

  CrossedElement add(const CrossedElement& a, const CrossedElement& b) const;
  CrossedElement sub(const CrossedElement& a, const CrossedElement& b) const;
  CrossedElement mul(const CrossedElement& a, const CrossedElement& b) const;
  CrossedElement pow(const CrossedElement& a, std::uint64_t e) const;

  Vector flatten(const CrossedElement& a) const;
  CrossedElement unflatten(const Vector& v) const;
  // Prime-field basis e_j u_g, ordered by g then j.
  std::vector<CrossedElement> basis() const;

 private:
  struct Unchecked {};
  CrossedProduct(FieldTower tower, Cocycle c, Unchecked);

  FieldTower tower_;
  Cocycle cocycle_;
};

// z: <σ> -> E*, z[g] = z(σ^g).
struct SplittingChain {
  std::vector<FieldElement> z;
  bool operator==(const SplittingChain&) const = default;
};

// δz = c: σ^i(z_j) z_i z_{i+j}^{-1} = c(σ^i, σ^j) for all i, j, and z nonzero.
bool is_splitting(const CrossedProduct& a, const SplittingChain& z);

// z(σ^i) = N_σ^i(y); splits the standard cocycle of b = N(y).
SplittingChain chain_from_partial_norms(const FieldTower& tw, const FieldElement& y);

// z'(g) = z(g) g(w) / w, another splitting chain of the same cocycle.
SplittingChain twist_chain(const FieldTower& tw, const SplittingChain& z, const FieldElement& w);

// A left ideal stored as a reduced row-echelon basis over the prime field.
struct LeftIdeal {
  RowEchelon basis;
  bool operator==(const LeftIdeal&) const = default;
};

// Closure under E and u_σ, dim I = (n² - n)[L : F_p], I + E = A.
std::vector<CheckResult> left_ideal_checks(const CrossedProduct& a, const LeftIdeal& ideal);

// I = Σ_g E (z_g - u_g). Throws NonSplittingChain if δz != c or the span
// fails the ideal checks.
LeftIdeal lambda_inv(const CrossedProduct& a, const SplittingChain& z);

// z(I)_g is the unique x ∈ E with x - u_g ∈ I. Throws NotInOpenSubset when
// some x does not exist or is not unique.
SplittingChain lambda(const CrossedProduct& a, const LeftIdeal& ideal);

// a (x - u) = N_σ^i(x) - u^i with a = Σ_{k<i} (∏_{j=1}^{k} σ^{i-j}(x)) u^{i-k-1}.
CheckResult norm_element_check(const CrossedProduct& a, const FieldElement& x, std::uint64_t i);

// The τ-semilinear map x ↦ τ(x), u ↦ λ u^r on A = (E, σ, b) of the tower:
// relation checks, multiplicativity on the basis, and τ^m = id.
std::vector<CheckResult> tau_action_check(const CrossedProduct& a);

// Inside ⊗^l A, E ⊗ 1 and v = u ⊗ ⋯ ⊗ u generate a copy of (E, σ, b^l).
// Guarded to n <= 3, 1 <= l <= 2 and L equal to the prime field.
std::vector<CheckResult> tensor_power_check(const CrossedProduct& a, unsigned l);

// A seeded random cyclic instance over F_q: y, w ∈ E*, A = (E, σ, N(y)) and
// the chain twist_chain(chain_from_partial_norms(y), w).
struct RandomInstance {
  std::uint64_t seed = 0;
  FieldElement y;
  FieldElement w;
  CrossedProduct algebra;
  SplittingChain chain;
};

RandomInstance random_cyclic_instance(std::uint64_t q, std::size_t n, std::uint64_t seed);

// Seeded nonzero element with uniform prime-field coordinates (finite) or
// coordinates in [-2, 2] (characteristic 0).
FieldElement random_nonzero(const FieldTower& tw, std::uint64_t& state);

}  // namespace amitsur
