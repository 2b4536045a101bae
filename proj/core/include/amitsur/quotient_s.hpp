#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amitsur/group_ring.hpp"
#include "amitsur/numbers.hpp"

namespace amitsur {

// Element of S = Z[ρ]/(1 + ρ + ... + ρ^{n-1}) in canonical form.
//
// The canonical representative is the unique polynomial of degree <= n-2;
// coeffs()[i] is the coefficient of ρ^i and the vector has length n-1.
class SElement {
 public:
  SElement(std::size_t n, std::vector<Integer> coeffs);

  static SElement zero(std::size_t n);
  static SElement one(std::size_t n);
  static SElement from_integer(std::size_t n, const Integer& c);
  // ρ^e for any integer e (ρ^n = 1 in S).
  static SElement rho_power(std::size_t n, std::int64_t e);

  std::size_t order() const { return n_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  SElement operator-() const;
  friend SElement operator+(const SElement& a, const SElement& b);
  friend SElement operator-(const SElement& a, const SElement& b);
  friend SElement operator*(const SElement& a, const SElement& b);

  bool operator==(const SElement&) const = default;
  // Lexicographic order on canonical coefficients; used for deterministic sorting.
  friend bool operator<(const SElement& a, const SElement& b);

  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Integer> coeffs_;
};

// Ring map Z<σ> -> S, σ ↦ ρ. Kernel is Z·N.
SElement reduce(const GroupRingElement& p);

// Canonical preimage: the σ^{n-1} coefficient is 0.
GroupRingElement lift(const SElement& s);

// Res(s(x), 1 + x + ... + x^{n-1}) of the canonical representative,
// from the Sylvester matrix by fraction-free elimination.
Integer norm_resultant(const SElement& s);

bool is_unit(const SElement& s);

// Inverse via the linear system of multiplication-by-s. Throws NotInvertible
// for non-units.
SElement invert(const SElement& s);

// ε̄: coefficient sum mod n, in [0, n).
std::uint64_t eps_bar(const SElement& s);

// ρ ↦ ρ^r.
SElement tau_apply_s(const SElement& s, const TauData& t);
bool is_tau_fixed(const SElement& s, const TauData& t);

SElement pow(const SElement& s, std::uint64_t e);

}  // namespace amitsur
