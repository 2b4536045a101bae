#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amitsur/numbers.hpp"

namespace amitsur {

// Element of the integral group ring Z<σ> of the cyclic group of order n.
//
// Stored densely: coeffs()[i] is the coefficient of σ^i, and the vector always
// has length n. Values are immutable; all arithmetic returns new elements.
class GroupRingElement {
 public:
  GroupRingElement(std::size_t n, std::vector<Integer> coeffs);

  static GroupRingElement zero(std::size_t n);
  static GroupRingElement one(std::size_t n);
  // The group element σ^e; e is reduced mod n, so negative exponents are fine.
  static GroupRingElement sigma_power(std::size_t n, std::int64_t e);
  // N = 1 + σ + ... + σ^{n-1}.
  static GroupRingElement full_norm(std::size_t n);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t i) const { return coeffs_.at(i); }

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Integer& c, const GroupRingElement& a);

  bool operator==(const GroupRingElement&) const = default;

  // Human-readable form such as "2 + sigma + sigma^2".
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

// The conjugation data τστ^{-1} = σ^r of the semidirect product.
struct TauData {
  std::size_t n = 0;
  std::uint64_t r = 1;
  std::uint64_t m = 1;  // multiplicative order of r mod n

  // Validates 1 <= r <= n-1 (r = 1 also allowed for n = 2) and gcd(r, n) = 1.
  static TauData make(std::size_t n, std::uint64_t r);
};

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b);

// N_{σ^g}^j = 1 + σ^g + σ^{2g} + ... + σ^{g(j-1)}; zero when j = 0.
GroupRingElement partial_norm(std::size_t n, std::int64_t g, std::uint64_t j);

// ε: sends every group element to 1.
Integer augmentation(const GroupRingElement& p);

// Ring automorphism σ ↦ σ^r.
GroupRingElement tau_apply(const GroupRingElement& p, const TauData& t);
bool is_tau_fixed(const GroupRingElement& p, const TauData& t);

}  // namespace amitsur
