#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace amitsur {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

// Least nonnegative residue of v modulo m (m > 0).
inline std::uint64_t mod_residue(const Integer& v, std::uint64_t m) {
  Integer r = v % Integer(static_cast<unsigned long>(m));
  if (r < 0) r += static_cast<unsigned long>(m);
  return r.get_ui();
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Multiplicative order of r modulo n; requires gcd(r, n) = 1 and n >= 1.
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

bool is_prime(std::uint64_t p);

// Sorted list of residues in [1, n) coprime to n.
std::vector<std::uint64_t> units_mod(std::uint64_t n);

// Parses "p/q" or "p"; throws InvalidArgument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace amitsur
