#include "amitsur/numbers.hpp"

#include <numeric>

#include "amitsur/errors.hpp"

namespace amitsur {
__extension__ typedef unsigned __int128 u128;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("multiplicative_order: modulus must be positive");
  if (n == 1) return 1;
  if (std::gcd(r % n, n) != 1)
    throw InvalidArgument("multiplicative_order: " + std::to_string(r) + " is not a unit mod " +
                          std::to_string(n));
  std::uint64_t x = r % n;
  std::uint64_t order = 1;
  while (x != 1) {
    x = mul_mod(x, r, n);
    ++order;
  }
  return order;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> units_mod(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n == 1) return {0};
  for (std::uint64_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw InvalidArgument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace amitsur
