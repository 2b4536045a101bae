#include "amitsur/group_ring.hpp"

#include <sstream>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

void require_same_order(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

GroupRingElement::GroupRingElement(std::size_t n, std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (n == 0) throw InvalidArgument("group order must be positive");
  if (coeffs_.size() != n)
    throw InvalidArgument("expected " + std::to_string(n) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
}

GroupRingElement GroupRingElement::zero(std::size_t n) {
  return GroupRingElement(n, std::vector<Integer>(n));
}

GroupRingElement GroupRingElement::one(std::size_t n) { return sigma_power(n, 0); }

GroupRingElement GroupRingElement::sigma_power(std::size_t n, std::int64_t e) {
  if (n == 0) throw InvalidArgument("group order must be positive");
  std::vector<Integer> c(n);
  c[static_cast<std::size_t>(mod_floor(e, static_cast<std::int64_t>(n)))] = 1;
  return GroupRingElement(n, std::move(c));
}

GroupRingElement GroupRingElement::full_norm(std::size_t n) {
  return GroupRingElement(n, std::vector<Integer>(n, Integer(1)));
}

GroupRingElement GroupRingElement::operator-() const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return GroupRingElement(order(), std::move(c));
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_order(a, b);
  std::vector<Integer> c(a.order());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return GroupRingElement(a.order(), std::move(c));
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_order(a, b);
  std::vector<Integer> c(a.order());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return GroupRingElement(a.order(), std::move(c));
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      c[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return GroupRingElement(n, std::move(c));
}

GroupRingElement operator*(const Integer& s, const GroupRingElement& a) {
  std::vector<Integer> c(a.order());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
  return GroupRingElement(a.order(), std::move(c));
}

std::string GroupRingElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "sigma";
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

TauData TauData::make(std::size_t n, std::uint64_t r) {
  if (n < 2) throw InvalidArgument("group order n must be at least 2");
  if (r < 1 || (r > n - 1)) throw InvalidArgument("r must lie in [1, n-1]");
  if (gcd_u64(r, n) != 1)
    throw InvalidArgument("gcd(r, n) must be 1 (r=" + std::to_string(r) +
                          ", n=" + std::to_string(n) + ")");
  return TauData{n, r, multiplicative_order(r, n)};
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

GroupRingElement partial_norm(std::size_t n, std::int64_t g, std::uint64_t j) {
  std::vector<Integer> c(n);
  const auto sn = static_cast<std::int64_t>(n);
  std::int64_t e = 0;
  const std::int64_t step = mod_floor(g, sn);
  for (std::uint64_t i = 0; i < j; ++i) {
    c[static_cast<std::size_t>(e)] += 1;
    e = (e + step) % sn;
  }
  return GroupRingElement(n, std::move(c));
}

Integer augmentation(const GroupRingElement& p) {
  Integer sum = 0;
  for (const auto& c : p.coeffs()) sum += c;
  return sum;
}

GroupRingElement tau_apply(const GroupRingElement& p, const TauData& t) {
  if (p.order() != t.n) throw OrderMismatch(p.order(), t.n);
  const std::size_t n = p.order();
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) c[mul_mod(i, t.r, n)] = p.coeff(i);
  return GroupRingElement(n, std::move(c));
}

bool is_tau_fixed(const GroupRingElement& p, const TauData& t) { return tau_apply(p, t) == p; }

}  // namespace amitsur
