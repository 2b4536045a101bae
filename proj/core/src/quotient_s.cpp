#include "amitsur/quotient_s.hpp"

#include <algorithm>
#include <sstream>

#include "amitsur/errors.hpp"
#include "amitsur/linalg.hpp"

namespace amitsur {

namespace {

void require_same_order(const SElement& a, const SElement& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

SElement::SElement(std::size_t n, std::vector<Integer> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 2) throw InvalidArgument("S requires n >= 2");
  if (coeffs_.size() != n - 1)
    throw InvalidArgument("expected " + std::to_string(n - 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
}

SElement SElement::zero(std::size_t n) { return SElement(n, std::vector<Integer>(n - 1)); }

SElement SElement::one(std::size_t n) { return from_integer(n, 1); }

SElement SElement::from_integer(std::size_t n, const Integer& c) {
  if (n < 2) throw InvalidArgument("S requires n >= 2");
  std::vector<Integer> v(n - 1);
  v[0] = c;
  return SElement(n, std::move(v));
}

SElement SElement::rho_power(std::size_t n, std::int64_t e) {
  return reduce(GroupRingElement::sigma_power(n, e));
}

SElement SElement::operator-() const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return SElement(n_, std::move(c));
}

SElement operator+(const SElement& a, const SElement& b) {
  require_same_order(a, b);
  std::vector<Integer> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return SElement(a.n_, std::move(c));
}

SElement operator-(const SElement& a, const SElement& b) { return a + (-b); }

SElement operator*(const SElement& a, const SElement& b) {
  require_same_order(a, b);
  return reduce(lift(a) * lift(b));
}

bool operator<(const SElement& a, const SElement& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string SElement::to_string() const {
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
    out << "rho";
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

SElement reduce(const GroupRingElement& p) {
  const std::size_t n = p.order();
  if (n < 2) throw InvalidArgument("S requires n >= 2");
  const Integer& top = p.coeff(n - 1);
  std::vector<Integer> c(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) c[i] = p.coeff(i) - top;
  return SElement(n, std::move(c));
}

GroupRingElement lift(const SElement& s) {
  std::vector<Integer> c = s.coeffs();
  c.emplace_back(0);
  return GroupRingElement(s.order(), std::move(c));
}

Integer norm_resultant(const SElement& s) {
  const std::size_t n = s.order();
  const auto& a = s.coeffs();
  std::size_t deg_a = a.size();
  while (deg_a > 0 && a[deg_a - 1] == 0) --deg_a;
  if (deg_a == 0) return 0;
  --deg_a;
  const std::size_t deg_g = n - 1;
  if (deg_a == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), deg_g);
    return r;
  }

  // Sylvester matrix: deg_g shifted rows of a, then deg_a shifted rows of g,
  // coefficients written from the leading term down.
  const std::size_t size = deg_a + deg_g;
  std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size));
  for (std::size_t row = 0; row < deg_g; ++row)
    for (std::size_t k = 0; k <= deg_a; ++k) syl[row][row + k] = a[deg_a - k];
  for (std::size_t row = 0; row < deg_a; ++row)
    for (std::size_t k = 0; k <= deg_g; ++k) syl[deg_g + row][row + k] = 1;
  // det(syl) = Res(s, g); the norm is Res(g, s) = (-1)^(deg s deg g) Res(s, g).
  Integer res = determinant(syl);
  if ((deg_a * deg_g) % 2 == 1) res = -res;
  return res;
}

bool is_unit(const SElement& s) {
  const Integer r = norm_resultant(s);
  return r == 1 || r == -1;
}

SElement invert(const SElement& s) {
  if (!is_unit(s)) throw NotInvertible("element " + s.to_string() + " is not a unit of S");
  const std::size_t n = s.order();
  const std::size_t dim = n - 1;

  // Column j is s * ρ^j in canonical coordinates.
  Matrix columns;
  columns.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const SElement prod = s * SElement::rho_power(n, static_cast<std::int64_t>(j));
    Vector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = prod.coeffs()[i];
    columns.push_back(std::move(col));
  }
  Vector rhs(dim, Rational(0));
  rhs[0] = 1;

  const auto sol = solve_columns(BaseField::rationals(), columns, rhs);
  if (!sol || !sol->unique)
    throw InternalConsistency("multiplication-by-unit matrix is singular for " + s.to_string());
  std::vector<Integer> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sol->x[i].get_den() != 1)
      throw InternalConsistency("inverse of unit " + s.to_string() + " is not integral");
    v[i] = sol->x[i].get_num();
  }
  SElement inv(n, std::move(v));
  if (!(s * inv == SElement::one(n)))
    throw InternalConsistency("computed inverse does not verify for " + s.to_string());
  return inv;
}

std::uint64_t eps_bar(const SElement& s) {
  Integer sum = 0;
  for (const auto& c : s.coeffs()) sum += c;
  return mod_residue(sum, s.order());
}

SElement tau_apply_s(const SElement& s, const TauData& t) {
  if (s.order() != t.n) throw OrderMismatch(s.order(), t.n);
  return reduce(tau_apply(lift(s), t));
}

bool is_tau_fixed(const SElement& s, const TauData& t) { return tau_apply_s(s, t) == s; }

SElement pow(const SElement& s, std::uint64_t e) {
  SElement result = SElement::one(s.order());
  SElement base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace amitsur
