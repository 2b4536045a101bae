#include "amitsur/field_tower.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "amitsur/errors.hpp"
#include "amitsur/monomial.hpp"

namespace amitsur {

namespace {

// ---- raw arithmetic shared by self_check and FieldTower --------------------

FieldElement reduce_all(const BaseField& f, FieldElement x) {
  for (auto& c : x) c = f.reduce(c);
  return x;
}

FieldElement unit_vector(std::size_t dim, std::size_t i) {
  FieldElement e(dim, Rational(0));
  e[i] = 1;
  return e;
}

FieldElement mat_column(const Matrix& mat, std::size_t j) {
  FieldElement col(mat.size());
  for (std::size_t i = 0; i < mat.size(); ++i) col[i] = mat[i][j];
  return col;
}

FieldElement mul_raw(const TowerData& d, const BaseField& f, const FieldElement& a,
                     const FieldElement& b) {
  const std::size_t dim = d.basis.size();
  FieldElement out(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      const FieldElement& prod = d.mul[i][j];
      for (std::size_t k = 0; k < dim; ++k)
        if (prod[k] != 0) out[k] += ab * prod[k];
    }
  }
  return reduce_all(f, std::move(out));
}

FieldElement apply_raw(const Matrix& mat, const BaseField& f, const FieldElement& x) {
  const std::size_t dim = x.size();
  FieldElement out(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (mat[i][j] != 0 && x[j] != 0) out[i] += mat[i][j] * x[j];
  return reduce_all(f, std::move(out));
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const BaseField& f) {
  const std::size_t dim = a.size();
  Matrix out(dim, Vector(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  for (auto& row : out) row = reduce_all(f, std::move(row));
  return out;
}

Matrix identity_matrix(std::size_t dim) {
  Matrix out(dim, Vector(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) out[i][i] = 1;
  return out;
}

FieldElement pow_raw(const TowerData& d, const BaseField& f, FieldElement x, std::uint64_t e) {
  FieldElement result = unit_vector(d.basis.size(), 0);
  while (e > 0) {
    if (e & 1) result = mul_raw(d, f, result, x);
    e >>= 1;
    if (e > 0) x = mul_raw(d, f, x, x);
  }
  return result;
}

bool is_automorphism(const TowerData& d, const BaseField& f, const Matrix& mat) {
  const std::size_t dim = d.basis.size();
  if (row_reduce(f, mat, dim).rank() != dim) return false;
  if (apply_raw(mat, f, unit_vector(dim, 0)) != unit_vector(dim, 0)) return false;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      const FieldElement lhs = apply_raw(mat, f, d.mul[i][j]);
      const FieldElement rhs = mul_raw(d, f, mat_column(mat, i), mat_column(mat, j));
      if (lhs != rhs) return false;
    }
  return true;
}

// Smallest k >= 1 with mat^k = I, or 0 if none up to `limit`.
std::uint64_t matrix_order(const Matrix& mat, const BaseField& f, std::uint64_t limit) {
  const Matrix id = identity_matrix(mat.size());
  Matrix power = mat;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (power == id) return k;
    power = mat_mul(power, mat, f);
  }
  return 0;
}

bool shape_ok(const TowerData& d, std::string& why) {
  const std::size_t dim = d.basis.size();
  if (dim == 0) {
    why = "empty basis";
    return false;
  }
  auto square = [dim](const Matrix& m) {
    if (m.size() != dim) return false;
    for (const auto& row : m)
      if (row.size() != dim) return false;
    return true;
  };
  if (d.mul.size() != dim) {
    why = "multiplication table has wrong row count";
    return false;
  }
  for (const auto& row : d.mul) {
    if (row.size() != dim) {
      why = "multiplication table has wrong column count";
      return false;
    }
    for (const auto& e : row)
      if (e.size() != dim) {
        why = "multiplication table entry has wrong length";
        return false;
      }
  }
  if (!square(d.sigma) || !square(d.tau)) {
    why = "automorphism matrices must be D x D";
    return false;
  }
  if (d.b.size() != dim || d.lambda.size() != dim) {
    why = "b and lambda need D coordinates";
    return false;
  }
  if (d.n < 2) {
    why = "n must be at least 2";
    return false;
  }
  if (d.m < 1 || d.t < 1) {
    why = "m and t must be positive";
    return false;
  }
  if (d.characteristic != 0 && !is_prime(d.characteristic)) {
    why = "characteristic must be 0 or prime";
    return false;
  }
  return true;
}

TowerData normalized(TowerData d) {
  const BaseField f = d.characteristic == 0 ? BaseField::rationals()
                                            : BaseField::prime(d.characteristic);
  for (auto& row : d.mul)
    for (auto& e : row) e = reduce_all(f, std::move(e));
  for (auto& row : d.sigma) row = reduce_all(f, std::move(row));
  for (auto& row : d.tau) row = reduce_all(f, std::move(row));
  d.b = reduce_all(f, std::move(d.b));
  d.lambda = reduce_all(f, std::move(d.lambda));
  return d;
}

}  // namespace

// ---- FieldTower ------------------------------------------------------------

std::vector<CheckResult> FieldTower::self_check(const TowerData& raw) {
  std::vector<CheckResult> out;
  std::string why;
  if (!shape_ok(raw, why)) {
    out.push_back({"tower data is well-formed", false, why});
    return out;
  }
  out.push_back({"tower data is well-formed", true, {}});
  const TowerData d = normalized(raw);
  const BaseField f = d.characteristic == 0 ? BaseField::rationals()
                                            : BaseField::prime(d.characteristic);
  const std::size_t dim = d.basis.size();

  bool identity = true;
  for (std::size_t j = 0; j < dim; ++j)
    identity = identity && d.mul[0][j] == unit_vector(dim, j) && d.mul[j][0] == unit_vector(dim, j);
  out.push_back({"basis element 0 is the identity", identity, {}});

  bool commutative = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) commutative = commutative && d.mul[i][j] == d.mul[j][i];
  out.push_back({"multiplication is commutative", commutative, {}});

  bool associative = true;
  for (std::size_t i = 0; i < dim && associative; ++i)
    for (std::size_t j = 0; j < dim && associative; ++j)
      for (std::size_t k = 0; k < dim && associative; ++k) {
        const FieldElement lhs = mul_raw(d, f, d.mul[i][j], unit_vector(dim, k));
        const FieldElement rhs = mul_raw(d, f, unit_vector(dim, i), d.mul[j][k]);
        associative = lhs == rhs;
      }
  out.push_back({"multiplication is associative", associative, {}});

  const bool sigma_auto = is_automorphism(d, f, d.sigma);
  const bool tau_auto = is_automorphism(d, f, d.tau);
  out.push_back({"sigma is a ring automorphism", sigma_auto, {}});
  out.push_back({"tau is a ring automorphism", tau_auto, {}});

  const std::uint64_t sigma_order = matrix_order(d.sigma, f, d.n);
  const std::uint64_t tau_order = matrix_order(d.tau, f, d.m);
  out.push_back({"sigma has order n", sigma_order == d.n,
                 "order " + std::to_string(sigma_order) + ", n = " + std::to_string(d.n)});
  out.push_back({"tau has order m", tau_order == d.m,
                 "order " + std::to_string(tau_order) + ", m = " + std::to_string(d.m)});

  Matrix sigma_r = identity_matrix(dim);
  for (std::uint64_t i = 0; i < d.r; ++i) sigma_r = mat_mul(sigma_r, d.sigma, f);
  out.push_back({"tau sigma tau^-1 = sigma^r",
                 mat_mul(d.tau, d.sigma, f) == mat_mul(sigma_r, d.tau, f), {}});

  const FieldElement zero(dim, Rational(0));
  out.push_back({"b is a nonzero element of L",
                 d.b != zero && apply_raw(d.sigma, f, d.b) == d.b, {}});
  out.push_back({"lambda is a nonzero element of L",
                 d.lambda != zero && apply_raw(d.sigma, f, d.lambda) == d.lambda, {}});

  const FieldElement lhs = apply_raw(d.tau, f, d.b);
  const FieldElement rhs = mul_raw(d, f, pow_raw(d, f, d.lambda, d.n), pow_raw(d, f, d.b, d.r));
  out.push_back({"tau(b) = lambda^n b^r", lhs == rhs, {}});

  const Integer rt = Integer(static_cast<unsigned long>(d.r)) * static_cast<unsigned long>(d.t);
  const Integer sn1 = d.s * static_cast<unsigned long>(d.n) + 1;
  out.push_back({"r t = s n + 1", rt == sn1, rt.get_str() + " vs " + sn1.get_str()});
  return out;
}

FieldTower::FieldTower(TowerData data)
    : data_(std::move(data)), field_(BaseField::rationals()) {
  const auto checks = self_check(data_);
  if (!all_passed(checks)) {
    std::string msg = "field tower '" + data_.name + "' failed self-check:";
    for (const auto& c : checks)
      if (!c.passed) msg += " [" + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "]";
    throw InvalidArgument(msg);
  }
  data_ = normalized(std::move(data_));
  if (data_.characteristic != 0) field_ = BaseField::prime(data_.characteristic);

  const std::size_t dim = data_.basis.size();
  sigma_powers_.push_back(identity_matrix(dim));
  for (std::size_t k = 1; k < data_.n; ++k)
    sigma_powers_.push_back(mat_mul(sigma_powers_.back(), data_.sigma, field_));
  tau_powers_.push_back(identity_matrix(dim));
  for (std::uint64_t k = 1; k < data_.m; ++k)
    tau_powers_.push_back(mat_mul(tau_powers_.back(), data_.tau, field_));
}

FieldElement FieldTower::one() const { return unit_vector(dim(), 0); }

FieldElement FieldTower::scalar(const Rational& c) const {
  FieldElement out = zero();
  out[0] = field_.reduce(c);
  return out;
}

FieldElement FieldTower::basis_element(std::size_t i) const {
  if (i >= dim()) throw InvalidArgument("basis index out of range");
  return unit_vector(dim(), i);
}

FieldElement FieldTower::normalize(FieldElement x) const {
  if (x.size() != dim()) throw InvalidArgument("element has wrong number of coordinates");
  return reduce_all(field_, std::move(x));
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.reduce(a[i] + b[i]);
  return out;
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.reduce(a[i] - b[i]);
  return out;
}

FieldElement FieldTower::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldTower::scale(const Rational& c, const FieldElement& a) const {
  FieldElement out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.reduce(c * a[i]);
  return out;
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
  return mul_raw(data_, field_, a, b);
}

bool FieldTower::is_zero(const FieldElement& x) const { return amitsur::is_zero(x); }

bool FieldTower::equal(const FieldElement& a, const FieldElement& b) const { return a == b; }

FieldElement FieldTower::apply(const Matrix& mat, const FieldElement& x) const {
  return apply_raw(mat, field_, x);
}

FieldElement FieldTower::sigma(const FieldElement& x, std::int64_t k) const {
  return apply(sigma_powers_[static_cast<std::size_t>(mod_floor(k, static_cast<std::int64_t>(n())))], x);
}

FieldElement FieldTower::tau(const FieldElement& x, std::int64_t k) const {
  return apply(tau_powers_[static_cast<std::size_t>(mod_floor(k, static_cast<std::int64_t>(m())))], x);
}

FieldElement FieldTower::partial_norm(const FieldElement& x, std::uint64_t j) const {
  FieldElement out = one();
  FieldElement conj = x;
  for (std::uint64_t i = 0; i < j; ++i) {
    out = mul(out, conj);
    conj = sigma(conj);
  }
  return out;
}

FieldElement FieldTower::norm(const FieldElement& x) const { return partial_norm(x, n()); }

FieldElement FieldTower::invert_in_subfield(const FieldElement& x) const {
  // Multiplication-by-x matrix, solved against 1.
  Matrix columns;
  columns.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) columns.push_back(mul(x, unit_vector(dim(), j)));
  const auto sol = solve_columns(field_, columns, one());
  if (!sol || !sol->unique) throw NotInvertible("element is not invertible: " + format(x));
  return sol->x;
}

FieldElement FieldTower::inverse(const FieldElement& x) const {
  if (is_zero(x)) throw NotInvertible("division by zero in " + data_.name);
  FieldElement conj_product = one();
  for (std::size_t i = 1; i < n(); ++i) conj_product = mul(conj_product, sigma(x, static_cast<std::int64_t>(i)));
  const FieldElement nx = mul(x, conj_product);
  return mul(conj_product, invert_in_subfield(nx));
}

FieldElement FieldTower::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inverse(b));
}

FieldElement FieldTower::pow(const FieldElement& x, const Integer& e) const {
  FieldElement base = e < 0 ? inverse(x) : x;
  const Integer mag = abs(e);
  FieldElement result = one();
  const std::size_t bits = mag == 0 ? 0 : mpz_sizeinbase(mag.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(mag.get_mpz_t(), i)) result = mul(result, base);
  }
  return result;
}

std::size_t FieldTower::fixed_dimension(const Matrix& automorphism) const {
  Matrix diff = automorphism;
  for (std::size_t i = 0; i < dim(); ++i) diff[i][i] -= 1;
  return dim() - row_reduce(field_, diff, dim()).rank();
}

std::string FieldTower::format(const FieldElement& x) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << x[i].get_str();
    if (i != 0) out << "*" << data_.basis[i];
  }
  return first ? "0" : out.str();
}

// ---- built-in towers -------------------------------------------------------

namespace {

constexpr std::size_t kS3Dim = 6;

// Coordinates of ζ^a c^e in the basis {1, ζ, c, ζc, c², ζc²}.
FieldElement s3_monomial(std::int64_t zeta_exp, std::int64_t c_exp) {
  FieldElement out(kS3Dim, Rational(0));
  Rational coeff = 1;
  while (c_exp >= 3) {
    coeff *= 2;
    c_exp -= 3;
  }
  const auto e = static_cast<std::size_t>(c_exp);
  switch (mod_floor(zeta_exp, 3)) {
    case 0:
      out[2 * e] = coeff;
      break;
    case 1:
      out[2 * e + 1] = coeff;
      break;
    default:  // ζ² = -1 - ζ
      out[2 * e] = -coeff;
      out[2 * e + 1] = -coeff;
      break;
  }
  return out;
}

}  // namespace

FieldTower builtin_s3() {
  TowerData d;
  d.name = "s3";
  d.characteristic = 0;
  d.basis = {"1", "z", "c", "zc", "c2", "zc2"};
  d.mul.assign(kS3Dim, std::vector<FieldElement>(kS3Dim));
  d.sigma.assign(kS3Dim, Vector(kS3Dim, Rational(0)));
  d.tau.assign(kS3Dim, Vector(kS3Dim, Rational(0)));
  for (std::size_t i = 0; i < kS3Dim; ++i) {
    const auto ai = static_cast<std::int64_t>(i % 2), ei = static_cast<std::int64_t>(i / 2);
    for (std::size_t j = 0; j < kS3Dim; ++j) {
      const auto aj = static_cast<std::int64_t>(j % 2), ej = static_cast<std::int64_t>(j / 2);
      d.mul[i][j] = s3_monomial(ai + aj, ei + ej);
    }
    // σ: c ↦ ζc, ζ fixed.  τ: ζ ↦ ζ², c fixed.
    const FieldElement sig = s3_monomial(ai + ei, ei);
    const FieldElement ta = s3_monomial(2 * ai, ei);
    for (std::size_t k = 0; k < kS3Dim; ++k) {
      d.sigma[k][i] = sig[k];
      d.tau[k][i] = ta[k];
    }
  }
  d.n = 3;
  d.m = 2;
  d.r = 2;
  d.t = 2;
  d.s = 1;
  d.b = s3_monomial(0, 0);
  d.b[0] = -1;
  d.lambda = d.b;
  return FieldTower(std::move(d));
}

namespace {

using Poly = std::vector<std::uint64_t>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::uint64_t coef = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + p - mul_mod(coef, f[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result = poly_mod({1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree d is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= d/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t d = f.size() - 1;
  Poly h = {0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(diff, f, p).size() > 1) return false;
  }
  return true;
}

Poly smallest_irreducible(std::size_t degree, std::uint64_t p) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  // Counter over (c_0, ..., c_{d-1}) with c_0 least significant.
  while (true) {
    if (degree == 1 || f[0] != 0)
      if (is_irreducible(f, p)) return f;
    std::size_t pos = 0;
    while (pos < degree && ++f[pos] == p) f[pos++] = 0;
    if (pos == degree) throw InternalConsistency("no irreducible polynomial found");
  }
}

}  // namespace

FieldTower builtin_finite(std::uint64_t q, std::size_t n, std::int64_t b_value) {
  if (n < 2) throw InvalidArgument("finite tower needs n >= 2");
  if (q < 2) throw InvalidArgument("q must be a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::size_t e = 0;
  for (std::uint64_t rest = q; rest > 1; rest /= p) {
    if (rest % p != 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    ++e;
  }
  if (mod_floor(b_value, static_cast<std::int64_t>(p)) == 0)
    throw InvalidArgument("b must be nonzero in the base field");

  const std::size_t dim = e * n;
  const Poly f = smallest_irreducible(dim, p);

  TowerData d;
  d.name = "F" + std::to_string(q) + "^" + std::to_string(n);
  d.characteristic = p;
  for (std::size_t i = 0; i < dim; ++i) d.basis.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));

  auto to_element = [&](const Poly& a) {
    FieldElement out(dim, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<unsigned long>(a[i]);
    return out;
  };
  auto monomial = [&](std::size_t k) {
    Poly x(k + 1, 0);
    x[k] = 1;
    return poly_mod(std::move(x), f, p);
  };

  d.mul.assign(dim, std::vector<FieldElement>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) d.mul[i][j] = to_element(monomial(i + j));

  const Poly frob = poly_powmod({0, 1}, q, f, p);  // x^q mod f
  d.sigma.assign(dim, Vector(dim, Rational(0)));
  Poly image = {1};
  for (std::size_t j = 0; j < dim; ++j) {
    const FieldElement col = to_element(image);
    for (std::size_t i = 0; i < dim; ++i) d.sigma[i][j] = col[i];
    image = poly_mulmod(image, frob, f, p);
  }
  d.tau.assign(dim, Vector(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) d.tau[i][i] = 1;

  d.n = n;
  d.m = 1;
  d.r = 1;
  d.t = 1;
  d.s = 0;
  d.b = FieldElement(dim, Rational(0));
  d.b[0] = static_cast<long>(mod_floor(b_value, static_cast<std::int64_t>(p)));
  d.lambda = FieldElement(dim, Rational(0));
  d.lambda[0] = 1;
  return FieldTower(std::move(d));
}

// ---- norm sets -------------------------------------------------------------

bool on_norm_set(const FieldTower& tw, const FieldElement& x, const Integer& k) {
  if (tw.is_zero(x)) return false;
  return tw.norm(x) == tw.pow(tw.b(), k);
}

NormSetPoint make_point(const FieldTower& tw, FieldElement x, Integer k) {
  x = tw.normalize(std::move(x));
  if (!on_norm_set(tw, x, k))
    throw InvalidArgument("N(" + tw.format(x) + ") != b^" + k.get_str());
  return NormSetPoint{std::move(x), std::move(k)};
}

FieldElement apply_monomial(const FieldTower& tw, const GroupRingElement& p, const FieldElement& x) {
  if (p.order() != tw.n()) throw OrderMismatch(p.order(), tw.n());
  FieldElement out = tw.one();
  for (std::size_t i = 0; i < p.order(); ++i) {
    const Integer& e = p.coeff(i);
    if (e == 0) continue;
    out = tw.mul(out, tw.pow(tw.sigma(x, static_cast<std::int64_t>(i)), e));
  }
  return out;
}

NormSetPoint tau_hat(const FieldTower& tw, const NormSetPoint& pt) {
  const Integer t(static_cast<unsigned long>(tw.data().t));
  const FieldElement num = tw.tau(tw.partial_norm(pt.x, tw.data().t));
  const FieldElement den = tw.mul(tw.pow(tw.lambda(), pt.k * t), tw.pow(tw.b(), pt.k * tw.data().s));
  return NormSetPoint{tw.div(num, den), pt.k};
}

NormSetPoint phi_k_apply(const FieldTower& tw, const NormSetPoint& pt, const Integer& j) {
  const Integer n(static_cast<unsigned long>(tw.n()));
  return NormSetPoint{tw.mul(pt.x, tw.pow(tw.b(), j)), pt.k + n * j};
}

NormSetPoint apply_map(const FieldTower& tw, const NormSetMap& f, const NormSetPoint& pt) {
  if (f.source_exp() != pt.k)
    throw ExponentMismatch("map starts at b^" + f.source_exp().get_str() + " but point has exponent " +
                           pt.k.get_str());
  const FieldElement y = tw.mul(apply_monomial(tw, f.monomial(), pt.x), tw.pow(tw.b(), f.shift()));
  return NormSetPoint{y, f.target_exp()};
}

FieldElement norm_b_point(const FieldTower& tw) {
  const std::vector<FieldElement> cands = {tw.b(), tw.scalar(-1), tw.one()};
  for (const auto& c : cands)
    if (on_norm_set(tw, c, 1)) return c;
  if (tw.base().is_finite()) {
    const std::uint64_t p = tw.base().characteristic();
    std::vector<std::uint64_t> digits(tw.dim(), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
      FieldElement x(tw.dim());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<unsigned long>(digits[i]);
      if (on_norm_set(tw, x, 1)) return x;
    }
  }
  throw InvalidArgument("no element of norm b found in " + tw.data().name);
}

std::vector<NormSetPoint> sample_points(const FieldTower& tw, const Integer& k, std::size_t count,
                                        std::uint64_t seed) {
  std::vector<NormSetPoint> out;
  if (count == 0) return out;
  const FieldElement w = tw.pow(norm_b_point(tw), k);
  out.push_back(make_point(tw, w, k));

  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    FieldElement y(tw.dim());
    for (auto& c : y) c = static_cast<long>(rng() % 5) - 2;
    y = tw.normalize(std::move(y));
    if (tw.is_zero(y)) continue;
    const FieldElement x = tw.mul(w, tw.div(y, tw.sigma(y)));
    out.push_back(make_point(tw, x, k));
  }
  return out;
}

}  // namespace amitsur
