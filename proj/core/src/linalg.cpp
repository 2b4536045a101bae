#include "amitsur/linalg.hpp"

#include <utility>

#include "amitsur/errors.hpp"

namespace amitsur {

BaseField BaseField::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  return BaseField(p);
}

Rational BaseField::reduce(const Rational& v) const {
  if (p_ == 0) return v;
  // Values over Z/pZ are integers; a stray denominator means someone divided
  // without going through inverse().
  if (v.get_den() != 1) throw InternalConsistency("non-integral value in characteristic p");
  Integer r = v.get_num() % Integer(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Rational(r);
}

Rational BaseField::inverse(const Rational& v) const {
  if (p_ == 0) {
    if (v == 0) throw NotInvertible("division by zero");
    return 1 / v;
  }
  Rational a = reduce(v);
  if (a == 0) throw NotInvertible("division by zero mod " + std::to_string(p_));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), Integer(static_cast<unsigned long>(p_)).get_mpz_t());
  return Rational(inv);
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RowEchelon row_reduce(const BaseField& field, Matrix rows, std::size_t cols) {
  for (auto& row : rows) {
    if (row.size() != cols) throw InvalidArgument("row_reduce: ragged matrix");
    for (auto& x : row) x = field.reduce(x);
  }
  RowEchelon out;
  out.cols = cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rational inv = field.inverse(rows[pivot_row][col]);
    for (auto& x : rows[pivot_row]) x = field.reduce(x * inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = col; j < cols; ++j)
        rows[i][j] = field.reduce(rows[i][j] - factor * rows[pivot_row][j]);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  out.rows = std::move(rows);
  return out;
}

Vector reduce_modulo(const BaseField& field, const RowEchelon& basis, Vector v) {
  if (v.size() != basis.cols) throw InvalidArgument("reduce_modulo: dimension mismatch");
  for (auto& x : v) x = field.reduce(x);
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    const Rational factor = v[basis.pivots[i]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < basis.cols; ++j)
      v[j] = field.reduce(v[j] - factor * basis.rows[i][j]);
  }
  return v;
}

bool in_row_space(const BaseField& field, const RowEchelon& basis, const Vector& v) {
  return is_zero(reduce_modulo(field, basis, v));
}

std::optional<LinearSolution> solve_columns(const BaseField& field, const Matrix& columns,
                                            const Vector& rhs) {
  const std::size_t unknowns = columns.size();
  const std::size_t eqs = rhs.size();
  // Augmented matrix [A | b], one row per equation.
  Matrix aug(eqs, Vector(unknowns + 1));
  for (std::size_t j = 0; j < unknowns; ++j) {
    if (columns[j].size() != eqs) throw InvalidArgument("solve_columns: ragged system");
    for (std::size_t i = 0; i < eqs; ++i) aug[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < eqs; ++i) aug[i][unknowns] = rhs[i];

  const RowEchelon ech = row_reduce(field, std::move(aug), unknowns + 1);
  LinearSolution sol;
  sol.x.assign(unknowns, Rational(0));
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    if (ech.pivots[i] == unknowns) return std::nullopt;
    sol.x[ech.pivots[i]] = ech.rows[i][unknowns];
  }
  sol.unique = ech.rank() == unknowns;
  return sol;
}

namespace {
__extension__ typedef __int128 i128;

bool bareiss_i64(std::vector<std::vector<std::int64_t>> m, std::int64_t& det) {
  const std::size_t n = m.size();
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) {
        det = 0;
        return true;
      }
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const i128 num = static_cast<i128>(m[i][j]) * m[k][k] -
                             static_cast<i128>(m[i][k]) * m[k][j];
        const i128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN) return false;
        m[i][j] = static_cast<std::int64_t>(q);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  if (n == 0) {
    det = 1;
    return true;
  }
  if (m[n - 1][n - 1] == INT64_MIN) return false;
  det = sign * m[n - 1][n - 1];
  return true;
}

Integer bareiss_mpz(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  if (n == 0) return 1;
  return sign * m[n - 1][n - 1];
}

}  // namespace

Integer determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant: matrix is not square");

  bool small = true;
  std::vector<std::vector<std::int64_t>> m64(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n && small; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].fits_slong_p()) {
        small = false;
        break;
      }
      m64[i][j] = m[i][j].get_si();
    }
  if (small) {
    std::int64_t det = 0;
    if (bareiss_i64(std::move(m64), det)) return Integer(static_cast<long>(det));
  }
  return bareiss_mpz(m);
}

}  // namespace amitsur
