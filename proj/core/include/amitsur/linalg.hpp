#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "amitsur/numbers.hpp"

namespace amitsur {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// The prime field of a model: the rationals (characteristic 0) or Z/pZ.
//
// Values are stored as Rational in both cases. Over Z/pZ every value is kept
// as an integer in [0, p) and `reduce` must be applied after ring operations;
// division must go through `inverse`.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  static BaseField prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return p_ != 0; }

  Rational reduce(const Rational& v) const;
  Rational inverse(const Rational& v) const;
  Rational div(const Rational& a, const Rational& b) const { return reduce(a * inverse(b)); }
  Rational from_integer(const Integer& v) const { return reduce(Rational(v)); }

  bool operator==(const BaseField&) const = default;

 private:
  explicit BaseField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// Reduced row-echelon form: every row has a leading 1 at `pivots[i]`
// and zeros in all other pivot columns.
struct RowEchelon {
  std::size_t cols = 0;
  Matrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  bool operator==(const RowEchelon&) const = default;
};

RowEchelon row_reduce(const BaseField& field, Matrix rows, std::size_t cols);

// Remainder of v after eliminating the pivot columns of `basis`;
// zero iff v lies in the row space.
Vector reduce_modulo(const BaseField& field, const RowEchelon& basis, Vector v);

bool in_row_space(const BaseField& field, const RowEchelon& basis, const Vector& v);

// Solution of sum_j x_j * columns[j] = rhs.
struct LinearSolution {
  Vector x;
  bool unique = false;
};

// Solves A x = b for A given by its columns. Returns nullopt when inconsistent.
std::optional<LinearSolution> solve_columns(const BaseField& field, const Matrix& columns,
                                            const Vector& rhs);

// Determinant of a square integer matrix by Bareiss fraction-free elimination.
// Runs in checked 64-bit arithmetic first and restarts with GMP on overflow.
Integer determinant(const std::vector<std::vector<Integer>>& m);

bool is_zero(const Vector& v);

}  // namespace amitsur
