#ifndef DGLA_MATRIX_HPP
#define DGLA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dgla/rational.hpp"

namespace dgla {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals. Row major; all computations are exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(const Rational& factor) const;

  Vec apply(const Vec& v) const;  // matrix * column vector
  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Output of Gauss-Jordan elimination with the fixed pivot rule:
/// scan columns left to right, take the smallest-index usable row.
/// The rule makes every derived basis in the library deterministic.
struct RowReduction {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<Vec> kernel_basis;  // one vector per free column, ascending
  std::vector<Vec> image_basis;   // original columns at the pivot indices
  Matrix rref;
};

RowReduction row_reduce(const Matrix& m);

/// Particular solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);

/// Incremental echelonized row span: membership tests and basis extension.
class RowSpan {
 public:
  explicit RowSpan(std::size_t width) : width_(width) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }

  /// Residue of v after eliminating against the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;

  /// Inserts v if independent; returns true when the dimension grew.
  bool insert(const Vec& v);

 private:
  std::size_t width_;
  std::vector<Vec> rows_;           // echelonized, pivot entry 1
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Rational& c, const Vec& v);

}  // namespace dgla

#endif
