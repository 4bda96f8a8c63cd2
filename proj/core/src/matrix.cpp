#include "dgla/matrix.hpp"

#include <stdexcept>

namespace dgla {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw std::invalid_argument("column height mismatch");
    }
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch in +");
  }
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch in -");
  }
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix shape mismatch in *");
  }
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& y = other.at(k, j);
        if (y == 0) continue;
        r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const Rational& factor) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * factor;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
    }
    r[i] = acc;
  }
  return r;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RowReduction row_reduce(const Matrix& m) {
  RowReduction out;
  out.rref = m;
  Matrix& a = out.rref;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
    }
    const Rational inv = Rational(1) / a.at(r, col);
    for (std::size_t j = col; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = out.pivot_columns.size();

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec k(cols);
    k[f] = 1;
    for (std::size_t i = 0; i < out.rank; ++i) {
      k[out.pivot_columns[i]] = -a.at(i, f);
    }
    out.kernel_basis.push_back(std::move(k));
  }
  for (auto c : out.pivot_columns) out.image_basis.push_back(m.column(c));
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RowReduction red = row_reduce(aug);
  Vec x(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    const std::size_t p = red.pivot_columns[i];
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[p] = red.rref.at(i, a.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RowReduction red = row_reduce(aug);
  if (red.rank != n || red.pivot_columns.back() != n - 1) {
    throw std::invalid_argument("inverse: singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.rref.at(i, n + j);
  }
  return inv;
}

Vec RowSpan::reduce(const Vec& v) const {
  if (v.size() != width_) throw std::invalid_argument("RowSpan width mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = r[pivots_[i]];
    if (c == 0) continue;
    const Rational f = c;
    for (std::size_t j = 0; j < width_; ++j) {
      if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
    }
  }
  return r;
}

bool RowSpan::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool RowSpan::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = width_;
  for (std::size_t j = 0; j < width_; ++j) {
    if (r[j] != 0) {
      p = j;
      break;
    }
  }
  if (p == width_) return false;
  const Rational inv = Rational(1) / r[p];
  for (auto& x : r) x *= inv;
  // back-eliminate to keep rows fully reduced
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = rows_[i][p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (r[j] != 0) rows_[i][j] -= c * r[j];
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale_vec(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

}  // namespace dgla
