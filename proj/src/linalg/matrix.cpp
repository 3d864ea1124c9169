#include "homlie/linalg/matrix.hpp"

#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix data has the wrong length");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column has the wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::map(const std::function<Scalar(const Scalar&)>& f) const {
  Matrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x = s * x;
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Scalar Matrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det(1);
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = Scalar(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return row_reduce(m).size();
}

Matrix Matrix::solve(const Matrix& rhs) const {
  if (!is_square()) throw DimensionError("solve needs a square matrix");
  if (rhs.rows_ != rows_) throw DimensionError("right-hand side has the wrong height");
  const std::size_t n = rows_;
  Matrix aug(n, n + rhs.cols_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) aug(i, n + j) = rhs(i, j);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw SingularSystemError("matrix is singular over the fraction field (rank " +
                              std::to_string(rank()) + " of " + std::to_string(n) + ")");
  }
  Matrix x(n, rhs.cols_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) x(i, j) = aug(i, n + j);
  }
  return x;
}

Vector Matrix::solve(const Vector& rhs) const {
  Matrix b(rhs.size(), 1, rhs);
  return solve(b).column(0);
}

Matrix Matrix::inverse() const { return solve(identity(rows_)); }

std::optional<Vector> Matrix::solve_any(const Vector& rhs) const {
  if (rhs.size() != rows_) throw DimensionError("right-hand side has the wrong height");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = rhs[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vector x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::vector<Vector> Matrix::nullspace() const {
  Matrix m = *this;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::to_string(std::span<const std::string> names) const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string(names);
    }
    out += "]";
  }
  return out + "]";
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Scalar s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x = s * x;
  return out;
}

}  // namespace homlie
