#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homlie/ring/scalar.hpp"

namespace homlie {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars. Elimination routines work over
/// the fraction field, so inverses and solutions may have rational-function
/// entries even for polynomial input.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> entries);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  Matrix transpose() const;
  Matrix map(const std::function<Scalar(const Scalar&)>& f) const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Scalar determinant() const;
  std::size_t rank() const;
  /// Inverse over the fraction field; SingularSystemError if singular.
  Matrix inverse() const;
  /// Unique X with (*this) X = rhs for square nonsingular *this.
  Matrix solve(const Matrix& rhs) const;
  Vector solve(const Vector& rhs) const;
  /// Some x with (*this) x = rhs, or nullopt when rhs is outside the column space.
  std::optional<Vector> solve_any(const Vector& rhs) const;
  /// Basis of the right kernel.
  std::vector<Vector> nullspace() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

}  // namespace homlie
