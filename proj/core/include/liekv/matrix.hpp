#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liekv/scalar.hpp"

namespace liekv {

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix power(unsigned k) const;
  Scalar trace() const;
  bool is_zero() const;

  /// Gaussian elimination to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<Vector> kernel() const;
  Scalar determinant() const;
  std::optional<Matrix> inverse() const;
  /// Some solution of A x = b, if one exists.
  std::optional<Vector> solve(const Vector& b) const;

  Eigen::MatrixXd to_eigen() const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

/// A B - B A.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Sylvester's criterion on the leading principal minors, exact.
bool is_positive_definite(const Matrix& symmetric);
bool is_symmetric(const Matrix& m);

/// ad(X) and friends act on coordinates; the name marks the role.
using Operator = Matrix;

}  // namespace liekv
