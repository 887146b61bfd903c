#pragma once

#include <cstddef>
#include <vector>

#include "liekv/matrix.hpp"

namespace liekv {

/// Linear subspace of Q^n held as a reduced row echelon basis. Two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  /// Span of the listed coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  const Matrix& basis_matrix() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis() const;
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Inverse of coordinates().
  Vector combine(const Vector& coords) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Vectors extending this subspace's basis to a basis of `ambient`.
  std::vector<Vector> complement_in(const Subspace& ambient) const;
  /// Image of this subspace under `op`.
  Subspace image_under(const Matrix& op) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Column space of `op`.
Subspace image(const Matrix& op);
/// Null space of `op`.
Subspace kernel(const Matrix& op);

}  // namespace liekv
