#include "liekv/subspace.hpp"

#include "liekv/error.hpp"

namespace liekv {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
  return coordinate(ambient_dim, all);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(vectors, ambient_dim);
  auto pivots = m.rref_in_place();
  Matrix basis(pivots.size(), ambient_dim);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = m(r, c);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) {
    if (i >= ambient_dim) throw Error(ErrorKind::DimensionMismatch, "coordinate index out of range");
    vs.push_back(unit_vector(ambient_dim, i));
  }
  return span(ambient_dim, vs);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v.at(pivots_[i]);
  return c;
}

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "subspace coordinates");
  Vector v = zero_vector(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) axpy(v, coords[i], basis_.row(i));
  return v;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "membership test");
  // Reduce by the echelon basis; v is inside iff nothing is left.
  Vector rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = rest[pivots_[i]];
    if (sgn(c) != 0) axpy(rest, -c, basis_.row(i));
  }
  return liekv::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  auto vs = basis();
  for (auto& v : other.basis()) vs.push_back(std::move(v));
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // Solve a.U = b.W through the kernel of [U^T | -W^T].
  const std::size_t p = dim(), q = other.dim();
  Matrix m(ambient_, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < ambient_; ++k) m(k, i) = basis_(i, k);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < ambient_; ++k) m(k, p + j) = -other.basis_(j, k);
  std::vector<Vector> vs;
  for (const auto& kv : m.kernel()) {
    Vector a(kv.begin(), kv.begin() + static_cast<std::ptrdiff_t>(p));
    vs.push_back(combine(a));
  }
  return span(ambient_, vs);
}

std::vector<Vector> Subspace::complement_in(const Subspace& ambient) const {
  std::vector<Vector> extra;
  Subspace acc = *this;
  for (const auto& v : ambient.basis()) {
    if (acc.contains(v)) continue;
    extra.push_back(v);
    acc = acc + span(ambient_, {v});
  }
  return extra;
}

Subspace Subspace::image_under(const Matrix& op) const {
  std::vector<Vector> vs;
  for (const auto& v : basis()) vs.push_back(op.apply(v));
  return span(op.rows(), vs);
}

Subspace image(const Matrix& op) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < op.cols(); ++c) cols.push_back(op.column(c));
  return Subspace::span(op.rows(), cols);
}

Subspace kernel(const Matrix& op) { return Subspace::span(op.cols(), op.kernel()); }

}  // namespace liekv
