#include "liekv/lie_algebra.hpp"

#include "liekv/error.hpp"
#include "liekv/polynomial.hpp"

namespace liekv {

namespace {

[[noreturn]] void invalid(const std::string& component, const std::string& reason) {
  throw Error(ErrorKind::ValidationError, component + ": " + reason);
}

void check_ambient(const LieAlgebra& a, const Subspace& s, const std::string& what) {
  if (s.ambient_dim() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, what + " lives in dimension " + std::to_string(s.ambient_dim()));
}

void validate_declared(const LieAlgebra& a) {
  const auto& d = a.declared();
  auto check_dims = [&](const Subspace& s, const std::string& name) {
    if (s.ambient_dim() != a.dim()) invalid(name, "ambient dimension mismatch");
  };
  if (d.radical) {
    check_dims(*d.radical, "radical");
    if (!(*d.radical == radical(a))) invalid("radical", "differs from the Cartan-criterion radical");
  }
  if (d.center) {
    check_dims(*d.center, "center");
    if (!(*d.center == center(a))) invalid("center", "differs from the computed center");
  }
  if (d.nilradical) {
    check_dims(*d.nilradical, "nilradical");
    try {
      if (!(nilradical(a) == *d.nilradical)) invalid("nilradical", "differs from the computed nilradical");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ValidationError) throw;
      invalid("nilradical", e.what());
    }
  }
  if (d.levi) {
    check_dims(*d.levi, "levi");
    try {
      verify_levi(a, d);
    } catch (const Error& e) {
      invalid("levi", e.what());
    }
  }
  if (!d.direct_sum.empty()) {
    Subspace total(a.dim());
    std::size_t dims = 0;
    for (std::size_t i = 0; i < d.direct_sum.size(); ++i) {
      const auto& gi = d.direct_sum[i];
      check_dims(gi, "direct_sum");
      if (!is_ideal(a, gi)) invalid("direct_sum", "summand " + std::to_string(i) + " is not an ideal");
      for (std::size_t j = i + 1; j < d.direct_sum.size(); ++j)
        if (!bracket_subspaces(a, gi, d.direct_sum[j]).is_zero())
          invalid("direct_sum", "summands " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      total = total + gi;
      dims += gi.dim();
    }
    if (!total.is_full() || dims != a.dim()) invalid("direct_sum", "summands do not form a direct decomposition");
  }
  for (std::size_t i = 0; i < d.abelian_ideals.size(); ++i) {
    const auto& ai = d.abelian_ideals[i];
    check_dims(ai, "abelian_ideals");
    if (!is_ideal(a, ai)) invalid("abelian_ideals", "entry " + std::to_string(i) + " is not an ideal");
    if (!is_abelian(a, ai)) invalid("abelian_ideals", "entry " + std::to_string(i) + " is not abelian");
  }
}

}  // namespace

StructureTable empty_table(std::size_t dim) {
  return StructureTable(dim, std::vector<Vector>(dim, zero_vector(dim)));
}

void set_bracket(StructureTable& table, std::size_t i, std::size_t j, const Vector& v) {
  table.at(i).at(j) = v;
  table.at(j).at(i) = scale(Scalar(-1), v);
}

LieAlgebra LieAlgebra::create(std::vector<std::string> names, StructureTable table, DeclaredStructure declared) {
  const std::size_t n = names.size();
  if (table.size() != n) throw Error(ErrorKind::DimensionMismatch, "structure table rows");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "structure table columns");
    for (const auto& v : row)
      if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "structure constant vector");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!(table[i][j] == scale(Scalar(-1), table[j][i])))
        throw Error(ErrorKind::AntisymmetryViolation,
                    "[e" + std::to_string(i) + ", e" + std::to_string(j) + "] != -[e" + std::to_string(j) + ", e" +
                        std::to_string(i) + "]",
                    {static_cast<long>(i), static_cast<long>(j)});

  LieAlgebra a;
  a.names_ = std::move(names);
  a.table_ = std::move(table);
  a.ad_basis_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Operator m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, a.table_[i][j]);
    a.ad_basis_.push_back(std::move(m));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = a.ad_basis_[i].apply(a.table_[j][k]);
        r = add(r, a.ad_basis_[j].apply(a.table_[k][i]));
        r = add(r, a.ad_basis_[k].apply(a.table_[i][j]));
        if (!liekv::is_zero(r))
          throw Error(ErrorKind::JacobiViolation,
                      "triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                          ") residual " + to_string(r),
                      {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)});
      }

  a.declared_ = std::move(declared);
  validate_declared(a);
  return a;
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string LieAlgebra::format(const Vector& v) const {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < names_.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Scalar c = v[i];
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    Scalar mag = abs(c);
    if (mag != 1) s += mag.get_str() + "*";
    s += names_[i];
  }
  return s.empty() ? "0" : s;
}

Vector bracket(const LieAlgebra& a, const Vector& x, const Vector& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "bracket arguments");
  Vector r = zero_vector(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      axpy(r, x[i] * y[j], a.structure(i, j));
    }
  }
  return r;
}

Operator ad_matrix(const LieAlgebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "ad argument");
  Operator m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * a.ad_basis(i);
  return m;
}

Matrix killing_form(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (a.ad_basis(i) * a.ad_basis(j)).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

Scalar killing(const LieAlgebra& a, const Vector& x, const Vector& y) {
  return (ad_matrix(a, x) * ad_matrix(a, y)).trace();
}

Subspace center(const LieAlgebra& a) { return centralizer_of_subspace(a, Subspace::full(a.dim())); }

Subspace centralizer(const LieAlgebra& a, const Vector& x) { return kernel(ad_matrix(a, x)); }

Subspace center_of(const LieAlgebra& a, const Subspace& s) { return s.intersect(centralizer_of_subspace(a, s)); }

Subspace centralizer_of_subspace(const LieAlgebra& a, const Subspace& s) {
  check_ambient(a, s, "subspace");
  const std::size_t n = a.dim();
  // Stack ad(s_i) for a basis s_i of S; the kernel is the centralizer.
  Matrix stacked(s.dim() * n, n);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    Operator ad = ad_matrix(a, s.basis_vector(b));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = ad(r, c);
  }
  if (s.is_zero()) return Subspace::full(n);
  return kernel(stacked);
}

Subspace bracket_subspaces(const LieAlgebra& a, const Subspace& s, const Subspace& t) {
  check_ambient(a, s, "left subspace");
  check_ambient(a, t, "right subspace");
  std::vector<Vector> vs;
  auto tb = t.basis();
  for (const auto& x : s.basis())
    for (const auto& y : tb) {
      Vector z = bracket(a, x, y);
      if (!liekv::is_zero(z)) vs.push_back(std::move(z));
    }
  return Subspace::span(a.dim(), vs);
}

bool is_subalgebra(const LieAlgebra& a, const Subspace& s) { return s.contains(bracket_subspaces(a, s, s)); }

bool is_ideal(const LieAlgebra& a, const Subspace& s) {
  return s.contains(bracket_subspaces(a, Subspace::full(a.dim()), s));
}

bool is_ideal_in(const LieAlgebra& a, const Subspace& ambient, const Subspace& ideal) {
  return ambient.contains(ideal) && ideal.contains(bracket_subspaces(a, ambient, ideal));
}

bool is_abelian(const LieAlgebra& a, const Subspace& s) { return bracket_subspaces(a, s, s).is_zero(); }

bool is_nilpotent_operator(const Matrix& op) {
  return op.power(static_cast<unsigned>(op.rows())).is_zero();
}

std::vector<Subspace> derived_series(const LieAlgebra& a, const Subspace& s) {
  if (!is_subalgebra(a, s)) throw Error(ErrorKind::NotASubalgebra, "derived series needs a subalgebra");
  std::vector<Subspace> series{s};
  for (;;) {
    Subspace next = bracket_subspaces(a, series.back(), series.back());
    bool done = next == series.back();
    if (!done) series.push_back(std::move(next));
    if (done || series.back().is_zero()) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& a, const Subspace& s) {
  if (!is_subalgebra(a, s)) throw Error(ErrorKind::NotASubalgebra, "lower central series needs a subalgebra");
  std::vector<Subspace> series{s};
  for (;;) {
    Subspace next = bracket_subspaces(a, s, series.back());
    bool done = next == series.back();
    if (!done) series.push_back(std::move(next));
    if (done || series.back().is_zero()) break;
  }
  return series;
}

bool is_solvable(const LieAlgebra& a, const Subspace& s) { return derived_series(a, s).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& a, const Subspace& s) { return lower_central_series(a, s).back().is_zero(); }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& a, const Subspace& s) {
  auto series = lower_central_series(a, s);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

Subspace radical(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  Subspace full = Subspace::full(n);
  Subspace derived = bracket_subspaces(a, full, full);
  Matrix k = killing_form(a);
  Matrix conditions(derived.dim(), n);
  for (std::size_t i = 0; i < derived.dim(); ++i) {
    Vector row = k.transpose().apply(derived.basis_vector(i));
    for (std::size_t c = 0; c < n; ++c) conditions(i, c) = row[c];
  }
  Subspace r = derived.is_zero() ? full : kernel(conditions);
  if (!is_solvable(a, r))
    throw Error(ErrorKind::InternalInconsistency, "Cartan-criterion radical is not solvable");
  return r;
}

void verify_nilradical_candidate(const LieAlgebra& a, const Subspace& n) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::DeclaredNilradicalInvalid, why); };
  if (n.ambient_dim() != a.dim()) fail("ambient dimension mismatch");
  if (!is_ideal(a, n)) fail("not an ideal");
  if (!is_nilpotent(a, n)) fail("not nilpotent");
  Subspace r = radical(a);
  if (!r.contains(n)) fail("not contained in the radical");
  if (!n.contains(bracket_subspaces(a, Subspace::full(a.dim()), r))) fail("does not contain [g, r(g)]");
  for (const auto& c : n.complement_in(r))
    if (is_nilpotent_operator(ad_matrix(a, c)))
      fail("radical element " + a.format(c) + " outside the candidate has nilpotent ad");
}

Subspace nilradical(const LieAlgebra& a) {
  Subspace r = radical(a);
  const auto& declared = a.declared().nilradical;
  if (is_nilpotent(a, r)) {
    if (declared && !(*declared == r))
      throw Error(ErrorKind::DeclaredNilradicalInvalid, "radical is nilpotent but differs from the declaration");
    return r;
  }
  if (!declared) throw Error(ErrorKind::NilradicalUndecided, "radical is not nilpotent and no nilradical is declared");
  verify_nilradical_candidate(a, *declared);
  return *declared;
}

namespace {

/// ad restricted to an ideal-closed subspace, in that subspace's coordinates.
std::vector<Matrix> restricted_ad(const LieAlgebra& a, const Subspace& s) {
  std::vector<Matrix> out;
  auto basis = s.basis();
  for (const auto& x : basis) {
    Matrix m(s.dim(), s.dim());
    for (std::size_t j = 0; j < basis.size(); ++j) m.set_column(j, s.coordinates(bracket(a, x, basis[j])));
    out.push_back(std::move(m));
  }
  return out;
}

/// Linear maps of S commuting with every ad_S(x).
std::vector<Matrix> centroid(const LieAlgebra& a, const Subspace& s) {
  const std::size_t p = s.dim();
  auto ads = restricted_ad(a, s);
  Matrix system(ads.size() * p * p, p * p);
  std::size_t row = 0;
  for (const auto& m : ads)
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c, ++row)
        for (std::size_t k = 0; k < p; ++k) {
          system(row, r * p + k) += m(k, c);
          system(row, k * p + c) -= m(r, k);
        }
  std::vector<Matrix> basis;
  for (const auto& v : system.kernel()) {
    Matrix t(p, p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c) t(r, c) = v[r * p + c];
    basis.push_back(std::move(t));
  }
  return basis;
}

void split_semisimple(const LieAlgebra& a, const Subspace& s, std::vector<Subspace>& out) {
  if (s.is_zero()) return;
  auto cent = centroid(a, s);
  if (cent.size() <= 1) {
    out.push_back(s);
    return;
  }
  // A generic centroid element separates the simple ideals through the
  // kernels of its minimal polynomial's coprime factors.
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  for (int attempt = 0; attempt < 12; ++attempt) {
    Matrix t(s.dim(), s.dim());
    for (const auto& c : cent) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      long coef = static_cast<long>((state >> 33) % 19) - 9;
      t = t + Scalar(coef) * c;
    }
    auto factors = factor_over_rationals(minimal_polynomial(t));
    if (factors.size() < 2) continue;
    for (const auto& f : factors) {
      Matrix fk = pow(f.factor, f.multiplicity)(t);
      std::vector<Vector> vs;
      for (const auto& coords : fk.kernel()) vs.push_back(s.combine(coords));
      split_semisimple(a, Subspace::span(a.dim(), vs), out);
    }
    return;
  }
  out.push_back(s);
}

}  // namespace

LeviReport verify_levi(const LieAlgebra& a, const DeclaredStructure& decl) {
  if (!decl.levi) throw Error(ErrorKind::MissingDeclaration, "levi");
  const Subspace& s = *decl.levi;
  check_ambient(a, s, "levi");
  if (!is_subalgebra(a, s)) throw Error(ErrorKind::NotASubalgebra, "declared Levi factor is not a subalgebra");
  Subspace r = radical(a);
  if (!s.intersect(r).is_zero() || !(s + r).is_full())
    throw Error(ErrorKind::NotComplementary, "Levi factor and radical are not complementary");
  Matrix k = killing_form(a);
  auto gram = [&](const Subspace& sub) {
    Matrix g(sub.dim(), sub.dim());
    for (std::size_t i = 0; i < sub.dim(); ++i)
      for (std::size_t j = 0; j < sub.dim(); ++j) {
        Vector ki = k.apply(sub.basis_vector(j));
        Scalar acc = 0;
        Vector bi = sub.basis_vector(i);
        for (std::size_t c = 0; c < bi.size(); ++c) acc += bi[c] * ki[c];
        g(i, j) = acc;
      }
    return g;
  };
  if (sgn(gram(s).determinant()) == 0 && !s.is_zero())
    throw Error(ErrorKind::KillingDegenerateOnLevi, "Killing form restricted to the Levi factor is degenerate");

  LeviReport report{s, {}, {}, Subspace(a.dim()), Subspace(a.dim())};
  split_semisimple(a, s, report.simple_ideals);
  for (const auto& ideal : report.simple_ideals) {
    bool compact = is_positive_definite(Scalar(-1) * gram(ideal));
    report.simple_is_compact.push_back(compact);
    if (compact)
      report.compact_part = report.compact_part + ideal;
    else
      report.noncompact_part = report.noncompact_part + ideal;
  }
  return report;
}

Subspace smallest_ideal_containing(const LieAlgebra& a, const Subspace& ambient, const Subspace& seed) {
  Subspace current = seed;
  for (;;) {
    Subspace next = current + bracket_subspaces(a, ambient, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace largest_ideal_inside(const LieAlgebra& a, const Subspace& s) {
  Subspace current = s;
  for (;;) {
    // Keep only the Y in `current` whose brackets with every e_j stay inside.
    std::vector<Vector> kept;
    const std::size_t d = current.dim();
    if (d == 0) return current;
    std::vector<Vector> complement = current.complement_in(Subspace::full(a.dim()));
    // Conditions: for each basis e_j, [e_j, sum c_i b_i] has no component along the complement.
    Matrix basis_change = Matrix::from_columns([&] {
      auto cols = current.basis();
      for (auto& v : complement) cols.push_back(v);
      return cols;
    }(), a.dim());
    Matrix to_coords = *basis_change.inverse();
    Matrix conditions(a.dim() * complement.size(), d);
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t i = 0; i < d; ++i) {
        Vector coords = to_coords.apply(a.ad_basis(j).apply(current.basis_vector(i)));
        for (std::size_t c = 0; c < complement.size(); ++c) conditions(j * complement.size() + c, i) = coords[d + c];
      }
    for (const auto& kv : conditions.kernel()) kept.push_back(current.combine(kv));
    Subspace next = complement.empty() ? current : Subspace::span(a.dim(), kept);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_semisimple(const LieAlgebra& a) { return radical(a).is_zero(); }

}  // namespace liekv
