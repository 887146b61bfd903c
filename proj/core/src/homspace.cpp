#include "liekv/homspace.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "liekv/error.hpp"

namespace liekv {

namespace {

Scalar form(const Matrix& g, const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (sgn(b[j]) != 0) s += a[i] * g(i, j) * b[j];
  }
  return s;
}

Eigen::VectorXd to_eigen_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

ReductiveSpace ReductiveSpace::create(LieAlgebra algebra, Subspace h, Subspace m, Matrix metric,
                                      std::optional<bool> declared_go) {
  const std::size_t n = algebra.dim();
  if (h.ambient_dim() != n || m.ambient_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "h and m must live in the algebra");
  if (!is_subalgebra(algebra, h)) throw Error(ErrorKind::NotReductive, "h is not a subalgebra");
  if (h.dim() + m.dim() != n || !h.intersect(m).is_zero())
    throw Error(ErrorKind::NotReductive, "h and m are not complementary");
  if (!bracket_subspaces(algebra, h, m).is_zero() && !m.contains(bracket_subspaces(algebra, h, m)))
    throw Error(ErrorKind::NotReductive, "[h, m] is not contained in m");
  if (metric.rows() != m.dim() || metric.cols() != m.dim())
    throw Error(ErrorKind::DimensionMismatch, "metric must be dim(m) x dim(m)");
  if (!is_symmetric(metric) || !is_positive_definite(metric))
    throw Error(ErrorKind::MetricNotPositiveDefinite, "metric on m is not symmetric positive definite");

  ReductiveSpace s(std::move(algebra));
  std::vector<Vector> columns = h.basis();
  for (auto& v : m.basis()) columns.push_back(std::move(v));
  auto inv = Matrix::from_columns(columns, n).inverse();
  if (!inv) throw Error(ErrorKind::InternalInconsistency, "h + m basis is singular");
  s.m_coords_ = Matrix(m.dim(), n);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) s.m_coords_(r, c) = (*inv)(h.dim() + r, c);
  s.h_ = std::move(h);
  s.m_ = std::move(m);
  s.metric_ = std::move(metric);
  s.declared_go_ = declared_go;
  s.m_coords_f_ = s.m_coords_.to_eigen();
  s.metric_f_ = s.metric_.to_eigen();

  const auto hb = s.h_.basis();
  const auto mb = s.m_.basis();
  for (std::size_t z = 0; z < hb.size(); ++z) {
    for (std::size_t i = 0; i < mb.size(); ++i) {
      for (std::size_t j = i; j < mb.size(); ++j) {
        Scalar residual = s.inner(bracket(s.algebra_, hb[z], mb[i]), mb[j]) +
                          s.inner(mb[i], bracket(s.algebra_, hb[z], mb[j]));
        if (sgn(residual) != 0)
          throw Error(ErrorKind::MetricNotInvariant,
                      "h basis " + std::to_string(z) + ", m basis " + std::to_string(i) + ", " + std::to_string(j) +
                          ": residual " + liekv::to_string(residual),
                      {static_cast<long>(z), static_cast<long>(i), static_cast<long>(j)});
      }
    }
  }
  Subspace ideal = largest_ideal_inside(s.algebra_, s.h_);
  if (!ideal.is_zero())
    throw Error(ErrorKind::IneffectiveAction, "h contains the ideal of dimension " + std::to_string(ideal.dim()));
  return s;
}

Vector ReductiveSpace::project_m(const Vector& x) const { return m_.combine(m_coordinates(x)); }

Scalar ReductiveSpace::inner(const Vector& x, const Vector& y) const {
  return form(metric_, m_coordinates(x), m_coordinates(y));
}

double ReductiveSpace::inner(const std::vector<double>& x, const std::vector<double>& y) const {
  Eigen::VectorXd a = m_coords_f_ * to_eigen_vector(x);
  Eigen::VectorXd b = m_coords_f_ * to_eigen_vector(y);
  return a.dot(metric_f_ * b);
}

bool GroupWord::has_exact_parameters() const {
  for (const auto& l : letters)
    if (!std::holds_alternative<Scalar>(l.parameter)) return false;
  return true;
}

namespace {

std::string format_double(double d) {
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

}  // namespace

std::string GroupWord::to_string(const LieAlgebra& a) const {
  if (letters.empty()) return "identity";
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += " ";
    s += "(" + a.format(l.direction) + ",";
    if (const auto* q = std::get_if<Scalar>(&l.parameter)) s += liekv::to_string(*q);
    else s += format_double(std::get<double>(l.parameter));
    s += ")";
  }
  return s;
}

std::string Number::to_string() const { return exact ? liekv::to_string(*exact) : format_double(approx); }

namespace {

/// exp(N) v for nilpotent N; the series stops once a term vanishes.
Vector exp_nilpotent_apply(const Operator& nil, const Vector& v) {
  Vector result = v;
  Vector term = v;
  for (std::size_t k = 1; k <= v.size(); ++k) {
    term = scale(Scalar(1, static_cast<long>(k)), nil.apply(term));
    if (is_zero(term)) break;
    axpy(result, 1, term);
  }
  return result;
}

double parameter_value(const WordLetter& l) {
  if (const auto* q = std::get_if<Scalar>(&l.parameter)) return q->get_d();
  return std::get<double>(l.parameter);
}

}  // namespace

Translation translate(const ReductiveSpace& s, const GroupWord& word, const Vector& x) {
  const LieAlgebra& a = s.algebra();
  Translation t;
  bool exact = word.has_exact_parameters();
  std::vector<Operator> ads;
  ads.reserve(word.letters.size());
  for (const auto& l : word.letters) {
    ads.push_back(ad_matrix(a, l.direction));
    if (exact && !is_nilpotent_operator(ads.back())) exact = false;
  }
  if (exact) {
    Vector v = x;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
      const Scalar& p = std::get<Scalar>(word.letters[i].parameter);
      v = exp_nilpotent_apply(Scalar(-p) * ads[i], v);
    }
    t.numeric = to_double(v);
    t.exact = std::move(v);
    return t;
  }
  Eigen::VectorXd v = to_eigen_vector(to_double(x));
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    Eigen::MatrixXd gen = -parameter_value(word.letters[i]) * ads[i].to_eigen();
    v = gen.exp() * v;
  }
  t.numeric.assign(v.data(), v.data() + v.size());
  return t;
}

Number metric_at(const ReductiveSpace& s, const GroupWord& word, const Vector& x, const Vector& y) {
  Translation tx = translate(s, word, x);
  Translation ty = translate(s, word, y);
  if (tx.exact && ty.exact) return Number::of(s.inner(*tx.exact, *ty.exact));
  return Number::of(s.inner(tx.numeric, ty.numeric));
}

Scalar taylor_condition(const ReductiveSpace& s, const Vector& x, const Vector& z, unsigned k) {
  if (k == 0) throw Error(ErrorKind::UsageError, "taylor_condition needs k >= 1");
  const Operator l = ad_matrix(s.algebra(), z);
  std::vector<Vector> powers;
  powers.reserve(k + 1);
  Vector v = x;
  for (unsigned j = 0; j <= k; ++j) {
    powers.push_back(s.m_coordinates(v));
    v = l.apply(v);
  }
  Scalar total = 0;
  mpz_class binom = 1;
  for (unsigned j = 0; j <= k; ++j) {
    total += Scalar(binom) * form(s.metric(), powers[j], powers[k - j]);
    binom = binom * (k - j) / (j + 1);
  }
  return total;
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::AbelianIdeal: return "AbelianIdeal";
    case Certificate::CenterNilradical: return "CenterNilradical";
    case Certificate::Central: return "Central";
  }
  return "?";
}

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::CertifiedTrue: return "CertifiedTrue";
    case Verdict::Status::RefutedAt: return "RefutedAt";
    case Verdict::Status::UndecidedPassedSamples: return "UndecidedPassedSamples";
  }
  return "?";
}

std::optional<Certificate> certificate_constant_length(const ReductiveSpace& s, const Vector& x) {
  const LieAlgebra& a = s.algebra();
  const bool central = center(a).contains(x);
  bool in_abelian = false;
  for (const auto& ideal : a.declared().abelian_ideals)
    if (ideal.contains(x)) in_abelian = true;
  bool in_center_nil = false;
  try {
    in_center_nil = center_of(a, nilradical(a)).contains(x);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NilradicalUndecided) throw;
  }
  auto go = s.declared_go();
  if (go && *go) {
    if (in_abelian) return Certificate::AbelianIdeal;
    if (in_center_nil) return Certificate::CenterNilradical;
  }
  if (central) return Certificate::Central;
  if (!go && (in_abelian || in_center_nil))
    throw Error(ErrorKind::GoStatusUnknown, "certificate requires the GO property, which the space does not declare");
  return std::nullopt;
}

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), stream};
  return std::mt19937_64(seq);
}

// std distributions are not portable across standard libraries.
long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Scalar random_rational(std::mt19937_64& rng, long bound, bool nonzero) {
  long num = uniform_int(rng, -bound, bound);
  if (nonzero && num == 0) num = 1;
  Scalar q(num, uniform_int(rng, 1, bound));
  q.canonicalize();
  return q;
}

Vector random_combination(std::mt19937_64& rng, const std::vector<Vector>& basis, std::size_t dim, long bound) {
  Vector v = zero_vector(dim);
  for (const auto& b : basis) axpy(v, Scalar(uniform_int(rng, -bound, bound)), b);
  if (is_zero(v) && !basis.empty()) v = basis[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(basis.size()) - 1))];
  return v;
}

constexpr std::uint32_t kExactStream = 1;
constexpr std::uint32_t kFloatStream = 2;

}  // namespace

WordSampler::WordSampler(const ReductiveSpace& s, std::uint64_t seed, const SamplingParams& params)
    : dim_(s.dim()), seed_(seed), params_(params) {
  const LieAlgebra& a = s.algebra();
  try {
    nilradical_ = nilradical(a).basis();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NilradicalUndecided) throw;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.ad_basis(i).is_zero() && is_nilpotent_operator(a.ad_basis(i))) nilpotent_basis_.push_back(unit_vector(a.dim(), i));
}

GroupWord WordSampler::exact_word(std::size_t index) const {
  auto rng = make_rng(seed_, index, kExactStream);
  GroupWord w;
  const long length = uniform_int(rng, 1, std::max<long>(1, params_.max_word_length));
  for (long i = 0; i < length; ++i) {
    Vector dir;
    bool from_nil = !nilradical_.empty() && (nilpotent_basis_.empty() || uniform_int(rng, 0, 1) == 0);
    if (from_nil) dir = random_combination(rng, nilradical_, dim_, 3);
    else dir = nilpotent_basis_[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(nilpotent_basis_.size()) - 1))];
    if (is_zero(dir)) continue;
    w.letters.push_back({std::move(dir), random_rational(rng, params_.max_parameter, true)});
  }
  return w;
}

GroupWord WordSampler::float_word(std::size_t index) const {
  auto rng = make_rng(seed_, index, kFloatStream);
  GroupWord w;
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < dim_; ++i) basis.push_back(unit_vector(dim_, i));
  const long length = uniform_int(rng, 1, std::max<long>(1, params_.max_word_length));
  for (long i = 0; i < length; ++i) {
    Vector dir = random_combination(rng, basis, dim_, 2);
    w.letters.push_back({std::move(dir), uniform_real(rng, -2.0, 2.0)});
  }
  return w;
}

Vector WordSampler::rational_element(const Subspace& sub, std::size_t index, std::uint64_t stream) const {
  auto rng = make_rng(seed_, index, static_cast<std::uint32_t>(16 + stream));
  Vector v = zero_vector(sub.ambient_dim());
  for (const auto& b : sub.basis()) axpy(v, random_rational(rng, params_.max_parameter, false), b);
  return v;
}

namespace {

constexpr std::array<long, 8> kProbeNum{1, -1, 2, -2, 1, -1, 3, -3};
constexpr std::array<long, 8> kProbeDen{1, 1, 1, 1, 2, 2, 1, 1};

Verdict refuted(Witness w, const SamplingParams& p) {
  Verdict v;
  v.status = Verdict::Status::RefutedAt;
  v.witness = std::move(w);
  v.samples = p.samples;
  v.order = p.order;
  v.tolerance = p.tolerance;
  return v;
}

double float_scale(const Number& a, const Number& b) { return std::max({1.0, std::abs(a.approx), std::abs(b.approx)}); }

/// Turns a non-zero Taylor coefficient into a group-level witness when a
/// short word along Z already moves F.
Verdict refute_from_derivative(const ReductiveSpace& s, const Vector& x, const Vector& z, unsigned k, const Scalar& value,
                               const Scalar& base, const SamplingParams& p) {
  InfinitesimalWitness inf{z, k, value};
  const bool nilpotent = is_nilpotent_operator(ad_matrix(s.algebra(), z));
  for (std::size_t i = 0; i < kProbeNum.size(); ++i) {
    Scalar t(kProbeNum[i], kProbeDen[i]);
    GroupWord w;
    if (nilpotent) w.letters.push_back({z, t});
    else w.letters.push_back({z, t.get_d()});
    Number f = metric_at(s, w, x, x);
    Number f0 = Number::of(base);
    bool differs = f.exact ? *f.exact != base : std::abs(f.approx - f0.approx) > p.tolerance * float_scale(f, f0);
    if (differs) return refuted({w, std::nullopt, f.exact.has_value(), f, f0, inf}, p);
  }
  return refuted({GroupWord{}, std::nullopt, true, Number::of(value), Number::of(Scalar(0)), inf}, p);
}

}  // namespace

Verdict check_constant_length(const ReductiveSpace& s, const Vector& x, const SamplingParams& params) {
  if (params.order == 0) throw Error(ErrorKind::UsageError, "order must be at least 1");
  const LieAlgebra& a = s.algebra();
  if (x.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "field has the wrong dimension");
  std::string note;
  if (params.use_certificates) {
    try {
      if (auto c = certificate_constant_length(s, x)) {
        Verdict v;
        v.status = Verdict::Status::CertifiedTrue;
        v.certificate = c;
        v.order = params.order;
        v.tolerance = params.tolerance;
        return v;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GoStatusUnknown) throw;
      note = "GO status unknown; GO certificates skipped";
    }
  }
  const Scalar base = s.inner(x, x);
  WordSampler sampler(s, params.seed, params);

  std::vector<Vector> directions;
  for (std::size_t i = 0; i < a.dim(); ++i) directions.push_back(unit_vector(a.dim(), i));
  const std::size_t random_dirs = std::min<std::size_t>(params.samples, 16);
  for (std::size_t i = 0; i < random_dirs; ++i) directions.push_back(sampler.rational_element(Subspace::full(a.dim()), i, 0));
  for (const auto& z : directions) {
    if (is_zero(z)) continue;
    for (unsigned k = 1; k <= params.order; ++k) {
      Scalar value = taylor_condition(s, x, z, k);
      if (sgn(value) != 0) {
        Verdict v = refute_from_derivative(s, x, z, k, value, base, params);
        v.note = note;
        return v;
      }
    }
  }

  const Number f0 = Number::of(base);
  for (std::size_t i = 0; i < params.samples; ++i) {
    const bool exact = sampler.has_nilpotent_directions() && i % 2 == 0;
    GroupWord w = exact ? sampler.exact_word(i) : sampler.float_word(i);
    Number f = metric_at(s, w, x, x);
    bool differs = f.exact ? *f.exact != base : std::abs(f.approx - f0.approx) > params.tolerance * float_scale(f, f0);
    if (differs) {
      Verdict v = refuted({w, std::nullopt, f.exact.has_value(), f, f0, std::nullopt}, params);
      v.note = note;
      return v;
    }
  }
  Verdict v;
  v.samples = params.samples;
  v.order = params.order;
  v.tolerance = params.tolerance;
  v.note = note;
  return v;
}

std::optional<Vector> go_solution(const ReductiveSpace& s, const Vector& v) {
  const LieAlgebra& a = s.algebra();
  const auto hb = s.h().basis();
  Matrix system(a.dim(), hb.size());
  Vector rhs(a.dim());
  for (std::size_t y = 0; y < a.dim(); ++y) {
    Vector ey = unit_vector(a.dim(), y);
    rhs[y] = -s.inner(bracket(a, ey, v), v);
    for (std::size_t c = 0; c < hb.size(); ++c) system(y, c) = s.inner(bracket(a, ey, hb[c]), v);
  }
  if (hb.empty()) {
    if (!is_zero(rhs)) return std::nullopt;
    return zero_vector(a.dim());
  }
  auto z = system.solve(rhs);
  if (!z) return std::nullopt;
  return s.h().combine(*z);
}

Verdict check_go(const ReductiveSpace& s, std::size_t samples, std::uint64_t seed) {
  SamplingParams p;
  p.samples = samples;
  p.seed = seed;
  WordSampler sampler(s, seed, p);
  std::vector<Vector> points = s.m().basis();
  const std::size_t base = points.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i + 1; j < base; ++j) points.push_back(add(points[i], points[j]));
  for (std::size_t i = 0; i < samples; ++i) points.push_back(sampler.rational_element(s.m(), i, 1));

  for (const auto& v : points) {
    if (!go_solution(s, v)) {
      Verdict r;
      r.status = Verdict::Status::RefutedAt;
      r.witness = Witness{GroupWord{}, v, true, Number::of(Scalar(0)), Number::of(Scalar(0)), std::nullopt};
      r.samples = points.size();
      r.note = "no Z in h solves the GO system at this point";
      return r;
    }
  }
  Verdict ok;
  ok.samples = points.size();
  ok.note = "GO-consistent";
  return ok;
}

Verdict form_vanishes_on_M(const ReductiveSpace& s, const std::vector<FormTerm>& terms, const SamplingParams& params) {
  auto evaluate = [&](const GroupWord& w) {
    std::optional<Scalar> exact = Scalar(0);
    double approx = 0.0, scale = 1.0;
    for (const auto& t : terms) {
      Number n = metric_at(s, w, t.u, t.v);
      if (exact && n.exact) *exact += t.coefficient * *n.exact;
      else exact.reset();
      approx += t.coefficient.get_d() * n.approx;
      scale = std::max(scale, std::abs(t.coefficient.get_d() * n.approx));
    }
    return std::pair<Number, double>{exact ? Number::of(*exact) : Number::of(approx), scale};
  };
  auto fails = [&](const std::pair<Number, double>& r) {
    return r.first.exact ? sgn(*r.first.exact) != 0 : std::abs(r.first.approx) > params.tolerance * r.second;
  };

  const Number zero = Number::of(Scalar(0));
  auto at_identity = evaluate(GroupWord{});
  if (fails(at_identity)) return refuted({GroupWord{}, std::nullopt, true, at_identity.first, zero, std::nullopt}, params);
  WordSampler sampler(s, params.seed, params);
  for (std::size_t i = 0; i < params.samples; ++i) {
    const bool exact = sampler.has_nilpotent_directions() && i % 2 == 0;
    GroupWord w = exact ? sampler.exact_word(i) : sampler.float_word(i);
    auto r = evaluate(w);
    if (fails(r)) return refuted({w, std::nullopt, r.first.exact.has_value(), r.first, zero, std::nullopt}, params);
  }
  Verdict v;
  v.samples = params.samples;
  v.order = params.order;
  v.tolerance = params.tolerance;
  return v;
}

Verdict orthogonal_on_M(const ReductiveSpace& s, const Vector& u, const Vector& v, const SamplingParams& params) {
  return form_vanishes_on_M(s, {{Scalar(1), u, v}}, params);
}

}  // namespace liekv
