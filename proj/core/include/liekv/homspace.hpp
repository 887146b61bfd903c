#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liekv/lie_algebra.hpp"

namespace liekv {

/// Reductive homogeneous space (G/H, g) given by g = h + m and an
/// Ad(H)-invariant inner product on m. The metric is written in the
/// canonical (RREF) basis of m.
class ReductiveSpace {
 public:
  static ReductiveSpace create(LieAlgebra algebra, Subspace h, Subspace m, Matrix metric,
                               std::optional<bool> declared_go = std::nullopt);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Subspace& h() const noexcept { return h_; }
  const Subspace& m() const noexcept { return m_; }
  const Matrix& metric() const noexcept { return metric_; }
  std::optional<bool> declared_go() const noexcept { return declared_go_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }

  /// Coordinates of the m-component of x (along h) in the basis of m.
  Vector m_coordinates(const Vector& x) const { return m_coords_.apply(x); }
  /// m-component of x as an element of g.
  Vector project_m(const Vector& x) const;
  /// <x_m, y_m>.
  Scalar inner(const Vector& x, const Vector& y) const;
  double inner(const std::vector<double>& x, const std::vector<double>& y) const;

 private:
  ReductiveSpace(LieAlgebra algebra) : algebra_(std::move(algebra)) {}
  LieAlgebra algebra_;
  Subspace h_;
  Subspace m_;
  Matrix metric_;
  std::optional<bool> declared_go_;
  Matrix m_coords_;
  Eigen::MatrixXd m_coords_f_;
  Eigen::MatrixXd metric_f_;
};

/// One factor exp(t Z) of a group element. Exact parameters are rationals,
/// sampled ones may be floating.
struct WordLetter {
  Vector direction;
  std::variant<Scalar, double> parameter;
};

/// a = exp(t_1 Z_1) ... exp(t_n Z_n); the empty word is the identity.
struct GroupWord {
  std::vector<WordLetter> letters;

  bool has_exact_parameters() const;
  std::string to_string(const LieAlgebra& a) const;
};

/// Real number that is exact when it could be computed over Q.
struct Number {
  std::optional<Scalar> exact;
  double approx = 0.0;

  static Number of(const Scalar& q) { return {q, q.get_d()}; }
  static Number of(double d) { return {std::nullopt, d}; }
  std::string to_string() const;
};

/// Ad(a^-1) X. Exact when every letter has a rational parameter and a
/// nilpotent ad; `numeric` is always filled.
struct Translation {
  std::optional<Vector> exact;
  std::vector<double> numeric;
};

Translation translate(const ReductiveSpace& s, const GroupWord& word, const Vector& x);

/// g_{aH}(X~, Y~) = <proj_m Ad(a^-1) X, proj_m Ad(a^-1) Y>.
Number metric_at(const ReductiveSpace& s, const GroupWord& word, const Vector& x, const Vector& y);

/// k-th derivative at t = 0 of F(t) = |proj_m exp(t ad Z) X|^2.
Scalar taylor_condition(const ReductiveSpace& s, const Vector& x, const Vector& z, unsigned k);

enum class Certificate { AbelianIdeal, CenterNilradical, Central };

std::string to_string(Certificate c);

/// Exact reason why X has constant length, if one of the known ones applies.
/// Throws GoStatusUnknown when only a GO-dependent certificate would apply
/// and the space does not declare its GO status.
std::optional<Certificate> certificate_constant_length(const ReductiveSpace& s, const Vector& x);

/// Derivative data behind a refutation.
struct InfinitesimalWitness {
  Vector direction;
  unsigned order = 0;
  Scalar value;
};

struct Witness {
  GroupWord word;
  /// Point of m for witnesses that are not group elements (GO check).
  std::optional<Vector> point;
  bool exact = false;
  Number lhs;
  Number rhs;
  std::optional<InfinitesimalWitness> infinitesimal;
};

struct Verdict {
  enum class Status { CertifiedTrue, RefutedAt, UndecidedPassedSamples };

  Status status = Status::UndecidedPassedSamples;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  std::size_t samples = 0;
  unsigned order = 0;
  double tolerance = 0.0;
  std::string note;

  bool refuted() const noexcept { return status == Status::RefutedAt; }
  bool certified() const noexcept { return status == Status::CertifiedTrue; }
};

std::string to_string(Verdict::Status s);

struct SamplingParams {
  std::size_t samples = 200;
  unsigned order = 6;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  unsigned max_word_length = 3;
  long max_parameter = 9;
  bool use_certificates = true;
};

/// Draws seeded group words. Sample i depends only on (seed, i).
class WordSampler {
 public:
  WordSampler(const ReductiveSpace& s, std::uint64_t seed, const SamplingParams& params);

  bool has_nilpotent_directions() const noexcept { return !nilradical_.empty() || !nilpotent_basis_.empty(); }
  /// Word with rational parameters along nilpotent directions.
  GroupWord exact_word(std::size_t index) const;
  /// Word with floating parameters in [-2, 2] along arbitrary directions.
  GroupWord float_word(std::size_t index) const;
  /// Random rational element of the subspace.
  Vector rational_element(const Subspace& sub, std::size_t index, std::uint64_t stream) const;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
  SamplingParams params_;
  std::vector<Vector> nilradical_;
  std::vector<Vector> nilpotent_basis_;
};

/// Constant-length verdict for the Killing field X.
Verdict check_constant_length(const ReductiveSpace& s, const Vector& x, const SamplingParams& params = {});

/// Exact sampled check of the GO criterion: for v in m there must be Z in h
/// with <[Y, v + Z]_m, v> = 0 for every Y.
Verdict check_go(const ReductiveSpace& s, std::size_t samples, std::uint64_t seed);

/// Some Z in h solving the GO system at v, if one exists.
std::optional<Vector> go_solution(const ReductiveSpace& s, const Vector& v);

/// coefficient * g(U, V) summed over terms.
struct FormTerm {
  Scalar coefficient;
  Vector u;
  Vector v;
};

/// Whether sum c_i g(U_i, V_i) vanishes on M: identity, exact nilpotent
/// words, then floating words.
Verdict form_vanishes_on_M(const ReductiveSpace& s, const std::vector<FormTerm>& terms, const SamplingParams& params);

Verdict orthogonal_on_M(const ReductiveSpace& s, const Vector& u, const Vector& v, const SamplingParams& params);

}  // namespace liekv
