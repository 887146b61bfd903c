#include "liekv/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "liekv/error.hpp"

namespace liekv {

using ojson = nlohmann::ordered_json;

std::string to_string(FindingStatus s) {
  switch (s) {
    case FindingStatus::Holds: return "Holds";
    case FindingStatus::HoldsSampled: return "HoldsSampled";
    case FindingStatus::Violated: return "Violated";
    case FindingStatus::PremiseNotMet: return "PremiseNotMet";
    case FindingStatus::Skipped: return "Skipped";
    case FindingStatus::Inconclusive: return "Inconclusive";
    case FindingStatus::Counterexample: return "Counterexample";
  }
  return "?";
}

const std::vector<StatementInfo>& registry() {
  static const std::vector<StatementInfo> entries{
      {"thm-1.1", "spectrum of ad(X) is pure imaginary", true, false},
      {"lemma-2.2", "first and second order length conditions vanish on M", true, false},
      {"prop-2.3", "[X,g] is orthogonal to X and stable under the centralizer", true, false},
      {"thm-2.4", "minimal ideals u_i containing [X,g_i] are mutually orthogonal", true, false},
      {"prop-2.5", "ad(X) is skew on [X,g]", true, false},
      {"prop-2.6", "no real eigenvalues; invariant and abelian ideals commute with X", true, false},
      {"prop-2.6-1", "ad(X) has no non-zero real eigenvalue", true, false},
      {"thm-2.7", "Fitting at power two, invertibility on A2, rotation blocks", true, false},
      {"thm-2.7-det", "determinant of the skewness system is -2a(a^2+b^2)^4", false, false},
      {"prop-2.8", "graded brackets land in the predicted root spaces", true, false},
      {"prop-2.9", "ideals J, I and J~ attached to X", true, false},
      {"prop-2.11", "orthogonality of root spaces and related brackets", true, false},
      {"prop-2.12", "A1 = g forces X into the nilradical", true, false},
      {"lemma-3.1", "GO criterion agrees with the declared GO flag", false, false},
      {"thm-3.4", "abelian ideals of a GO space consist of constant-length fields", false, false},
      {"cor-3.5", "non-semisimple GO spaces carry a constant-length field", false, false},
      {"prop-3.7", "noncompact Levi part commutes with the radical", false, false},
      {"prop-3.8", "nilradical is abelian or two-step nilpotent", false, false},
      {"thm-3.9", "on n(g): constant length iff central in n(g)", false, false},
      {"cor-3.10", "abelian ideals lie in the center of the nilradical", false, false},
      {"prop-3.12", "constant length with A1 = g iff X in C(n(g))", true, false},
      {"fact-gr-in-n", "[g, r(g)] lies in n(g)", false, false},
      {"conj-1.2", "probe: constant-length fields of semisimple g are compact", true, true},
      {"conj-3.6", "probe: n(g) lies in A1 on GO spaces", true, true},
  };
  return entries;
}

const StatementInfo& statement(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw Error(ErrorKind::UnknownStatement, "no verifier registered for \"" + id + "\"");
}

Matrix skewness_system(const Scalar& alpha, const Scalar& beta) {
  // Vectors are coordinates in (U, V); g(aU+bV, cU+dV) expands to
  // ac g(U,U) + (ad+bc) g(U,V) + bd g(V,V).
  using Pair = std::pair<Scalar, Scalar>;
  auto apply_l = [&](const Pair& w) {
    return Pair{alpha * w.first + beta * w.second, -beta * w.first + alpha * w.second};
  };
  auto expand = [](const Pair& p, const Pair& q) {
    return std::array<Scalar, 3>{p.first * q.first, p.first * q.second + p.second * q.first, p.second * q.second};
  };
  const Pair u{1, 0}, v{0, 1};
  const Pair lu = apply_l(u), lv = apply_l(v);
  const Pair l2u = apply_l(lu), l2v = apply_l(lv);
  std::array<std::array<Scalar, 3>, 3> rows{expand(l2u, lu), expand(l2v, lv), expand(l2u, lv)};
  auto extra = expand(l2v, lu);
  for (int k = 0; k < 3; ++k) rows[2][k] += extra[k];
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
  return m;
}

ojson verdict_json(const Verdict& v, const LieAlgebra& a) {
  ojson j;
  j["status"] = to_string(v.status);
  if (v.certificate) j["certificate"] = to_string(*v.certificate);
  if (v.witness) {
    const Witness& w = *v.witness;
    ojson wj;
    if (w.point) wj["point"] = a.format(*w.point);
    else wj["word"] = w.word.to_string(a);
    wj["exact"] = w.exact;
    wj["lhs"] = w.lhs.to_string();
    wj["rhs"] = w.rhs.to_string();
    if (w.infinitesimal) {
      wj["direction"] = a.format(w.infinitesimal->direction);
      wj["order"] = w.infinitesimal->order;
      wj["derivative"] = to_string(w.infinitesimal->value);
    }
    j["witness"] = wj;
  }
  if (v.status == Verdict::Status::UndecidedPassedSamples) {
    j["samples"] = v.samples;
    j["order"] = v.order;
    j["tolerance"] = v.tolerance;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

namespace {

std::optional<Subspace> try_nilradical(const LieAlgebra& a) {
  try {
    return nilradical(a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NilradicalUndecided) throw;
    return std::nullopt;
  }
}


/// Accumulates the individual checks of one verifier.
class Checks {
 public:
  explicit Checks(const LieAlgebra& a) : a_(a) {}

  void exact(const std::string& name, bool ok, const std::string& detail = "") {
    ojson j;
    j["check"] = name;
    j["result"] = ok ? "ok" : "failed";
    if (!detail.empty()) j["detail"] = detail;
    items_.push_back(j);
    if (!ok) violated_ = true;
  }

  void sampled(const std::string& name, const Verdict& v) {
    if (v.refuted()) {
      ojson j;
      j["check"] = name;
      j["result"] = "failed";
      j["verdict"] = verdict_json(v, a_);
      items_.push_back(j);
      violated_ = true;
      return;
    }
    ++sampled_;
    if (v.status == Verdict::Status::UndecidedPassedSamples) all_exact_ = false;
  }

  void skipped(const std::string& name, const std::string& why) {
    ojson j;
    j["check"] = name;
    j["result"] = "skipped";
    j["detail"] = why;
    items_.push_back(j);
  }

  bool violated() const noexcept { return violated_; }
  bool all_exact() const noexcept { return all_exact_; }

  void finish(Finding& f, bool premise_certified) const {
    f.evidence["checks"] = items_;
    if (sampled_ > 0) f.evidence["sampled_checks_passed"] = sampled_;
    if (violated_) f.status = FindingStatus::Violated;
    else if (items_.empty() && sampled_ == 0) {
      f.evidence["vacuous"] = true;
      f.status = premise_certified ? FindingStatus::Holds : FindingStatus::HoldsSampled;
    } else if (premise_certified && all_exact_) f.status = FindingStatus::Holds;
    else f.status = FindingStatus::HoldsSampled;
  }

 private:
  const LieAlgebra& a_;
  ojson items_ = ojson::array();
  std::size_t sampled_ = 0;
  bool violated_ = false;
  bool all_exact_ = true;
};

/// Everything a per-field verifier needs about X, computed once.
struct FieldData {
  Vector x;
  Verdict premise;
  SpectralAnalysis sa;

  bool premise_ok() const { return !premise.refuted(); }
  bool certified() const { return premise.certified(); }
};

struct Context {
  const ReductiveSpace& s;
  const LieAlgebra& a;
  const VerifyParams& params;
  const FieldData* field;

  SamplingParams inner() const {
    SamplingParams p = params.sampling;
    p.samples = std::min(p.samples, params.inner_samples);
    return p;
  }
  const Vector& x() const { return field->x; }
  const SpectralAnalysis& sa() const { return field->sa; }
  std::size_t dim() const { return a.dim(); }
};

FieldData field_data(const ReductiveSpace& s, const Vector& x, const VerifyParams& params) {
  return {x, check_constant_length(s, x, params.sampling), analyze(s.algebra(), x)};
}

/// Standard premise gate; returns false after filling the finding.
bool require_premise(const Context& c, Finding& f) {
  f.evidence["premise"] = verdict_json(c.field->premise, c.a);
  f.evidence["premise_strength"] = c.field->certified() ? "certified" : c.field->premise_ok() ? "sampling-consistent" : "refuted";
  if (c.field->premise_ok()) return true;
  f.status = FindingStatus::PremiseNotMet;
  return false;
}

bool require_go(const Context& c, Finding& f) {
  auto go = c.s.declared_go();
  if (!go) {
    f.status = FindingStatus::Skipped;
    f.evidence["missing"] = "go";
    return false;
  }
  if (!*go) {
    f.status = FindingStatus::PremiseNotMet;
    f.evidence["reason"] = "space is not declared GO";
    return false;
  }
  return true;
}

std::optional<Subspace> require_nilradical(const Context& c, Finding& f) {
  auto n = try_nilradical(c.a);
  if (!n) {
    f.status = FindingStatus::Skipped;
    f.evidence["missing"] = "nilradical";
  }
  return n;
}


// ---- per-field verifiers ----

void thm_1_1(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  f.evidence["char_poly"] = c.sa().char_poly.to_string("t");
  k.exact("spectrum pure imaginary", spectrum_is_pure_imaginary(c.sa().char_poly));
  k.finish(f, c.field->certified());
}

void lemma_2_2(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const Vector& x = c.x();
  const SamplingParams p = c.inner();
  for (std::size_t y = 0; y < c.dim(); ++y) {
    Vector ey = unit_vector(c.dim(), y);
    Vector yx = bracket(c.a, ey, x);
    // Leibniz consistency at the base point.
    Scalar t1 = taylor_condition(c.s, x, ey, 1);
    k.exact("first derivative equals 2<[Y,X],X> for Y=" + c.a.names()[y], t1 == 2 * c.s.inner(yx, x));
    k.sampled("g([Y,X],X)=0 for Y=" + c.a.names()[y], form_vanishes_on_M(c.s, {{1, yx, x}}, p));
    for (std::size_t z = 0; z < c.dim(); ++z) {
      Vector ez = unit_vector(c.dim(), z);
      Vector zx = bracket(c.a, ez, x);
      k.sampled("g([Z,[Y,X]],X)+g([Y,X],[Z,X])=0 for Y=" + c.a.names()[y] + ", Z=" + c.a.names()[z],
                form_vanishes_on_M(c.s, {{1, bracket(c.a, ez, yx), x}, {1, yx, zx}}, p));
    }
  }
  k.finish(f, c.field->certified());
}

void prop_2_3(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const SamplingParams p = c.inner();
  Subspace xg = image(c.sa().l);
  Subspace cent = centralizer(c.a, c.x());
  f.evidence["dim_[X,g]"] = xg.dim();
  f.evidence["dim_centralizer"] = cent.dim();
  for (const auto& b : xg.basis()) {
    k.sampled("X orthogonal to " + c.a.format(b), orthogonal_on_M(c.s, c.x(), b, p));
    for (const auto& z : cent.basis()) {
      Vector zb = bracket(c.a, z, b);
      if (is_zero(zb)) continue;
      k.sampled("X orthogonal to [" + c.a.format(z) + ", " + c.a.format(b) + "]", orthogonal_on_M(c.s, c.x(), zb, p));
    }
  }
  k.finish(f, c.field->certified());
}

void thm_2_4(const Context& c, Finding& f) {
  const auto& sums = c.a.declared().direct_sum;
  if (sums.size() < 2) {
    f.status = FindingStatus::Skipped;
    f.evidence["missing"] = "direct_sum";
    return;
  }
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const SamplingParams p = c.inner();
  std::vector<Subspace> u;
  ojson dims_json = ojson::array();
  for (const auto& gi : sums) {
    Subspace seed = gi.image_under(c.sa().l);
    Subspace ui = smallest_ideal_containing(c.a, gi, seed);
    k.exact("u_i is an ideal of g", is_ideal(c.a, ui));
    dims_json.push_back(ui.dim());
    u.push_back(std::move(ui));
  }
  f.evidence["dim_u"] = dims_json;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      for (const auto& ui : u[i].basis())
        for (const auto& uj : u[j].basis())
          k.sampled("g(" + c.a.format(ui) + ", " + c.a.format(uj) + ")=0", orthogonal_on_M(c.s, ui, uj, p));
  k.finish(f, c.field->certified());
}

void prop_2_5(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const SamplingParams p = c.inner();
  auto basis = image(c.sa().l).basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Vector &v = basis[i], &w = basis[j];
      k.sampled("g([X,V],W)+g(V,[X,W])=0 for V=" + c.a.format(v) + ", W=" + c.a.format(w),
                form_vanishes_on_M(c.s, {{1, c.sa().l.apply(v), w}, {1, v, c.sa().l.apply(w)}}, p));
    }
  k.finish(f, c.field->certified());
}

ojson real_roots_json(const RationalPolynomial& p) {
  ojson roots = ojson::array();
  for (const auto& r : rational_roots(p.strip_zero_roots())) roots.push_back(to_string(r));
  return roots;
}

void prop_2_6_part1(const Context& c, Checks& k, Finding& f) {
  const bool real = has_nonzero_real_root(c.sa().char_poly);
  f.evidence["nonzero_rational_real_roots"] = real_roots_json(c.sa().char_poly);
  k.exact("no non-zero real eigenvalue", !real);
}

void prop_2_6_1(const Context& c, Finding& f) {
  f.evidence["char_poly"] = c.sa().char_poly.to_string("t");
  f.evidence["has_nonzero_real_eigenvalue"] = has_nonzero_real_root(c.sa().char_poly);
  if (!require_premise(c, f)) {
    f.evidence["nonzero_rational_real_roots"] = real_roots_json(c.sa().char_poly);
    return;
  }
  Checks k(c.a);
  prop_2_6_part1(c, k, f);
  k.finish(f, c.field->certified());
}

void prop_2_6(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  prop_2_6_part1(c, k, f);
  const Operator& l = c.sa().l;
  Subspace xg = image(l);
  // Part 2, elementwise over the basis.
  for (std::size_t z = 0; z < c.dim(); ++z) {
    Vector ez = unit_vector(c.dim(), z);
    Vector xz = l.apply(ez);
    if (xg.contains(bracket(c.a, xz, ez)))
      k.exact("[[X,Z],Z] in [X,g] forces [X,Z]=0 for Z=" + c.a.names()[z], is_zero(xz));
  }
  // Part 3 on the invariant subspaces at hand.
  std::vector<std::pair<std::string, Subspace>> candidates{{"Ker(L)", kernel(l)}, {"A1", c.sa().fitting.a1}};
  for (std::size_t i = 0; i < c.sa().root_spaces.size(); ++i)
    candidates.emplace_back("V" + std::to_string(i + 1), c.sa().root_spaces[i].space);
  auto n = try_nilradical(c.a);
  if (n) {
    candidates.emplace_back("n(g)", *n);
    candidates.emplace_back("C(n(g))", center_of(c.a, *n));
  }
  std::size_t tested = 0;
  for (const auto& [name, sub] : candidates) {
    if (sub.is_zero() || !sub.contains(sub.image_under(l))) continue;
    if (!xg.contains(bracket_subspaces(c.a, sub, sub))) continue;
    ++tested;
    k.exact("[X," + name + "]=0 (invariant, [a,a] in [X,g])", sub.image_under(l).is_zero());
  }
  f.evidence["invariant_subspaces_tested"] = tested;
  // Part 4.
  for (std::size_t i = 0; i < c.a.declared().abelian_ideals.size(); ++i)
    k.exact("[X, abelian ideal " + std::to_string(i) + "]=0", c.a.declared().abelian_ideals[i].image_under(l).is_zero());
  if (n) k.exact("[X, C(n(g))]=0", center_of(c.a, *n).image_under(l).is_zero());
  else k.skipped("[X, C(n(g))]=0", "nilradical undecided");
  k.finish(f, c.field->certified());
}

void thm_2_7(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const SpectralAnalysis& sa = c.sa();
  const Operator& l = sa.l;
  f.evidence["fitting_exponent"] = sa.fitting.exponent;
  f.evidence["dim_A1"] = sa.fitting.a1.dim();
  f.evidence["dim_A2"] = sa.fitting.a2.dim();
  k.exact("Fitting exponent <= 2", sa.fitting.exponent <= 2);
  k.exact("Ker(L^3) = Ker(L^2)", kernel(l.power(3)) == kernel(l.power(2)));
  k.exact("A1 = Ker(L^2)", sa.fitting.a1 == kernel(l.power(2)));
  k.exact("A2 = Im(L^2)", sa.fitting.a2 == image(l.power(2)));
  // det of L restricted to A2.
  const Subspace& a2 = sa.fitting.a2;
  if (!a2.is_zero()) {
    Matrix restricted(a2.dim(), a2.dim());
    for (std::size_t j = 0; j < a2.dim(); ++j) {
      Vector coords = a2.coordinates(l.apply(a2.basis_vector(j)));
      for (std::size_t i = 0; i < a2.dim(); ++i) restricted(i, j) = coords[i];
    }
    Scalar det = restricted.determinant();
    f.evidence["det_L_on_A2"] = to_string(det);
    k.exact("L invertible on A2", sgn(det) != 0);
  }
  k.exact("all eigenvalues have zero real part", spectrum_is_pure_imaginary(sa.char_poly));
  if (!sa.sigma) {
    if (!a2.is_zero()) k.skipped("rotation blocks", sa.sigma_status);
  } else {
    const SamplingParams p = c.inner();
    Subspace ker_ln = kernel(sa.jc.nilpotent);
    for (std::size_t j = 0; j < sa.root_spaces.size(); ++j) {
      Subspace eig = sa.root_spaces[j].space.intersect(ker_ln);
      for (const auto& u : eig.basis()) {
        Vector v = scale(-1, sa.sigma->apply(u));
        const Scalar& beta = sa.betas[j];
        bool block = l.apply(u) == scale(-beta, v) && l.apply(v) == scale(beta, u);
        k.exact("L(U) = -bV, L(V) = bU for U=" + c.a.format(u), block);
        k.sampled("g(U,V)=0 for U=" + c.a.format(u), orthogonal_on_M(c.s, u, v, p));
        k.sampled("g(U,U)=g(V,V) for U=" + c.a.format(u), form_vanishes_on_M(c.s, {{1, u, u}, {-1, v, v}}, p));
      }
    }
  }
  k.finish(f, c.field->certified());
}

Scalar det_formula(const Scalar& alpha, const Scalar& beta) {
  Scalar s = alpha * alpha + beta * beta;
  return -2 * alpha * s * s * s * s;
}

void thm_2_7_det(const Context& c, Finding& f) {
  Checks k(c.a);
  std::vector<std::pair<Scalar, Scalar>> pairs;
  if (c.params.alpha_beta) {
    pairs.push_back(*c.params.alpha_beta);
  } else {
    std::seed_seq seq{static_cast<std::uint32_t>(c.params.sampling.seed), 0x2e7u};
    std::mt19937_64 rng(seq);
    auto draw = [&](bool nonzero) {
      long num = static_cast<long>(rng() % 41) - 20;
      if (nonzero && num == 0) num = 1;
      Scalar q(num, static_cast<long>(rng() % 12) + 1);
      q.canonicalize();
      return q;
    };
    for (std::size_t i = 0; i < c.params.det_samples; ++i) {
      Scalar alpha = draw(false);
      Scalar beta = draw(true);
      pairs.emplace_back(alpha, beta);
    }
  }
  std::size_t agree = 0;
  for (const auto& [alpha, beta] : pairs) {
    Scalar det = skewness_system(alpha, beta).determinant();
    Scalar expected = det_formula(alpha, beta);
    if (det == expected) {
      ++agree;
    } else {
      k.exact("det for alpha=" + to_string(alpha) + ", beta=" + to_string(beta), false,
              "got " + to_string(det) + ", expected " + to_string(expected));
    }
  }
  if (pairs.size() == 1) {
    f.evidence["alpha"] = to_string(pairs[0].first);
    f.evidence["beta"] = to_string(pairs[0].second);
    f.evidence["det"] = to_string(skewness_system(pairs[0].first, pairs[0].second).determinant());
  }
  f.evidence["pairs"] = pairs.size();
  f.evidence["agree"] = agree;
  if (agree == pairs.size()) k.exact("det = -2a(a^2+b^2)^4 on all pairs", true);
  k.finish(f, true);
}

void prop_2_8(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const SpectralAnalysis& sa = c.sa();
  const Subspace& a1 = sa.fitting.a1;
  const Subspace& a2 = sa.fitting.a2;
  k.exact("[A1,A2] in A2", a2.contains(bracket_subspaces(c.a, a1, a2)));
  for (std::size_t i = 0; i < sa.root_spaces.size(); ++i)
    k.exact("[V0,V" + std::to_string(i + 1) + "] in V" + std::to_string(i + 1),
            sa.root_spaces[i].space.contains(bracket_subspaces(c.a, a1, sa.root_spaces[i].space)));
  if (!sa.sigma) {
    if (!a2.is_zero()) k.skipped("graded brackets", sa.sigma_status);
    k.finish(f, c.field->certified());
    return;
  }
  k.exact("sigma^2 = -Id on A2", true);
  // Root space for a given beta, with beta = 0 meaning A1.
  auto space_for = [&](const Scalar& beta) -> std::optional<Subspace> {
    if (sgn(beta) == 0) return a1;
    for (std::size_t j = 0; j < sa.betas.size(); ++j)
      if (sa.betas[j] == beta) return sa.root_spaces[j].space;
    return std::nullopt;
  };
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < sa.root_spaces.size(); ++i) {
    for (std::size_t j = 0; j < sa.root_spaces.size(); ++j) {
      for (const auto& y : sa.root_spaces[i].space.basis()) {
        for (const auto& z : sa.root_spaces[j].space.basis()) {
          ++pairs;
          try {
            GradedBracket gb = graded_bracket(c.a, sa, y, z);
            Scalar diff = abs(sa.betas[i] - sa.betas[j]);
            auto vk = space_for(diff);
            auto vl = space_for(sa.betas[i] + sa.betas[j]);
            bool ok_plus = vk ? vk->contains(gb.plus) : is_zero(gb.plus);
            bool ok_minus = vl ? vl->contains(gb.minus) : is_zero(gb.minus);
            if (!ok_plus || !ok_minus)
              k.exact("graded bracket of " + c.a.format(y) + ", " + c.a.format(z), false,
                      "plus in V_k: " + std::string(ok_plus ? "yes" : "no") + ", minus in V_l: " + (ok_minus ? "yes" : "no"));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::InternalInconsistency) throw;
            k.exact("eigenvalue relations for " + c.a.format(y) + ", " + c.a.format(z), false, e.what());
          }
        }
      }
    }
  }
  f.evidence["graded_pairs"] = pairs;
  k.exact("graded-bracket eigenvalue relations on all basis pairs", !k.violated());
  k.finish(f, c.field->certified());
}

void prop_2_9(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  auto n = require_nilradical(c, f);
  if (!n) return;
  Checks k(c.a);
  const SpectralAnalysis& sa = c.sa();
  const Operator& l = sa.l;
  const Subspace& a1 = sa.fitting.a1;
  const Subspace& a2 = sa.fitting.a2;
  Subspace cn = center_of(c.a, *n);
  Subspace ker = kernel(l);
  k.exact("C(n(g)) in Ker(L)", ker.contains(cn));
  k.exact("Ker(L) in A1", a1.contains(ker));
  Subspace j = centralizer_of_subspace(c.a, cn);
  Subspace xg = image(l);
  k.exact("J is an ideal", is_ideal(c.a, j));
  k.exact("X in J", j.contains(c.x()));
  k.exact("A2 in [X,g]", xg.contains(a2));
  k.exact("[X,g] in J", j.contains(xg));
  Subspace jt = a2 + bracket_subspaces(c.a, a2, a2);
  k.exact("J~ is an ideal", is_ideal(c.a, jt));
  k.exact("J~ in J", j.contains(jt));
  Subspace jt_a1 = jt.intersect(a1);
  k.exact("Ls(J~ n A1) = 0", jt_a1.image_under(sa.jc.semisimple).is_zero());
  k.exact("L(J~ n A1) in J~", jt.contains(jt_a1.image_under(l)));
  f.evidence["dim_C(n)"] = cn.dim();
  f.evidence["dim_J"] = j.dim();
  f.evidence["dim_J~"] = jt.dim();
  // I is only tested elementwise.
  const SamplingParams p = c.inner();
  auto in_i = [&](const Vector& y, const std::string& label) {
    for (const auto& v : a2.basis())
      k.sampled(label + " orthogonal to " + c.a.format(v), orthogonal_on_M(c.s, y, v, p));
  };
  in_i(c.x(), "X");
  Subspace la1 = a1.image_under(l);
  for (const auto& y : la1.basis()) in_i(y, "L(A1) element " + c.a.format(y));
  for (const auto& y : bracket_subspaces(c.a, la1, a1).basis()) in_i(y, "[L(A1),A1] element " + c.a.format(y));
  for (const auto& y : cn.intersect(a1).basis()) {
    bool in_i_sampled = true;
    for (const auto& v : a2.basis())
      if (orthogonal_on_M(c.s, y, v, p).refuted()) in_i_sampled = false;
    if (!in_i_sampled) continue;
    for (const auto& w : jt.basis())
      k.sampled("I n C(n) element " + c.a.format(y) + " orthogonal to J~ element " + c.a.format(w),
                orthogonal_on_M(c.s, y, w, p));
  }
  k.finish(f, c.field->certified());
}

void prop_2_11(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  Checks k(c.a);
  const SamplingParams p = c.inner();
  const SpectralAnalysis& sa = c.sa();
  const Operator& l = sa.l;
  Subspace xg = image(l);
  for (std::size_t y = 0; y < c.dim(); ++y) {
    Vector xy = l.apply(unit_vector(c.dim(), y));
    if (is_zero(xy)) continue;
    for (std::size_t z = y; z < c.dim(); ++z) {
      Vector ez = unit_vector(c.dim(), z);
      Vector xz = l.apply(ez);
      if (is_zero(xz) || !xg.contains(bracket(c.a, xy, ez))) continue;
      k.sampled("g([X,Y],[X,Z])=0 for Y=" + c.a.names()[y] + ", Z=" + c.a.names()[z], orthogonal_on_M(c.s, xy, xz, p));
    }
  }
  const auto& rs = sa.root_spaces;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (i == j) continue;
      if (i < j)
        for (const auto& u : rs[i].space.basis())
          for (const auto& v : rs[j].space.basis())
            k.sampled("g(V" + std::to_string(i + 1) + ",V" + std::to_string(j + 1) + ")=0", orthogonal_on_M(c.s, u, v, p));
      if (!rs[i].beta_sq || !rs[j].beta_sq) {
        k.skipped("beta_j != 2 beta_i variants", "non-linear root-space factor");
        continue;
      }
      // beta_j = 2 beta_i iff beta_j^2 = 4 beta_i^2 for positive betas.
      if (*rs[j].beta_sq == 4 * *rs[i].beta_sq) continue;
      Subspace vij = bracket_subspaces(c.a, rs[i].space, rs[j].space);
      Subspace vii = bracket_subspaces(c.a, rs[i].space, rs[i].space);
      for (const auto& w : vij.basis())
        for (const auto& u : rs[i].space.basis())
          k.sampled("g([Vi,Vj],Vi)=0", orthogonal_on_M(c.s, w, u, p));
      for (const auto& w : vii.basis())
        for (const auto& u : rs[j].space.basis())
          k.sampled("g([Vi,Vi],Vj)=0", orthogonal_on_M(c.s, w, u, p));
    }
  }
  k.finish(f, c.field->certified());
}

void prop_2_12(const Context& c, Finding& f) {
  if (!require_premise(c, f)) return;
  const bool a1_full = c.sa().fitting.a1.is_full();
  f.evidence["A1_is_g"] = a1_full;
  if (!a1_full) {
    f.status = FindingStatus::PremiseNotMet;
    f.evidence["reason"] = "A1 != g";
    return;
  }
  auto n = require_nilradical(c, f);
  if (!n) return;
  Checks k(c.a);
  k.exact("X in n(g)", n->contains(c.x()));
  k.exact("X in r(g)", radical(c.a).contains(c.x()));
  k.finish(f, c.field->certified());
}

void prop_3_12(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  auto n = require_nilradical(c, f);
  if (!n) return;
  Subspace cn = center_of(c.a, *n);
  const bool in_cn = cn.contains(c.x());
  const bool a1_full = c.sa().fitting.a1.is_full();
  f.evidence["premise"] = verdict_json(c.field->premise, c.a);
  f.evidence["A1_is_g"] = a1_full;
  f.evidence["X_in_C(n)"] = in_cn;
  Checks k(c.a);
  if (c.field->premise_ok() && a1_full) k.exact("constant length and A1 = g imply X in C(n(g))", in_cn);
  if (in_cn) {
    k.exact("X in C(n(g)) implies A1 = g", a1_full);
    k.exact("X in C(n(g)) implies constant length", c.field->premise_ok());
  }
  if (!(c.field->premise_ok() && a1_full) && !in_cn) {
    f.status = FindingStatus::PremiseNotMet;
    return;
  }
  k.finish(f, c.field->certified());
}

void conj_1_2(const Context& c, Finding& f) {
  if (!is_semisimple(c.a)) {
    f.status = FindingStatus::PremiseNotMet;
    f.evidence["reason"] = "g is not semisimple";
    return;
  }
  if (!require_premise(c, f)) return;
  const bool compact = is_compact_vector(c.a, c.x());
  f.evidence["compact_vector"] = compact;
  f.status = compact ? (c.field->certified() ? FindingStatus::Holds : FindingStatus::HoldsSampled)
                     : FindingStatus::Counterexample;
}

void conj_3_6(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  if (!require_premise(c, f)) return;
  auto n = require_nilradical(c, f);
  if (!n) return;
  const bool inside = c.sa().fitting.a1.contains(*n);
  f.evidence["n_in_A1"] = inside;
  f.status = inside ? (c.field->certified() ? FindingStatus::Holds : FindingStatus::HoldsSampled)
                    : FindingStatus::Counterexample;
}

// ---- space-level verifiers ----

void lemma_3_1(const Context& c, Finding& f) {
  Verdict v = check_go(c.s, c.params.sampling.samples, c.params.sampling.seed);
  f.evidence["go_check"] = verdict_json(v, c.a);
  auto go = c.s.declared_go();
  if (!go) {
    f.evidence["declared_go"] = nullptr;
    f.status = v.refuted() ? FindingStatus::Holds : FindingStatus::HoldsSampled;
    return;
  }
  f.evidence["declared_go"] = *go;
  if (*go) f.status = v.refuted() ? FindingStatus::Violated : FindingStatus::HoldsSampled;
  else f.status = v.refuted() ? FindingStatus::Holds : FindingStatus::Inconclusive;
}

void thm_3_4(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  const auto& ideals = c.a.declared().abelian_ideals;
  if (ideals.empty()) {
    f.status = FindingStatus::Skipped;
    f.evidence["missing"] = "abelian_ideals";
    return;
  }
  Checks k(c.a);
  SamplingParams p = c.params.sampling;
  p.use_certificates = false;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    auto basis = ideals[i].basis();
    k.exact("ideal " + std::to_string(i) + " is abelian", is_abelian(c.a, ideals[i]) && is_ideal(c.a, ideals[i]));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      k.sampled("constant length of " + c.a.format(basis[a]), check_constant_length(c.s, basis[a], p));
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        Vector sum = add(basis[a], basis[b]);
        k.sampled("constant length of " + c.a.format(sum), check_constant_length(c.s, sum, p));
      }
    }
  }
  k.finish(f, false);
}

void cor_3_5(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  if (is_semisimple(c.a)) {
    f.status = FindingStatus::PremiseNotMet;
    f.evidence["reason"] = "g is semisimple";
    return;
  }
  std::vector<Vector> candidates;
  if (auto n = try_nilradical(c.a)) candidates = center_of(c.a, *n).basis();
  for (const auto& ideal : c.a.declared().abelian_ideals)
    for (auto& v : ideal.basis()) candidates.push_back(std::move(v));
  for (auto& v : center(c.a).basis()) candidates.push_back(std::move(v));
  for (const auto& x : candidates) {
    Verdict v = check_constant_length(c.s, x, c.params.sampling);
    if (v.certified()) {
      f.evidence["field"] = c.a.format(x);
      f.evidence["certificate"] = to_string(*v.certificate);
      f.status = FindingStatus::Holds;
      return;
    }
  }
  f.evidence["candidates"] = candidates.size();
  f.status = candidates.empty() ? FindingStatus::Skipped : FindingStatus::Violated;
}

void prop_3_7(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  if (!c.a.declared().levi) {
    f.status = FindingStatus::Skipped;
    f.evidence["missing"] = "levi";
    return;
  }
  LeviReport rep = verify_levi(c.a, c.a.declared());
  Subspace r = radical(c.a);
  f.evidence["dim_s_c"] = rep.compact_part.dim();
  f.evidence["dim_s_nc"] = rep.noncompact_part.dim();
  f.evidence["dim_r"] = r.dim();
  Checks k(c.a);
  k.exact("[s_nc, r(g)] = 0", bracket_subspaces(c.a, rep.noncompact_part, r).is_zero());
  k.finish(f, true);
}

void prop_3_8(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  auto n = require_nilradical(c, f);
  if (!n) return;
  auto cls = nilpotency_class(c.a, *n);
  f.evidence["dim_n"] = n->dim();
  f.evidence["nilpotency_class"] = cls ? ojson(*cls) : ojson(nullptr);
  Checks k(c.a);
  k.exact("n(g) abelian or two-step nilpotent", cls && *cls <= 2);
  k.finish(f, true);
}

void thm_3_9(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  auto n = require_nilradical(c, f);
  if (!n) return;
  Subspace cn = center_of(c.a, *n);
  Checks k(c.a);
  ojson fields = ojson::array();
  for (const auto& x : cn.basis()) {
    Verdict v = check_constant_length(c.s, x, c.params.sampling);
    ojson e;
    e["field"] = c.a.format(x);
    e["verdict"] = verdict_json(v, c.a);
    fields.push_back(e);
    k.exact("X in C(n(g)) is certified: " + c.a.format(x), v.certified());
  }
  // Elements of n outside C(n): the complement basis and the basis vectors of n.
  std::vector<Vector> outside = cn.complement_in(*n);
  for (auto& v : n->basis())
    if (!cn.contains(v) && std::find(outside.begin(), outside.end(), v) == outside.end()) outside.push_back(std::move(v));
  bool inconclusive = false;
  for (const auto& x : outside) {
    Verdict v = check_constant_length(c.s, x, c.params.sampling);
    ojson e;
    e["field"] = c.a.format(x);
    e["verdict"] = verdict_json(v, c.a);
    fields.push_back(e);
    if (v.certified()) k.exact("X in n \\ C(n) must not have constant length: " + c.a.format(x), false);
    else if (!v.refuted()) inconclusive = true;
    else if (!v.witness->exact) e["flag"] = "refutation is not exact";
  }
  f.evidence["fields"] = fields;
  k.finish(f, true);
  if (f.status == FindingStatus::Holds && inconclusive) f.status = FindingStatus::Inconclusive;
}

void cor_3_10(const Context& c, Finding& f) {
  if (!require_go(c, f)) return;
  auto n = require_nilradical(c, f);
  if (!n) return;
  Subspace cn = center_of(c.a, *n);
  Checks k(c.a);
  const auto& ideals = c.a.declared().abelian_ideals;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    k.exact("abelian ideal " + std::to_string(i) + " in C(n(g))", cn.contains(ideals[i]));
  k.exact("C(n(g)) is an abelian ideal", is_ideal(c.a, cn) && is_abelian(c.a, cn));
  // Maximality: no basis vector outside C(n) extends it to an abelian ideal.
  for (const auto& v : cn.complement_in(Subspace::full(c.dim()))) {
    Subspace ext = cn + Subspace::span(c.dim(), {v});
    if (is_ideal(c.a, ext) && is_abelian(c.a, ext))
      k.exact("C(n(g)) maximal among abelian ideals", false, "extends by " + c.a.format(v));
  }
  f.evidence["dim_C(n)"] = cn.dim();
  k.finish(f, true);
}

void fact_gr_in_n(const Context& c, Finding& f) {
  auto n = require_nilradical(c, f);
  if (!n) return;
  Subspace r = radical(c.a);
  Checks k(c.a);
  k.exact("[g, r(g)] in n(g)", n->contains(bracket_subspaces(c.a, Subspace::full(c.dim()), r)));
  f.evidence["dim_r"] = r.dim();
  f.evidence["dim_n"] = n->dim();
  k.finish(f, true);
}

using Verifier = void (*)(const Context&, Finding&);

const std::map<std::string, Verifier>& verifiers() {
  static const std::map<std::string, Verifier> table{
      {"thm-1.1", thm_1_1},       {"lemma-2.2", lemma_2_2},     {"prop-2.3", prop_2_3},
      {"thm-2.4", thm_2_4},       {"prop-2.5", prop_2_5},       {"prop-2.6", prop_2_6},
      {"prop-2.6-1", prop_2_6_1}, {"thm-2.7", thm_2_7},         {"thm-2.7-det", thm_2_7_det},
      {"prop-2.8", prop_2_8},     {"prop-2.9", prop_2_9},       {"prop-2.11", prop_2_11},
      {"prop-2.12", prop_2_12},   {"lemma-3.1", lemma_3_1},     {"thm-3.4", thm_3_4},
      {"cor-3.5", cor_3_5},       {"prop-3.7", prop_3_7},       {"prop-3.8", prop_3_8},
      {"thm-3.9", thm_3_9},       {"cor-3.10", cor_3_10},       {"prop-3.12", prop_3_12},
      {"fact-gr-in-n", fact_gr_in_n}, {"conj-1.2", conj_1_2},   {"conj-3.6", conj_3_6},
  };
  return table;
}

Finding run(const StatementInfo& info, const ReductiveSpace& s, const FieldData* field, const VerifyParams& params,
            const std::string& space_name) {
  Finding f;
  f.statement_id = info.id;
  f.space = space_name;
  if (field) f.field = s.algebra().format(field->x);
  Context c{s, s.algebra(), params, field};
  verifiers().at(info.id)(c, f);
  return f;
}

}  // namespace

Finding verify(const std::string& id, const ReductiveSpace& s, const std::optional<Vector>& x, const VerifyParams& params,
               const std::string& space_name) {
  const StatementInfo& info = statement(id);
  if (!info.per_field) return run(info, s, nullptr, params, space_name);
  if (!x) throw Error(ErrorKind::UsageError, "statement " + id + " needs a field");
  if (x->size() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "field has the wrong dimension");
  FieldData fd = field_data(s, *x, params);
  return run(info, s, &fd, params, space_name);
}

std::vector<Vector> candidate_fields(const ReductiveSpace& s) {
  const LieAlgebra& a = s.algebra();
  std::vector<Vector> out;
  auto push = [&](Vector v) {
    if (is_zero(v) || std::find(out.begin(), out.end(), v) != out.end()) return;
    out.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < a.dim(); ++i) push(unit_vector(a.dim(), i));
  for (const auto& ideal : a.declared().abelian_ideals)
    for (auto& v : ideal.basis()) push(std::move(v));
  if (auto n = try_nilradical(a))
    for (auto& v : center_of(a, *n).basis()) push(std::move(v));
  return out;
}

namespace {

std::vector<Finding> run_many(const ReductiveSpace& s, const std::vector<const StatementInfo*>& infos,
                              const VerifyParams& params, const std::string& space_name) {
  std::vector<Finding> out;
  bool need_fields = false;
  for (const auto* info : infos) need_fields = need_fields || info->per_field;
  std::vector<FieldData> fields;
  if (need_fields)
    for (const auto& x : candidate_fields(s)) fields.push_back(field_data(s, x, params));
  for (const auto* info : infos) {
    if (!info->per_field) {
      out.push_back(run(*info, s, nullptr, params, space_name));
      continue;
    }
    for (const auto& fd : fields) out.push_back(run(*info, s, &fd, params, space_name));
  }
  return out;
}

}  // namespace

std::vector<Finding> verify_suite(const ReductiveSpace& s, const std::vector<std::string>& ids, const VerifyParams& params,
                                  const std::string& space_name) {
  std::vector<const StatementInfo*> infos;
  if (ids.empty()) {
    for (const auto& e : registry())
      if (!e.probe) infos.push_back(&e);
  } else {
    for (const auto& id : ids) statement(id);
    for (const auto& e : registry())
      if (std::find(ids.begin(), ids.end(), e.id) != ids.end()) infos.push_back(&e);
  }
  return run_many(s, infos, params, space_name);
}

std::vector<Finding> probe_conjectures(const ReductiveSpace& s, const VerifyParams& params, const std::string& space_name) {
  std::vector<const StatementInfo*> infos;
  for (const auto& e : registry())
    if (e.probe) infos.push_back(&e);
  return run_many(s, infos, params, space_name);
}

}  // namespace liekv
