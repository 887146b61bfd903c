#include <gtest/gtest.h>

#include <cmath>

#include "liekv/error.hpp"
#include "liekv/homspace.hpp"
#include "support.hpp"

using namespace liekv;
using namespace liekv::test;

namespace {

GroupWord word(std::initializer_list<std::pair<Vector, const char*>> letters) {
  GroupWord w;
  for (const auto& [d, t] : letters) w.letters.push_back({d, parse_scalar(t)});
  return w;
}

ReductiveSpace e2_space() { return to_space(build_e2_plane()); }
ReductiveSpace heis_space() { return to_space(build_heis_go(1)); }
ReductiveSpace so3_space() { return to_space(build_so3()); }
ReductiveSpace sl2_space() { return to_space(build_sl2_hyperbolic()); }

ErrorKind create_error(LieAlgebra a, Subspace h, Subspace m, Matrix g) {
  try {
    ReductiveSpace::create(std::move(a), std::move(h), std::move(m), std::move(g));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "space accepted";
  return ErrorKind::InternalInconsistency;
}

Matrix diag(std::initializer_list<const char*> d) {
  Matrix m(d.size(), d.size());
  std::size_t i = 0;
  for (const char* v : d) {
    m(i, i) = parse_scalar(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST(ReductiveSpace, CorpusSpacesAreValid) {
  EXPECT_NO_THROW(e2_space());
  EXPECT_NO_THROW(so3_space());
  EXPECT_NO_THROW(heis_space());
}

TEST(ReductiveSpace, RejectsNonInvariantMetric) {
  EXPECT_EQ(create_error(e2(), Subspace::coordinate(3, {0}), Subspace::coordinate(3, {1, 2}), diag({"1", "2"})),
            ErrorKind::MetricNotInvariant);
}

TEST(ReductiveSpace, RejectsNonReductiveSplitting) {
  Subspace m = Subspace::span(3, {e(3, 1), vec({"1", "0", "1"})});
  EXPECT_EQ(create_error(so3(), Subspace::coordinate(3, {0}), m, diag({"1", "1"})), ErrorKind::NotReductive);
}

TEST(ReductiveSpace, RejectsIndefiniteMetric) {
  EXPECT_EQ(create_error(so3(), Subspace(3), Subspace::full(3), diag({"1", "1", "-1"})),
            ErrorKind::MetricNotPositiveDefinite);
}

TEST(ReductiveSpace, RejectsIneffectiveIsotropy) {
  EXPECT_EQ(create_error(heis3(), Subspace::coordinate(3, {2}), Subspace::coordinate(3, {0, 1}), diag({"1", "1"})),
            ErrorKind::IneffectiveAction);
}

TEST(ReductiveSpace, RejectsDimensionMismatch) {
  EXPECT_EQ(create_error(e2(), Subspace::coordinate(3, {0}), Subspace::coordinate(3, {1, 2}), diag({"1"})),
            ErrorKind::DimensionMismatch);
}

TEST(Translate, Examples) {
  const ReductiveSpace s = e2_space();
  EXPECT_EQ(*translate(s, GroupWord{}, e(3, 0)).exact, e(3, 0));
  EXPECT_EQ(*translate(s, word({{e(3, 1), "1"}}), e(3, 0)).exact, vec({"1", "0", "1"}));
  EXPECT_EQ(*translate(heis_space(), word({{e(4, 1), "1"}}), e(4, 0)).exact, vec({"1", "0", "1", "0"}));
}

TEST(Translate, FloatPathAgreesWithExactPath) {
  const ReductiveSpace s = heis_space();
  GroupWord w = word({{e(4, 0), "1/2"}, {e(4, 1), "-3"}});
  Translation exact = translate(s, w, e(4, 3));
  GroupWord wf;
  wf.letters.push_back({e(4, 0), 0.5});
  wf.letters.push_back({e(4, 1), -3.0});
  Translation num = translate(s, wf, e(4, 3));
  ASSERT_TRUE(exact.exact);
  EXPECT_FALSE(num.exact);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(num.numeric[i], (*exact.exact)[i].get_d(), 1e-12);
}

TEST(MetricAt, Examples) {
  const ReductiveSpace s = e2_space();
  EXPECT_EQ(*metric_at(s, GroupWord{}, e(3, 1), e(3, 1)).exact, Scalar(1));
  EXPECT_EQ(*metric_at(s, word({{e(3, 1), "1"}}), e(3, 0), e(3, 0)).exact, Scalar(1));
  EXPECT_EQ(*metric_at(heis_space(), word({{e(4, 1), "1"}}), e(4, 0), e(4, 0)).exact, Scalar(2));
  // F(e3) along (e1,1) (D,1/2) (e2,-3): e3 is fixed by every letter. ad D
  // is not nilpotent, so the value comes from the floating path.
  Number f = metric_at(heis_space(), word({{e(4, 0), "1"}, {e(4, 3), "1/2"}, {e(4, 1), "-3"}}), e(4, 2), e(4, 2));
  EXPECT_FALSE(f.exact);
  EXPECT_NEAR(f.approx, 1.0, 1e-12);
}

TEST(TaylorCondition, Examples) {
  const ReductiveSpace s = e2_space();
  for (std::size_t z = 0; z < 3; ++z)
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(taylor_condition(s, e(3, 1), e(3, z), k), Scalar(0));
  EXPECT_EQ(taylor_condition(s, e(3, 0), e(3, 1), 2), Scalar(2));
  const ReductiveSpace h = heis_space();
  EXPECT_EQ(taylor_condition(h, e(4, 0), e(4, 1), 1), Scalar(0));
  EXPECT_EQ(taylor_condition(h, e(4, 0), e(4, 1), 2), Scalar(2));
  EXPECT_EQ(taylor_condition(h, e(4, 0), e(4, 1), 3), Scalar(0));
  EXPECT_EQ(taylor_condition(h, e(4, 2), e(4, 0), 2), Scalar(0));
  try {
    taylor_condition(s, e(3, 1), e(3, 0), 0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::UsageError);
  }
}

TEST(Certificates, Examples) {
  EXPECT_EQ(certificate_constant_length(e2_space(), e(3, 1)), Certificate::AbelianIdeal);
  EXPECT_EQ(certificate_constant_length(heis_space(), e(4, 2)), Certificate::CenterNilradical);
  EXPECT_FALSE(certificate_constant_length(so3_space(), e(3, 0)));
}

TEST(Certificates, CentralFieldNeedsNoGo) {
  // heis3 x R with h = 0: e3 and the R factor are central
  const LieAlgebra a = make_algebra({"e1", "e2", "e3"}, {{0, 1, 2, "1"}});
  const ReductiveSpace s = ReductiveSpace::create(a, Subspace(3), Subspace::full(3), Matrix::identity(3));
  EXPECT_EQ(certificate_constant_length(s, e(3, 2)), Certificate::Central);
}

TEST(Certificates, GoUnknownIsReportedForIdealCertificates) {
  SpaceDocument d = build_e2_plane();
  d.declared.go.reset();
  const ReductiveSpace s = to_space(d);
  try {
    certificate_constant_length(s, e(3, 1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::GoStatusUnknown);
  }
  // The verdict falls back to sampling and notes why.
  Verdict v = check_constant_length(s, e(3, 1));
  EXPECT_FALSE(v.certified());
  EXPECT_FALSE(v.refuted());
  EXPECT_FALSE(v.note.empty());
}

TEST(CheckConstantLength, RotationFieldOfPlaneIsRefuted) {
  Verdict v = check_constant_length(e2_space(), e(3, 0));
  ASSERT_TRUE(v.refuted());
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(v.witness->exact);
  EXPECT_EQ(v.witness->word.to_string(to_algebra(build_e2_plane())), "(x,1)");
  EXPECT_EQ(*v.witness->lhs.exact, Scalar(1));
  EXPECT_EQ(*v.witness->rhs.exact, Scalar(0));
}

TEST(CheckConstantLength, HeisenbergNonCentralIsRefuted) {
  const ReductiveSpace s = heis_space();
  Verdict v = check_constant_length(s, e(4, 0));
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness->word.to_string(s.algebra()), "(e2,1)");
  EXPECT_EQ(*v.witness->lhs.exact, Scalar(2));
  EXPECT_EQ(*v.witness->rhs.exact, Scalar(1));
  Verdict w = check_constant_length(s, e(4, 1));
  ASSERT_TRUE(w.refuted());
  EXPECT_EQ(w.witness->word.to_string(s.algebra()), "(e1,1)");
  EXPECT_EQ(*w.witness->lhs.exact, Scalar(2));
}

TEST(CheckConstantLength, BiInvariantSo3PassesSamples) {
  Verdict v = check_constant_length(so3_space(), e(3, 0));
  EXPECT_EQ(v.status, Verdict::Status::UndecidedPassedSamples);
  EXPECT_EQ(v.samples, 200u);
}

TEST(CheckConstantLength, HyperbolicPlaneBasisRefuted) {
  const ReductiveSpace s = sl2_space();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(check_constant_length(s, e(3, i)).refuted()) << i;
}

TEST(CheckConstantLength, ExactWitnessesReplay) {
  for (const auto& doc : builtin_corpus()) {
    const ReductiveSpace s = to_space(doc);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Vector x = e(s.dim(), i);
      Verdict v = check_constant_length(s, x);
      if (!v.refuted() || !v.witness->exact) continue;
      Number replay = metric_at(s, v.witness->word, x, x);
      ASSERT_TRUE(replay.exact);
      EXPECT_EQ(*replay.exact, *v.witness->lhs.exact) << doc.name << " " << i;
      EXPECT_EQ(s.inner(x, x), *v.witness->rhs.exact);
      EXPECT_NE(*replay.exact, s.inner(x, x));
    }
  }
}

TEST(CheckGo, CorpusSpacesAreConsistent) {
  EXPECT_FALSE(check_go(e2_space(), 50, 0).refuted());
  EXPECT_FALSE(check_go(so3_space(), 50, 0).refuted());
  EXPECT_FALSE(check_go(heis_space(), 50, 0).refuted());
  EXPECT_FALSE(check_go(sl2_space(), 50, 0).refuted());
  auto z = go_solution(e2_space(), vec({"0", "1", "1"}));
  ASSERT_TRUE(z);
  EXPECT_TRUE(is_zero(*z));
}

TEST(CheckGo, LeftInvariantHeisenbergIsNotGo) {
  const ReductiveSpace s = ReductiveSpace::create(heis3(), Subspace(3), Subspace::full(3), Matrix::identity(3));
  Verdict v = check_go(s, 10, 0);
  ASSERT_TRUE(v.refuted());
  ASSERT_TRUE(v.witness && v.witness->point);
  EXPECT_FALSE(go_solution(s, *v.witness->point));
}

TEST(OrthogonalOnM, Examples) {
  const ReductiveSpace s = e2_space();
  SamplingParams p;
  p.samples = 40;
  EXPECT_FALSE(orthogonal_on_M(s, e(3, 1), e(3, 2), p).refuted());
  Verdict same = orthogonal_on_M(s, e(3, 1), e(3, 1), p);
  ASSERT_TRUE(same.refuted());
  EXPECT_TRUE(same.witness->word.letters.empty());
  EXPECT_EQ(*same.witness->lhs.exact, Scalar(1));
  EXPECT_TRUE(orthogonal_on_M(heis_space(), e(4, 2), e(4, 0), p).refuted());
}

TEST(FormVanishesOnM, SkewnessOfRotation) {
  // g([r,x],y) + g(x,[r,y]) = 0 everywhere on the plane
  const ReductiveSpace s = e2_space();
  const LieAlgebra& a = s.algebra();
  std::vector<FormTerm> terms{{1, bracket(a, e(3, 0), e(3, 1)), e(3, 2)}, {1, e(3, 1), bracket(a, e(3, 0), e(3, 2))}};
  SamplingParams p;
  p.samples = 40;
  EXPECT_FALSE(form_vanishes_on_M(s, terms, p).refuted());
}

TEST(WordSampler, Deterministic) {
  const ReductiveSpace s = heis_space();
  SamplingParams p;
  WordSampler a(s, 5, p), b(s, 5, p), c(s, 6, p);
  ASSERT_TRUE(a.has_nilpotent_directions());
  bool differs = false;
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(a.exact_word(i).to_string(s.algebra()), b.exact_word(i).to_string(s.algebra()));
    EXPECT_EQ(a.float_word(i).to_string(s.algebra()), b.float_word(i).to_string(s.algebra()));
    differs = differs || a.exact_word(i).to_string(s.algebra()) != c.exact_word(i).to_string(s.algebra());
    EXPECT_TRUE(a.exact_word(i).has_exact_parameters());
    EXPECT_LE(a.exact_word(i).letters.size(), p.max_word_length);
  }
  EXPECT_TRUE(differs);
}
