#include <gtest/gtest.h>

#include <functional>

#include "liekv/corpus.hpp"
#include "liekv/error.hpp"
#include "liekv/theorems.hpp"
#include "support.hpp"

using namespace liekv;
using namespace liekv::test;

namespace {

// Every statement the tool must cover, in report order.
const std::vector<std::string> kManifest{
    "thm-1.1",   "lemma-2.2", "prop-2.3",  "thm-2.4",  "prop-2.5",  "prop-2.6",     "prop-2.6-1", "thm-2.7",
    "thm-2.7-det", "prop-2.8", "prop-2.9", "prop-2.11", "prop-2.12", "lemma-3.1",   "thm-3.4",    "cor-3.5",
    "prop-3.7",  "prop-3.8",  "thm-3.9",   "cor-3.10", "prop-3.12", "fact-gr-in-n", "conj-1.2",   "conj-3.6"};

VerifyParams quick() {
  VerifyParams p;
  p.sampling.samples = 60;
  p.inner_samples = 12;
  p.det_samples = 20;
  return p;
}

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "nothing thrown";
  return ErrorKind::InternalInconsistency;
}

// Left-invariant Heisenberg metric wrongly declared GO.
SpaceDocument false_go_document() {
  SpaceDocument d;
  d.name = "heis_left_invariant";
  d.basis = {"e1", "e2", "e3"};
  d.brackets = empty_table(3);
  set_bracket(d.brackets, 0, 1, e(3, 2));
  d.h = SubspaceSpec::axes({});
  d.m = SubspaceSpec::axes({0, 1, 2});
  d.metric = Matrix::identity(3);
  d.declared.go = true;
  return d;
}

}  // namespace

TEST(Registry, MatchesManifest) {
  std::vector<std::string> ids;
  for (const auto& s : registry()) ids.push_back(s.id);
  EXPECT_EQ(ids, kManifest);
}

TEST(Registry, EveryStatementRuns) {
  const ReductiveSpace s = to_space(build_e2_plane());
  for (const auto& info : registry()) {
    Finding f = verify(info.id, s, e(3, 1), quick(), "e2_plane");
    EXPECT_EQ(f.statement_id, info.id);
    EXPECT_NE(f.status, FindingStatus::Violated) << info.id;
    if (f.status == FindingStatus::Skipped) EXPECT_TRUE(f.evidence.contains("missing")) << info.id;
  }
}

TEST(Registry, UnknownAndMissingField) {
  const ReductiveSpace s = to_space(build_so3());
  EXPECT_EQ(error_of([&] { verify("thm-9.9", s, e(3, 0), quick()); }), ErrorKind::UnknownStatement);
  EXPECT_EQ(error_of([&] { verify("thm-1.1", s, std::nullopt, quick()); }), ErrorKind::UsageError);
}

TEST(SkewnessSystem, LiteralMatrixAtOneTwo) {
  // rows from expanding g(L^2 W, L W') + g(L W, L^2 W') on (U,U), (V,V), (U,V)
  Matrix expected(3, 3);
  const int lit[3][3] = {{-3, 2, 8}, {8, -2, -3}, {-2, -22, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) expected(i, j) = lit[i][j];
  EXPECT_EQ(skewness_system(1, 2), expected);
  EXPECT_EQ(skewness_system(1, 2).determinant(), Scalar(-1250));
}

TEST(SkewnessSystem, VerifierWithGivenPair) {
  VerifyParams p = quick();
  p.alpha_beta = std::make_pair(Scalar(1), Scalar(2));
  Finding f = verify("thm-2.7-det", to_space(build_so3()), std::nullopt, p);
  EXPECT_EQ(f.status, FindingStatus::Holds);
  EXPECT_EQ(f.evidence["det"], "-1250");
}

TEST(SkewnessSystem, SingularExactlyWhenAlphaVanishes) {
  EXPECT_EQ(skewness_system(0, Scalar(3, 7)).determinant(), Scalar(0));
  EXPECT_NE(skewness_system(Scalar(-1, 5), 1).determinant(), Scalar(0));
}

TEST(Statements, CenterOfNilradicalCharacterization) {
  Finding f = verify("thm-3.9", to_space(build_heis_go(1)), std::nullopt, quick(), "heis_go_1");
  EXPECT_EQ(f.status, FindingStatus::Holds);
  const auto& fields = f.evidence["fields"];
  ASSERT_EQ(fields.size(), 3u);
  EXPECT_EQ(fields[0]["field"], "e3");
  EXPECT_EQ(fields[0]["verdict"]["certificate"], "CenterNilradical");
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_EQ(fields[i]["verdict"]["status"], "RefutedAt");
    EXPECT_EQ(fields[i]["verdict"]["witness"]["exact"], true);
  }
}

TEST(Statements, RealEigenvalueOnHyperbolicPlane) {
  Finding f = verify("prop-2.6-1", to_space(build_sl2_hyperbolic()), e(3, 0), quick());
  EXPECT_EQ(f.status, FindingStatus::PremiseNotMet);
  EXPECT_EQ(f.evidence["has_nonzero_real_eigenvalue"], true);
  EXPECT_EQ(f.evidence["premise"]["status"], "RefutedAt");
  auto roots = f.evidence["nonzero_rational_real_roots"];
  EXPECT_NE(std::find(roots.begin(), roots.end(), "2"), roots.end());
}

TEST(Statements, PureImaginarySpectrum) {
  EXPECT_EQ(verify("thm-1.1", to_space(build_e2_plane()), e(3, 1), quick()).status, FindingStatus::Holds);
  EXPECT_EQ(verify("thm-1.1", to_space(build_so3()), e(3, 0), quick()).status, FindingStatus::HoldsSampled);
  EXPECT_EQ(verify("thm-1.1", to_space(build_e2_plane()), e(3, 0), quick()).status, FindingStatus::PremiseNotMet);
}

TEST(Statements, NilradicalMembership) {
  Finding f = verify("prop-2.12", to_space(build_e2_plane()), e(3, 1), quick());
  EXPECT_EQ(f.status, FindingStatus::Holds);
  EXPECT_EQ(f.evidence["A1_is_g"], true);
}

TEST(Statements, MissingDeclarationsAreExplicit) {
  Finding f = verify("thm-2.4", to_space(build_so3()), e(3, 0), quick());
  EXPECT_EQ(f.status, FindingStatus::Skipped);
  EXPECT_EQ(f.evidence["missing"], "direct_sum");
  SpaceDocument d = build_e2_plane();
  d.declared.go.reset();
  Finding g = verify("prop-3.8", to_space(d), std::nullopt, quick());
  EXPECT_EQ(g.status, FindingStatus::Skipped);
  EXPECT_EQ(g.evidence["missing"], "go");
}

TEST(Statements, DirectSumIdealsOrthogonal) {
  const ReductiveSpace s = to_space(build_direct_sum(build_so3(), build_so3()));
  Finding f = verify("thm-2.4", s, vec({"1", "0", "0", "2", "0", "0"}), quick());
  EXPECT_EQ(f.status, FindingStatus::HoldsSampled);
}

TEST(Statements, GradingOnSo3Pair) {
  const ReductiveSpace s = to_space(build_direct_sum(build_so3(), build_so3()));
  Finding f = verify("prop-2.8", s, vec({"1", "0", "0", "2", "0", "0"}), quick());
  EXPECT_NE(f.status, FindingStatus::Violated);
  for (const auto& c : f.evidence["checks"]) EXPECT_EQ(c["result"], "ok") << c.dump();
}

TEST(Statements, FalseGoDeclarationIsCaught) {
  const ReductiveSpace s = to_space(false_go_document());
  Finding f = verify("lemma-3.1", s, std::nullopt, quick());
  EXPECT_EQ(f.status, FindingStatus::Violated);
  EXPECT_EQ(f.evidence["go_check"]["status"], "RefutedAt");
}

TEST(Probes, Examples) {
  Finding c = verify("conj-1.2", to_space(build_so3()), e(3, 0), quick());
  EXPECT_EQ(c.status, FindingStatus::HoldsSampled);
  EXPECT_EQ(c.evidence["compact_vector"], true);
  Finding h = verify("conj-3.6", to_space(build_heis_go(1)), e(4, 2), quick());
  EXPECT_EQ(h.status, FindingStatus::Holds);
  EXPECT_EQ(h.evidence["n_in_A1"], true);
  Finding p = verify("conj-3.6", to_space(build_e2_plane()), e(3, 1), quick());
  EXPECT_EQ(p.evidence["n_in_A1"], true);
}

TEST(Suite, CandidateFieldsHaveNoRepeats) {
  const ReductiveSpace s = to_space(build_e2_plane());
  auto fields = candidate_fields(s);
  EXPECT_EQ(fields.size(), 3u);
}

TEST(Suite, SelectedIdsRunInRegistryOrder) {
  const ReductiveSpace s = to_space(build_e2_plane());
  auto fs = verify_suite(s, {"prop-3.8", "thm-1.1"}, quick(), "e2_plane");
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(fs[0].statement_id, "thm-1.1");
  EXPECT_EQ(fs[3].statement_id, "prop-3.8");
  EXPECT_EQ(error_of([&] { verify_suite(s, {"nope"}, quick()); }), ErrorKind::UnknownStatement);
}

TEST(Suite, CorpusHasNoViolations) {
  for (const auto& d : builtin_corpus()) {
    const ReductiveSpace s = to_space(d);
    auto fs = verify_suite(s, {}, quick(), d.name);
    auto ps = probe_conjectures(s, quick(), d.name);
    fs.insert(fs.end(), ps.begin(), ps.end());
    for (const auto& f : fs) {
      EXPECT_NE(f.status, FindingStatus::Violated) << d.name << " " << f.statement_id << " " << f.evidence.dump();
      EXPECT_NE(f.status, FindingStatus::Counterexample) << d.name << " " << f.statement_id;
    }
  }
}

TEST(Suite, Deterministic) {
  const ReductiveSpace s = to_space(build_heis_go(1));
  auto a = verify_suite(s, {}, quick(), "h");
  auto b = verify_suite(s, {}, quick(), "h");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].evidence.dump(), b[i].evidence.dump());
  }
}
