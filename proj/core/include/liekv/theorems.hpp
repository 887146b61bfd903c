#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekv/homspace.hpp"
#include "liekv/spectral.hpp"

namespace liekv {

enum class FindingStatus {
  Holds,           // conclusion checked exactly under a certified premise
  HoldsSampled,    // no violation, but premise or conclusion only sampled
  Violated,        // conclusion refuted under an established premise
  PremiseNotMet,   // hypotheses do not hold for this input
  Skipped,         // required data missing
  Inconclusive,    // expected refutation not found by sampling
  Counterexample,  // conjecture probe found a counterexample
};

std::string to_string(FindingStatus s);

/// Verdict with its certificate or witness, names resolved against `a`.
nlohmann::ordered_json verdict_json(const Verdict& v, const LieAlgebra& a);

struct Finding {
  std::string statement_id;
  std::string space;
  /// Formatted field, empty for statements about the whole space.
  std::string field;
  FindingStatus status = FindingStatus::Skipped;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
};

struct VerifyParams {
  SamplingParams sampling;
  /// Samples per pairwise "on M" check inside a verifier.
  std::size_t inner_samples = 24;
  /// Random (alpha, beta) pairs for the determinant identity.
  std::size_t det_samples = 100;
  std::optional<std::pair<Scalar, Scalar>> alpha_beta;
};

struct StatementInfo {
  std::string id;
  std::string summary;
  bool per_field = false;
  bool probe = false;
};

/// All registered statements, in report order.
const std::vector<StatementInfo>& registry();
const StatementInfo& statement(const std::string& id);

/// Runs one verifier. Per-field statements need `x`. Throws
/// UnknownStatement or UsageError.
Finding verify(const std::string& id, const ReductiveSpace& s, const std::optional<Vector>& x, const VerifyParams& params,
               const std::string& space_name = "");

/// Fields the suite tries: basis vectors, declared abelian-ideal bases and
/// the center of the nilradical, without repetition.
std::vector<Vector> candidate_fields(const ReductiveSpace& s);

/// Runs the listed statements (all non-probe statements when empty), per-field ones over
/// candidate_fields, in registry order.
std::vector<Finding> verify_suite(const ReductiveSpace& s, const std::vector<std::string>& ids, const VerifyParams& params,
                                  const std::string& space_name = "");

/// Conjecture probes over the candidate fields.
std::vector<Finding> probe_conjectures(const ReductiveSpace& s, const VerifyParams& params,
                                       const std::string& space_name = "");

/// Coefficients of g(U,U), g(U,V), g(V,V) in the three skewness equations
/// for L U = alpha U - beta V, L V = beta U + alpha V, built by expanding
/// the bilinear form.
Matrix skewness_system(const Scalar& alpha, const Scalar& beta);

}  // namespace liekv
