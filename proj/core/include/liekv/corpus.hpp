#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekv/homspace.hpp"

namespace liekv {

/// A subspace as written in a document: coordinate axes or explicit rows.
struct SubspaceSpec {
  bool by_index = true;
  std::vector<std::size_t> indices;
  std::vector<Vector> rows;

  static SubspaceSpec axes(std::vector<std::size_t> indices);
  static SubspaceSpec spanned_by(std::vector<Vector> rows);
  /// Axes when `s` is a coordinate subspace, otherwise its canonical rows.
  static SubspaceSpec from(const Subspace& s);

  Subspace to_subspace(std::size_t dim) const;
  /// Basis in document order (the metric refers to this basis for m).
  std::vector<Vector> vectors(std::size_t dim) const;
};

struct DeclaredSpec {
  std::optional<SubspaceSpec> radical;
  std::optional<SubspaceSpec> nilradical;
  std::optional<SubspaceSpec> levi;
  std::optional<SubspaceSpec> center;
  std::vector<SubspaceSpec> direct_sum;
  std::vector<SubspaceSpec> abelian_ideals;
  std::optional<bool> go;
};

/// Interchange form of a reductive space. The metric is written in the
/// basis of m listed by `m`.
struct SpaceDocument {
  std::string name;
  std::vector<std::string> basis;
  StructureTable brackets;
  SubspaceSpec h;
  SubspaceSpec m;
  Matrix metric;
  DeclaredSpec declared;
  std::string provenance;

  std::size_t dimension() const noexcept { return basis.size(); }
};

LieAlgebra to_algebra(const SpaceDocument& doc);
/// Builds and validates the algebra and the space.
ReductiveSpace to_space(const SpaceDocument& doc);

SpaceDocument parse_document(std::string_view text);
/// Canonical text: fixed field order, rationals as strings.
std::string serialize(const SpaceDocument& doc);

/// Reads, parses and fully validates a document.
std::pair<SpaceDocument, ReductiveSpace> load(const std::filesystem::path& path);
void save(const SpaceDocument& doc, const std::filesystem::path& path);

SpaceDocument build_so3();
SpaceDocument build_sl2_hyperbolic();
SpaceDocument build_e2_plane();
/// Heisenberg algebra of dimension 2n+1 extended by the rotation D of all
/// (x_i, y_i) planes; H = exp(RD), m = the Heisenberg algebra, metric Id.
SpaceDocument build_heis_go(unsigned n);
/// Product space; basis names of `b` get a trailing "'".
SpaceDocument build_direct_sum(const SpaceDocument& a, const SpaceDocument& b);

/// The curated corpus, in a fixed order.
std::vector<SpaceDocument> builtin_corpus();

}  // namespace liekv
