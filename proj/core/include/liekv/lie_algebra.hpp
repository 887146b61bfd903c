#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liekv/matrix.hpp"
#include "liekv/subspace.hpp"

namespace liekv {

/// Structural data a document may ship with an algebra. Every entry is
/// verified against the structure constants when the algebra is built.
struct DeclaredStructure {
  std::optional<Subspace> radical;
  std::optional<Subspace> nilradical;
  std::optional<Subspace> levi;
  std::optional<Subspace> center;
  std::vector<Subspace> direct_sum;
  std::vector<Subspace> abelian_ideals;
};

/// table[i][j] = coordinates of [e_i, e_j].
using StructureTable = std::vector<std::vector<Vector>>;

/// Finite-dimensional real Lie algebra with rational structure constants.
/// Immutable once built; construction checks antisymmetry and the Jacobi
/// identity exactly.
class LieAlgebra {
 public:
  static LieAlgebra create(std::vector<std::string> names, StructureTable table, DeclaredStructure declared = {});

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Vector& structure(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  const DeclaredStructure& declared() const noexcept { return declared_; }
  /// ad(e_i).
  const Operator& ad_basis(std::size_t i) const { return ad_basis_.at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const;
  std::string format(const Vector& v) const;

 private:
  LieAlgebra() = default;
  std::vector<std::string> names_;
  StructureTable table_;
  DeclaredStructure declared_;
  std::vector<Operator> ad_basis_;
};

/// Empty table of the right shape for `dim`.
StructureTable empty_table(std::size_t dim);
/// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
void set_bracket(StructureTable& table, std::size_t i, std::size_t j, const Vector& v);

Vector bracket(const LieAlgebra& a, const Vector& x, const Vector& y);
Operator ad_matrix(const LieAlgebra& a, const Vector& x);
/// kappa(X, Y) = trace(ad X ad Y), as a Gram matrix in the algebra basis.
Matrix killing_form(const LieAlgebra& a);
Scalar killing(const LieAlgebra& a, const Vector& x, const Vector& y);

Subspace center(const LieAlgebra& a);
Subspace centralizer(const LieAlgebra& a, const Vector& x);
/// {Y : [S, Y] = 0}
Subspace centralizer_of_subspace(const LieAlgebra& a, const Subspace& s);
/// Center of the subalgebra S: {Y in S : [S, Y] = 0}.
Subspace center_of(const LieAlgebra& a, const Subspace& s);
/// span [S, T]
Subspace bracket_subspaces(const LieAlgebra& a, const Subspace& s, const Subspace& t);

bool is_subalgebra(const LieAlgebra& a, const Subspace& s);
bool is_ideal(const LieAlgebra& a, const Subspace& s);
/// I is an ideal of the subalgebra `ambient`.
bool is_ideal_in(const LieAlgebra& a, const Subspace& ambient, const Subspace& ideal);
bool is_abelian(const LieAlgebra& a, const Subspace& s);
bool is_nilpotent_operator(const Matrix& op);

/// S, [S,S], [[S,S],[S,S]], ... up to and including the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& a, const Subspace& s);
/// S, [S,S], [S,[S,S]], ... up to and including the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& a, const Subspace& s);
bool is_solvable(const LieAlgebra& a, const Subspace& s);
bool is_nilpotent(const LieAlgebra& a, const Subspace& s);
/// Number of non-zero terms in the lower central series of a nilpotent S
/// (0 for S = 0, 1 for abelian, 2 for two-step); nullopt if not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& a, const Subspace& s);

/// Maximal solvable ideal, via Cartan's criterion on [g, g].
Subspace radical(const LieAlgebra& a);
/// Compute-or-verify: the radical if it is nilpotent, otherwise the verified
/// declared nilradical.
Subspace nilradical(const LieAlgebra& a);
/// Same checks applied to an explicit candidate; throws DeclaredNilradicalInvalid.
void verify_nilradical_candidate(const LieAlgebra& a, const Subspace& candidate);

struct LeviReport {
  Subspace levi;
  std::vector<Subspace> simple_ideals;
  std::vector<bool> simple_is_compact;
  Subspace compact_part;
  Subspace noncompact_part;
};

/// Checks a declared Levi factor and splits it into compact and noncompact parts.
LeviReport verify_levi(const LieAlgebra& a, const DeclaredStructure& decl);

/// Smallest ideal of the subalgebra `ambient` containing `seed`.
Subspace smallest_ideal_containing(const LieAlgebra& a, const Subspace& ambient, const Subspace& seed);

/// Largest ideal of g contained in `s`.
Subspace largest_ideal_inside(const LieAlgebra& a, const Subspace& s);

/// Whether the radical is zero.
bool is_semisimple(const LieAlgebra& a);

}  // namespace liekv
