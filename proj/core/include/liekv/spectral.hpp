#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liekv/lie_algebra.hpp"
#include "liekv/polynomial.hpp"

namespace liekv {

/// True iff every root of p lies on the imaginary axis (0 included).
/// Decided exactly: after removing the zero roots the rest must be even,
/// r(x) = s(x^2), and all roots of s must be real and negative (Sturm count).
bool spectrum_is_pure_imaginary(const RationalPolynomial& p);

/// Whether p has a real root other than 0.
bool has_nonzero_real_root(const RationalPolynomial& p);

struct FittingDecomposition {
  Subspace a1;  // Ker(L^k)
  Subspace a2;  // Im(L^k)
  unsigned exponent = 0;  // least k with Ker(L^k) = Ker(L^(k+1))
};

FittingDecomposition fitting(const Operator& l);
FittingDecomposition fitting(const LieAlgebra& a, const Vector& x);

struct JordanChevalley {
  Operator semisimple;
  Operator nilpotent;
};

/// L = Ls + Ln with Ls a polynomial in L; Newton iteration on the
/// square-free part of the characteristic polynomial.
JordanChevalley jordan_chevalley(const Operator& l);

/// Primary component of A2 under L^2 for one irreducible factor f(mu).
struct RootSpace {
  RationalPolynomial factor;  // monic, in mu = lambda^2
  unsigned multiplicity = 1;
  bool irreducible = true;
  Subspace space;  // Ker f(L^2)^multiplicity
  /// beta^2 when f = mu + beta^2 is linear.
  std::optional<Scalar> beta_sq;
};

/// All the spectral data of L = ad(X) used by the verifiers.
struct SpectralAnalysis {
  Operator l;
  RationalPolynomial char_poly;
  RationalPolynomial min_poly;
  FittingDecomposition fitting;
  JordanChevalley jc;
  std::vector<RootSpace> root_spaces;
  /// sigma on g (zero on A1) when every beta is a positive rational.
  std::optional<Operator> sigma;
  /// Why sigma is absent ("" when present).
  std::string sigma_status;
  /// beta_j for each root space, filled when sigma is present.
  std::vector<Scalar> betas;
};

SpectralAnalysis analyze(const LieAlgebra& a, const Vector& x);

std::vector<RootSpace> root_spaces(const LieAlgebra& a, const Vector& x);

/// sigma(U) = Ls(U) / beta_j on V_j, extended by zero on A1. Throws
/// EmptyA2, IrrationalBeta, NonImaginarySpectrum.
Operator sigma(const LieAlgebra& a, const Vector& x);

struct GradedBracket {
  Vector plus;
  Vector minus;
};

/// [Y,Z]^{+-} = ([Y,Z] +- [sigma Y, sigma Z]) / 2 for Y in V_i, Z in V_j.
/// Checks the eigenvalue relations of Ls^2 on both parts exactly.
GradedBracket graded_bracket(const LieAlgebra& a, const SpectralAnalysis& sa, const Vector& y, const Vector& z);
GradedBracket graded_bracket(const LieAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// Index of the root space holding v, if v lies in a single one.
std::optional<std::size_t> root_space_of(const SpectralAnalysis& sa, const Vector& v);

/// ad(X) semisimple with spectrum in iR.
bool is_compact_vector(const LieAlgebra& a, const Vector& x);

}  // namespace liekv
