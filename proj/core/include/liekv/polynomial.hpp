#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekv/matrix.hpp"

namespace liekv {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Scalar> coefficients);

  static RationalPolynomial constant(const Scalar& c);
  static RationalPolynomial monomial(const Scalar& c, unsigned degree);
  /// x - root
  static RationalPolynomial linear_root(const Scalar& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar operator()(const Scalar& x) const;
  double evaluate(double x) const;
  /// p(A) by Horner's rule.
  Matrix operator()(const Matrix& a) const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;
  /// Multiplicity of the root 0.
  unsigned zero_multiplicity() const;
  /// p / x^k for k = zero_multiplicity().
  RationalPolynomial strip_zero_roots() const;
  bool is_even() const;
  /// q with q(x^2) = p(x); requires is_even().
  RationalPolynomial halve_even() const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Scalar& c, const RationalPolynomial& a);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic greatest common divisor (zero if both are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial pow(const RationalPolynomial& p, unsigned k);

/// Monic product of the distinct irreducible factors.
RationalPolynomial square_free_part(const RationalPolynomial& p);
bool is_square_free(const RationalPolynomial& p);

/// Yun's algorithm: p = lc * prod f_i^i with f_i monic, square-free, coprime.
/// Entries are (f_i, i) for the non-constant f_i.
std::vector<std::pair<RationalPolynomial, unsigned>> square_free_decomposition(const RationalPolynomial& p);

/// Sturm chain of a non-zero polynomial.
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);

/// Number of distinct real roots in (lower, upper]; nullopt bounds mean
/// -infinity / +infinity. `lower` must not be a root.
unsigned count_real_roots(const RationalPolynomial& p, const std::optional<Scalar>& lower,
                          const std::optional<Scalar>& upper);

/// The rational number of least denominator strictly between a and b (a < b).
Scalar simplest_between(const Scalar& a, const Scalar& b);

/// All distinct rational roots, ascending.
std::vector<Scalar> rational_roots(const RationalPolynomial& p);

struct PolynomialFactor {
  RationalPolynomial factor;  // monic
  unsigned multiplicity = 1;
  /// False when the factor search hit its work budget before proving
  /// irreducibility; the factor is still a true (square-free) divisor.
  bool irreducible = true;
};

/// Factorization into monic factors over Q, ordered by degree then coefficients.
std::vector<PolynomialFactor> factor_over_rationals(const RationalPolynomial& p);

/// Characteristic polynomial det(x I - A), monic of degree n.
RationalPolynomial characteristic_polynomial(const Matrix& a);
/// Monic polynomial of least degree annihilating A.
RationalPolynomial minimal_polynomial(const Matrix& a);

/// Companion-matrix roots in double precision (for cross-checks).
std::vector<std::complex<double>> numeric_roots(const RationalPolynomial& p);

}  // namespace liekv
