#include "liekv/spectral.hpp"

#include "liekv/error.hpp"

namespace liekv {

bool spectrum_is_pure_imaginary(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "spectrum of the zero polynomial");
  RationalPolynomial r = p.strip_zero_roots();
  if (r.degree() == 0) return true;
  // Non-zero imaginary roots come in pairs +-i*beta, so r must be even.
  if (!r.is_even()) return false;
  RationalPolynomial s = r.halve_even();
  RationalPolynomial sf = square_free_part(s);
  // s(0) != 0 here, so counting on (-inf, 0] is counting on (-inf, 0).
  return count_real_roots(sf, std::nullopt, Scalar(0)) == static_cast<unsigned>(sf.degree());
}

bool has_nonzero_real_root(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  RationalPolynomial r = p.strip_zero_roots();
  if (r.degree() <= 0) return false;
  return count_real_roots(r, std::nullopt, std::nullopt) > 0;
}

FittingDecomposition fitting(const Operator& l) {
  if (!l.is_square()) throw Error(ErrorKind::DimensionMismatch, "Fitting decomposition of non-square operator");
  const std::size_t n = l.rows();
  Operator power = Operator::identity(n);
  Subspace previous = kernel(power);
  unsigned k = 0;
  for (;;) {
    Operator next_power = power * l;
    Subspace next = kernel(next_power);
    if (next == previous) break;
    power = std::move(next_power);
    previous = std::move(next);
    ++k;
  }
  FittingDecomposition fd{previous, image(power), k};
  if (fd.a1.dim() + fd.a2.dim() != n || !fd.a1.intersect(fd.a2).is_zero())
    throw Error(ErrorKind::InternalInconsistency, "Fitting components are not complementary");
  return fd;
}

FittingDecomposition fitting(const LieAlgebra& a, const Vector& x) { return fitting(ad_matrix(a, x)); }

JordanChevalley jordan_chevalley(const Operator& l) {
  if (!l.is_square()) throw Error(ErrorKind::DimensionMismatch, "Jordan-Chevalley of non-square operator");
  RationalPolynomial f = square_free_part(characteristic_polynomial(l));
  RationalPolynomial df = f.derivative();
  Operator s = l;
  for (int iteration = 0; iteration < 64; ++iteration) {
    Operator fs = f(s);
    if (fs.is_zero()) {
      Operator n = l - s;
      return {s, n};
    }
    auto inv = df(s).inverse();
    if (!inv) throw Error(ErrorKind::InternalInconsistency, "f'(S) singular during Newton iteration");
    s = s - fs * *inv;
  }
  throw Error(ErrorKind::InternalInconsistency, "Newton iteration for the semisimple part did not terminate");
}

namespace {

std::vector<RootSpace> compute_root_spaces(const Operator& l, const FittingDecomposition& fd) {
  std::vector<RootSpace> out;
  if (fd.a2.is_zero()) return out;
  Operator l2 = l * l;
  RationalPolynomial cp = characteristic_polynomial(l2);
  if (cp.zero_multiplicity() != fd.a1.dim())
    throw Error(ErrorKind::InternalInconsistency, "L^2 has zero eigenvalues on A2");
  RationalPolynomial on_a2 = cp.strip_zero_roots();
  Subspace total(l.rows());
  for (const auto& pf : factor_over_rationals(on_a2)) {
    RootSpace rs;
    rs.factor = pf.factor;
    rs.multiplicity = pf.multiplicity;
    rs.irreducible = pf.irreducible;
    rs.space = kernel(pow(pf.factor, pf.multiplicity)(l2));
    if (pf.factor.degree() == 1) rs.beta_sq = pf.factor.coefficient(0);
    total = total + rs.space;
    out.push_back(std::move(rs));
  }
  if (!(total == fd.a2)) throw Error(ErrorKind::InternalInconsistency, "root spaces do not exhaust A2");
  return out;
}

}  // namespace

std::vector<RootSpace> root_spaces(const LieAlgebra& a, const Vector& x) {
  Operator l = ad_matrix(a, x);
  return compute_root_spaces(l, fitting(l));
}

namespace {

/// Builds sigma or records why it is not representable over Q.
void attach_sigma(SpectralAnalysis& sa) {
  if (sa.fitting.a2.is_zero()) {
    sa.sigma_status = "EmptyA2";
    return;
  }
  std::vector<Scalar> betas;
  for (const auto& rs : sa.root_spaces) {
    if (!rs.beta_sq) {
      sa.sigma_status = "IrrationalBeta: factor " + rs.factor.to_string("mu") + " is not linear";
      return;
    }
    if (sgn(*rs.beta_sq) <= 0) {
      sa.sigma_status = "NonImaginarySpectrum: beta^2 = " + to_string(*rs.beta_sq);
      return;
    }
    Scalar beta;
    if (!rational_sqrt(*rs.beta_sq, beta)) {
      sa.sigma_status = "IrrationalBeta: beta^2 = " + to_string(*rs.beta_sq);
      return;
    }
    betas.push_back(beta);
  }
  const std::size_t n = sa.l.rows();
  std::vector<Vector> columns = sa.fitting.a1.basis();
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (const auto& rs : sa.root_spaces) {
    blocks.emplace_back(columns.size(), rs.space.dim());
    for (auto& v : rs.space.basis()) columns.push_back(std::move(v));
  }
  Matrix b = Matrix::from_columns(columns, n);
  auto b_inv = b.inverse();
  if (!b_inv) throw Error(ErrorKind::InternalInconsistency, "A1 and root spaces are not a direct sum");
  Operator sig(n, n);
  Operator proj_a2(n, n);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    Matrix e(n, n);
    for (std::size_t k = 0; k < blocks[j].second; ++k) e(blocks[j].first + k, blocks[j].first + k) = 1;
    Matrix p = b * e * *b_inv;
    sig = sig + (1 / betas[j]) * (sa.jc.semisimple * p);
    proj_a2 = proj_a2 + p;
  }
  if (!(sig * sig == Scalar(-1) * proj_a2))
    throw Error(ErrorKind::InternalInconsistency, "sigma^2 != -Id on A2");
  sa.sigma = std::move(sig);
  sa.betas = std::move(betas);
}

}  // namespace

SpectralAnalysis analyze(const LieAlgebra& a, const Vector& x) {
  SpectralAnalysis sa;
  sa.l = ad_matrix(a, x);
  sa.char_poly = characteristic_polynomial(sa.l);
  sa.min_poly = minimal_polynomial(sa.l);
  if (!divmod(sa.char_poly, sa.min_poly).second.is_zero())
    throw Error(ErrorKind::InternalInconsistency, "minimal polynomial does not divide the characteristic polynomial");
  sa.fitting = fitting(sa.l);
  sa.jc = jordan_chevalley(sa.l);
  sa.root_spaces = compute_root_spaces(sa.l, sa.fitting);
  attach_sigma(sa);
  return sa;
}

Operator sigma(const LieAlgebra& a, const Vector& x) {
  SpectralAnalysis sa = analyze(a, x);
  if (sa.sigma) return *sa.sigma;
  const std::string& why = sa.sigma_status;
  if (why.rfind("EmptyA2", 0) == 0) throw Error(ErrorKind::EmptyA2, "A2 = 0");
  if (why.rfind("NonImaginarySpectrum", 0) == 0) throw Error(ErrorKind::NonImaginarySpectrum, why);
  throw Error(ErrorKind::IrrationalBeta, why);
}

std::optional<std::size_t> root_space_of(const SpectralAnalysis& sa, const Vector& v) {
  for (std::size_t i = 0; i < sa.root_spaces.size(); ++i)
    if (sa.root_spaces[i].space.contains(v)) return i;
  return std::nullopt;
}

GradedBracket graded_bracket(const LieAlgebra& a, const SpectralAnalysis& sa, const Vector& y, const Vector& z) {
  if (!sa.sigma) throw Error(ErrorKind::IrrationalBeta, "sigma undefined: " + sa.sigma_status);
  auto i = root_space_of(sa, y);
  auto j = root_space_of(sa, z);
  if (!i || !j || is_zero(y) || is_zero(z)) {
    if (is_zero(y) || is_zero(z)) return {zero_vector(a.dim()), zero_vector(a.dim())};
    throw Error(ErrorKind::NotInRootSpace, "arguments must each lie in a single root space");
  }
  const Operator& s = *sa.sigma;
  Vector yz = bracket(a, y, z);
  Vector sysz = bracket(a, s.apply(y), s.apply(z));
  GradedBracket gb{scale(Scalar(1, 2), add(yz, sysz)), scale(Scalar(1, 2), sub(yz, sysz))};

  Operator ls2 = sa.jc.semisimple * sa.jc.semisimple;
  const Scalar& bi = sa.betas[*i];
  const Scalar& bj = sa.betas[*j];
  Scalar diff = bi - bj, total = bi + bj;
  if (!(ls2.apply(gb.plus) == scale(-(diff * diff), gb.plus)))
    throw Error(ErrorKind::InternalInconsistency, "Ls^2 [Y,Z]^+ != -(bi-bj)^2 [Y,Z]^+");
  if (!(ls2.apply(gb.minus) == scale(-(total * total), gb.minus)))
    throw Error(ErrorKind::InternalInconsistency, "Ls^2 [Y,Z]^- != -(bi+bj)^2 [Y,Z]^-");
  return gb;
}

GradedBracket graded_bracket(const LieAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return graded_bracket(a, analyze(a, x), y, z);
}

bool is_compact_vector(const LieAlgebra& a, const Vector& x) {
  Operator l = ad_matrix(a, x);
  return is_square_free(minimal_polynomial(l)) && spectrum_is_pure_imaginary(characteristic_polynomial(l));
}

}  // namespace liekv
