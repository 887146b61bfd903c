#include "liekv/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "liekv/error.hpp"

namespace liekv {

RationalPolynomial::RationalPolynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Scalar& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Scalar& c, unsigned degree) {
  std::vector<Scalar> v(degree + 1, Scalar(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_root(const Scalar& root) { return RationalPolynomial({-root, Scalar(1)}); }

Scalar RationalPolynomial::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Matrix RationalPolynomial::operator()(const Matrix& a) const {
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  Scalar inv = 1 / leading();
  return inv * *this;
}

unsigned RationalPolynomial::zero_multiplicity() const {
  unsigned k = 0;
  while (k < coeffs_.size() && sgn(coeffs_[k]) == 0) ++k;
  return k;
}

RationalPolynomial RationalPolynomial::strip_zero_roots() const {
  unsigned k = zero_multiplicity();
  return RationalPolynomial(std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()));
}

bool RationalPolynomial::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

RationalPolynomial RationalPolynomial::halve_even() const {
  std::vector<Scalar> h;
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) h.push_back(coeffs_[i]);
  return RationalPolynomial(std::move(h));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Scalar> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Scalar> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator*(const Scalar& c, const RationalPolynomial& a) {
  std::vector<Scalar> r = a.coeffs_;
  for (auto& x : r) x *= c;
  return RationalPolynomial(std::move(r));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Scalar q = rem[static_cast<std::size_t>(k + db)] * inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(static_cast<unsigned>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPolynomial pow(const RationalPolynomial& p, unsigned k) {
  RationalPolynomial r = RationalPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of zero");
  if (p.degree() == 0) return RationalPolynomial::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool is_square_free(const RationalPolynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<RationalPolynomial, unsigned>> square_free_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<std::pair<RationalPolynomial, unsigned>> out;
  if (p.degree() == 0) return out;
  RationalPolynomial f = p.monic();
  RationalPolynomial a = gcd(f, f.derivative());
  RationalPolynomial b = divmod(f, a).first;
  RationalPolynomial c = divmod(f.derivative(), a).first;
  RationalPolynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RationalPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of zero");
  std::vector<RationalPolynomial> chain{p};
  RationalPolynomial d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    RationalPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    d = Scalar(-1) * r;
  }
  return chain;
}

namespace {

int sign_at_infinity(const RationalPolynomial& p, bool positive) {
  int s = sgn(p.leading());
  if (!positive && (p.degree() % 2 == 1)) s = -s;
  return s;
}

unsigned variations(const std::vector<RationalPolynomial>& chain, const std::optional<Scalar>& at, bool plus_infinity) {
  unsigned v = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = at ? sgn(q(*at)) : sign_at_infinity(q, plus_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

unsigned count_real_roots(const RationalPolynomial& p, const std::optional<Scalar>& lower,
                          const std::optional<Scalar>& upper) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(square_free_part(p));
  unsigned vl = variations(chain, lower, false);
  unsigned vu = variations(chain, upper, true);
  return vl >= vu ? vl - vu : 0;
}

namespace {

mpz_class floor_of(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace

Scalar simplest_between(const Scalar& a, const Scalar& b) {
  // Continued-fraction descent: an integer in (a, b) wins outright; otherwise
  // both ends share the integer part k and we recurse on the reciprocals.
  mpz_class k = floor_of(a);
  Scalar next(k + 1);
  if (next < b) return next;
  Scalar lo = a - Scalar(k);
  Scalar hi = b - Scalar(k);
  Scalar y;
  if (sgn(lo) == 0) {
    y = Scalar(floor_of(1 / hi) + 1);
  } else {
    y = simplest_between(1 / hi, 1 / lo);
  }
  Scalar r = Scalar(k) + 1 / y;
  r.canonicalize();
  return r;
}

namespace {

/// Primitive integer multiple of p (positive leading coefficient).
std::vector<mpz_class> integer_coefficients(const RationalPolynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.coefficients()) z.push_back(mpz_class(c.get_num() * (l / c.get_den())));
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

std::optional<Scalar> refine_rational_root(const RationalPolynomial& p, const std::vector<RationalPolynomial>& chain,
                                           Scalar a, Scalar b, const mpz_class& max_den) {
  const Scalar min_width = Scalar(1, 1) / Scalar(max_den * max_den);
  for (;;) {
    if (sgn(p(b)) == 0) return b;
    Scalar s = simplest_between(a, b);
    if (sgn(p(s)) == 0) return s;
    if (s.get_den() > max_den) return std::nullopt;
    if (b - a < min_width) return std::nullopt;
    Scalar m = (a + b) / 2;
    if (sgn(p(m)) != 0 && variations(chain, a, false) - variations(chain, m, false) == 0)
      a = m;
    else
      b = m;
  }
}

}  // namespace

std::vector<Scalar> rational_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of zero");
  std::vector<Scalar> roots;
  if (p.degree() <= 0) return roots;
  RationalPolynomial f = square_free_part(p);
  if (f.zero_multiplicity() > 0) {
    roots.push_back(0);
    f = f.strip_zero_roots();
  }
  if (f.degree() > 0) {
    auto z = integer_coefficients(f);
    mpz_class max_den = abs(z.back());
    // Cauchy bound on |root|.
    Scalar bound = 0;
    for (std::size_t i = 0; i + 1 < f.coefficients().size(); ++i)
      bound = std::max(bound, Scalar(abs(f.coefficients()[i] / f.leading())));
    bound += 1;
    auto chain = sturm_chain(f);
    std::vector<std::pair<Scalar, Scalar>> work{{-bound, bound}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      unsigned n = variations(chain, a, false) - variations(chain, b, false);
      if (n == 0) continue;
      if (n == 1) {
        if (auto r = refine_rational_root(f, chain, a, b, max_den)) roots.push_back(*r);
        continue;
      }
      Scalar m = (a + b) / 2;
      for (long k = 3; sgn(f(m)) == 0; ++k) m = a + (b - a) / k;
      work.emplace_back(a, m);
      work.emplace_back(m, b);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

constexpr long kMaxKroneckerValue = 1000000000000L;
constexpr std::size_t kMaxKroneckerCombinations = 200000;

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (mpz_class d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) primes.emplace_back(d, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [pr, e] : primes) {
    std::size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= pr;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

/// Lagrange interpolation through (xs[i], ys[i]).
RationalPolynomial interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  RationalPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RationalPolynomial term = RationalPolynomial::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * RationalPolynomial::linear_root(xs[j]);
      term = (1 / Scalar(xs[i] - xs[j])) * term;
    }
    result = result + term;
  }
  return result;
}

bool has_integer_coefficients(const RationalPolynomial& p) {
  for (const auto& c : p.coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

enum class SplitResult { Split, Irreducible, BudgetExceeded };

/// Kronecker's method: look for an integer factor of degree 2..deg/2 of the
/// primitive integer polynomial p, which has no rational roots.
SplitResult kronecker_split(const RationalPolynomial& p, RationalPolynomial& factor) {
  const int d = p.degree();
  std::vector<std::pair<mpz_class, long>> values;
  for (long x = -12; x <= 12; ++x) {
    Scalar v = p(Scalar(x));
    if (sgn(v) != 0) values.emplace_back(abs(v.get_num()), x);
  }
  std::sort(values.begin(), values.end());
  for (int e = 2; e <= d / 2; ++e) {
    if (values.size() < static_cast<std::size_t>(e + 1)) return SplitResult::BudgetExceeded;
    std::vector<Scalar> xs;
    std::vector<std::vector<mpz_class>> divs;
    std::size_t combos = 1;
    for (int i = 0; i <= e; ++i) {
      if (values[static_cast<std::size_t>(i)].first > kMaxKroneckerValue) return SplitResult::BudgetExceeded;
      xs.emplace_back(values[static_cast<std::size_t>(i)].second);
      divs.push_back(positive_divisors(values[static_cast<std::size_t>(i)].first));
      combos *= divs.back().size() * (i == 0 ? 1 : 2);
      if (combos > kMaxKroneckerCombinations) return SplitResult::BudgetExceeded;
    }
    for (std::size_t n = 0; n < combos; ++n) {
      // Decode n into divisor choices; the first value's sign is fixed.
      std::size_t rest = n;
      std::vector<Scalar> ys;
      for (int i = 0; i <= e; ++i) {
        std::size_t width = divs[static_cast<std::size_t>(i)].size() * (i == 0 ? 1 : 2);
        std::size_t pick = rest % width;
        rest /= width;
        mpz_class dv = divs[static_cast<std::size_t>(i)][pick % divs[static_cast<std::size_t>(i)].size()];
        if (pick >= divs[static_cast<std::size_t>(i)].size()) dv = -dv;
        ys.emplace_back(dv);
      }
      RationalPolynomial g = interpolate(xs, ys);
      if (g.degree() != e || !has_integer_coefficients(g)) continue;
      if (divmod(p, g).second.is_zero()) {
        factor = g.monic();
        return SplitResult::Split;
      }
    }
  }
  return SplitResult::Irreducible;
}

void split_square_free(const RationalPolynomial& f, unsigned mult, std::vector<PolynomialFactor>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() <= 3) {
    // No rational root (already removed) means irreducible up to degree 3.
    out.push_back({f.monic(), mult, true});
    return;
  }
  auto z = integer_coefficients(f);
  std::vector<Scalar> zc(z.begin(), z.end());
  RationalPolynomial prim(zc);
  RationalPolynomial g;
  switch (kronecker_split(prim, g)) {
    case SplitResult::Irreducible:
      out.push_back({f.monic(), mult, true});
      return;
    case SplitResult::BudgetExceeded:
      out.push_back({f.monic(), mult, false});
      return;
    case SplitResult::Split:
      split_square_free(g, mult, out);
      split_square_free(divmod(f, g).first, mult, out);
      return;
  }
}

}  // namespace

std::vector<PolynomialFactor> factor_over_rationals(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of zero");
  std::vector<PolynomialFactor> out;
  for (auto& [f, mult] : square_free_decomposition(p)) {
    RationalPolynomial rest = f;
    for (const auto& r : rational_roots(f)) {
      RationalPolynomial lin = RationalPolynomial::linear_root(r);
      out.push_back({lin, mult, true});
      rest = divmod(rest, lin).first;
    }
    split_square_free(rest, mult, out);
  }
  std::sort(out.begin(), out.end(), [](const PolynomialFactor& a, const PolynomialFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coefficients();
    const auto& cb = b.factor.coefficients();
    for (std::size_t i = ca.size(); i-- > 0;)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
  });
  return out;
}

RationalPolynomial characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier; exact over Q.
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square matrix");
  const std::size_t n = a.rows();
  auto flatten = [n](const Matrix& m) {
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
    return v;
  };
  std::vector<Vector> powers{flatten(Matrix::identity(n))};
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * a;
    Vector target = flatten(current);
    Matrix system = Matrix::from_columns(powers, n * n);
    if (auto x = system.solve(target)) {
      std::vector<Scalar> coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)[i];
      coeffs[k] = 1;
      return RationalPolynomial(std::move(coeffs));
    }
    powers.push_back(std::move(target));
  }
  throw Error(ErrorKind::InternalInconsistency, "no annihilating polynomial up to degree n");
}

std::vector<std::complex<double>> numeric_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of zero");
  const int d = p.degree();
  std::vector<std::complex<double>> roots;
  if (d <= 0) return roots;
  RationalPolynomial m = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -m.coefficient(static_cast<unsigned>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

}  // namespace liekv
