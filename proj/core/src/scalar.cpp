#include "liekv/scalar.hpp"

#include <cctype>

#include "liekv/error.hpp"

namespace liekv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NilradicalUndecided: return "NilradicalUndecided";
    case ErrorKind::DeclaredNilradicalInvalid: return "DeclaredNilradicalInvalid";
    case ErrorKind::NotComplementary: return "NotComplementary";
    case ErrorKind::KillingDegenerateOnLevi: return "KillingDegenerateOnLevi";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::IrrationalBeta: return "IrrationalBeta";
    case ErrorKind::NonImaginarySpectrum: return "NonImaginarySpectrum";
    case ErrorKind::EmptyA2: return "EmptyA2";
    case ErrorKind::NotInRootSpace: return "NotInRootSpace";
    case ErrorKind::NotReductive: return "NotReductive";
    case ErrorKind::MetricNotInvariant: return "MetricNotInvariant";
    case ErrorKind::MetricNotPositiveDefinite: return "MetricNotPositiveDefinite";
    case ErrorKind::IneffectiveAction: return "IneffectiveAction";
    case ErrorKind::GoStatusUnknown: return "GoStatusUnknown";
    case ErrorKind::UnknownStatement: return "UnknownStatement";
    case ErrorKind::MissingDeclaration: return "MissingDeclaration";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar value(negative ? mpz_class(-n) : n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

bool rational_sqrt(const Scalar& value, Scalar& root) {
  if (sgn(value) < 0) return false;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

static void require_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

Vector add(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  require_same(a, b);
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += c * b[i];
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::vector<double> to_double(const Vector& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

}  // namespace liekv
