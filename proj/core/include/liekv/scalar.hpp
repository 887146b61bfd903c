#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace liekv {

/// Exact rational number. Values are kept canonical (reduced, positive
/// denominator) by every constructor in this library.
using Scalar = mpq_class;

/// Coordinates of a Lie algebra element with respect to the algebra basis.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" (q > 0). Throws Error(ParseError) otherwise.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p/q" with q > 0, or "p" for integers.
std::string to_string(const Scalar& value);

/// Square root over Q when `value` is the square of a rational.
bool rational_sqrt(const Scalar& value, Scalar& root);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// a + c * b, in place.
void axpy(Vector& a, const Scalar& c, const Vector& b);

std::string to_string(const Vector& v);
std::vector<double> to_double(const Vector& v);

}  // namespace liekv
