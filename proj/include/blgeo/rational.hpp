#pragma once

// Exact scalar type used everywhere in blgeo.
//
// Values are GMP rationals kept in lowest terms with a positive denominator.
// The canonical zero is 0/1.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace blgeo {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q", "p", or a finite decimal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

std::string to_string(const Vector& v);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& factor, const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

/// Positive rescaling of v to a primitive integer vector (gcd 1).
/// The zero vector is returned unchanged.
Vector primitive_direction(const Vector& v);

/// Exact factorial as a rational.
Rational factorial(unsigned n);

/// base^exponent for a signed integer exponent. 0^negative throws.
Rational power(const Rational& base, long exponent);

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace blgeo
