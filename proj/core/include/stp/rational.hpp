#pragma once

// Exact rational scalars used throughout the toolkit, together with the
// canonical string forms the serializers and the command-line tool rely on.
// Values are always held in lowest terms with a positive denominator; the
// backing type canonicalizes after every operation.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace stp {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Canonical token: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

// Strict inverse of to_string. Accepts an optional leading sign on the
// numerator, digits everywhere else, and a nonzero unsigned denominator.
// Anything else (whitespace, decimal points, exponents, signed or zero
// denominators, empty parts) yields nullopt. "4/6" parses and canonicalizes
// to 2/3.
std::optional<Rational> parse_rational(std::string_view token);

// Size of the canonical representation in bits: bit length of the numerator
// plus bit length of the denominator, where zero contributes zero bits.
// Elimination uses this as its pivot-selection cost.
std::size_t bit_length(const Rational& value);

// Exact decimal rendering with the given number of significant digits,
// rounding half to even. Positional notation while the decimal exponent lies
// in [-4, 8], scientific notation ("9.81408e+186") beyond that range. The
// rounding is computed on the exact value, so the output is deterministic.
std::string decimal_string(const Rational& value, int significant = 6);

}  // namespace stp
