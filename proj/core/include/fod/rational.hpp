#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fod {

/// Exact rational number. mpq_class keeps values canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Coordinates of a vector over Q (an algebra element, a column, ...).
using QVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws ValidationError on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 0, or just "p" when the value is an integer.
std::string format_rational(const Rational& value);

bool is_zero(const QVector& v);
QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);

}  // namespace fod
