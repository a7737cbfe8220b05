#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gerst {

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign on p). Throws PreconditionError
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

} // namespace gerst
