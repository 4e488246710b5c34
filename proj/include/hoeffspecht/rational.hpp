#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hs {

/// Exact rational scalar, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(Rational const& q);

/// Accepts "p", "p/q" and a leading sign; the result is canonicalized.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace hs
