#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace brieskorn {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor path ends in canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Parses "p" or "p/q" with an optional sign.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms; q must be nonzero.
Rational make_rational(long p, long q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace brieskorn
