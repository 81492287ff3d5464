#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace defcoh {

// Exact rational scalar used by every mathematical path in the library.
// GMP keeps the canonical form (gcd 1, positive denominator) after every
// operation, which is exactly the invariant the linear algebra relies on.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

// Parses "p", "-p" or "p/q" with q > 0. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace defcoh
