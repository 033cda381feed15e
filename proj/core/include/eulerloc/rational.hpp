#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eulerloc {

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Serializes as "p/q" (integers too: "0/1", "-3/1").
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

}  // namespace eulerloc
