#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace segeuler {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

/// binomial(n, k) with the convention that out-of-range indices give 0.
Int binomial(long long n, long long k);

Int int_pow(const Int& base, unsigned exp);

/// base^exp for integer exp; negative exponents invert (base must be nonzero).
Rat rat_pow(const Rat& base, int exp);

Rat rat_abs(const Rat& x);

/// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
Rat parse_rational(std::string_view text);

std::string rat_str(const Rat& x);

}  // namespace segeuler
