#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace posetdegen {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);
// Accepts "p", "-p", "p/q"; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace posetdegen
