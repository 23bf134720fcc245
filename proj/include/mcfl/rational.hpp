#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace mcfl {

// Exact rational arithmetic backed by GMP. Expression templates are off so
// that `auto` and value semantics behave like a plain arithmetic type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p", "p/q" and decimal notation such as "0.01" or "-2.5".
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);

int64_t floor_to_int(const Rational& value);
int64_t ceil_to_int(const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

double to_double(const Rational& value);

}  // namespace mcfl
