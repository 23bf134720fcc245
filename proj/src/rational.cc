#include "mcfl/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "mcfl/errors.hpp"

namespace mcfl {
namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_int parse_integer(std::string_view s) { return mpz_int(std::string(s)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("not a rational: '" + std::string(text) + "'");
    mpz_int d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    out = Rational(parse_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw InputError("not a rational: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw InputError("not a rational: '" + std::string(text) + "'");
    }
    mpz_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    mpz_int w = whole.empty() ? mpz_int(0) : parse_integer(whole);
    mpz_int f = frac.empty() ? mpz_int(0) : parse_integer(frac);
    out = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw InputError("not a rational: '" + std::string(text) + "'");
    out = Rational(parse_integer(s));
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

int64_t floor_to_int(const Rational& value) {
  mpz_int q = numerator(value) / denominator(value);  // truncates toward zero
  if (value < 0 && q * denominator(value) != numerator(value)) q -= 1;
  if (q > std::numeric_limits<int64_t>::max() || q < std::numeric_limits<int64_t>::min()) {
    throw std::overflow_error("rational out of int64 range");
  }
  return q.convert_to<int64_t>();
}

int64_t ceil_to_int(const Rational& value) { return -floor_to_int(Rational(-value)); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace mcfl
