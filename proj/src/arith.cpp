#include "segeuler/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace segeuler {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int int_pow(const Int& base, unsigned exp) {
  Int r = 1, b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

Rat rat_pow(const Rat& base, int exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(1) / rat_pow(base, -exp);
  }
  Rat r = 1, b = base;
  unsigned e = static_cast<unsigned>(exp);
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("sign without digits");
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("invalid digit in integer literal: '" + std::string(text) + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Int(-value) : value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string rat_str(const Rat& x) { return x.str(); }

}  // namespace segeuler
