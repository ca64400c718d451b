#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

// Exact arbitrary-precision arithmetic. Every quantity in the library is an
// Integer or a Rational; there is no floating point anywhere. Rationals are
// kept in lowest terms with positive denominator by the backing type.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^k as an Integer, k >= 0.
inline Integer pow2_int(std::size_t k) { return Integer(1) << k; }

// 2^e as a Rational, e any integer.
inline Rational dyadic(long e) {
  if (e >= 0) return Rational(pow2_int(static_cast<std::size_t>(e)));
  return Rational(1, pow2_int(static_cast<std::size_t>(-e)));
}

inline Rational rational_power(const Rational& base, std::size_t n) {
  Rational acc(1);
  for (std::size_t i = 0; i < n; ++i) acc *= base;
  return acc;
}

// ceil(a/b) for b > 0.
inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b < a) ++q;
  return q;
}

// "p/q" in lowest terms; whole numbers print without the denominator.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "malformed rational '" + text + "'"); };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto digits_ok = [](const std::string& s, bool sign) {
    std::size_t i = (sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  Integer p(num), q(den);
  if (q == 0) bad();
  return Rational(p) / Rational(q);
}

}  // namespace cantor
