#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pluckerlab {

// Exact rational arithmetic. All inequality checks in this project are
// tolerance-free, so every numeric value is an mpq in lowest terms with
// positive denominator (canonicalized by GMP).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p" with arbitrary-precision decimal integers.
inline Rational rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q{Integer(text)};
      return q;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

// Formats as "p" for integers and "p/q" otherwise.
inline std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// q^e for nonnegative integer exponents.
inline Rational rat_pow(const Rational& q, unsigned long e) {
  Rational out = 1;
  Rational base = q;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace pluckerlab
