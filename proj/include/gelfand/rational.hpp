#pragma once

#include <gmpxx.h>

#include <string>

namespace gelfand {

/// Exact rational scalar. Everything in this library is computed over Q;
/// there is no floating point anywhere.
using Rational = mpq_class;

inline int rational_sign(const Rational& q) { return sgn(q); }

/// Canonical "p/q" form ("p" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gelfand
