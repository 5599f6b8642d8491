#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtoda {

/// Exact rational coefficient. GMP keeps the value canonical
/// (positive denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;

/// Serializes as "p/q", always with an explicit denominator.
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational rational_from_string(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace gtoda
