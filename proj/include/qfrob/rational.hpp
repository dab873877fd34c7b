#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qfrob {

// Exact rational number. gmpxx keeps arithmetic results canonical
// (positive denominator, reduced), which every comparison below relies on.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qfrob
