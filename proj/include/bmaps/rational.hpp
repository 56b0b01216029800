// Arbitrary-precision rationals. GMP's mpq_class already keeps values in
// lowest terms with a positive denominator, which is exactly the invariant we
// need, so Rat is an alias plus the few helpers the rest of the code wants.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bmaps {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" or "num"; exact decimal integers
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

} // namespace bmaps
