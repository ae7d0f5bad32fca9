#ifndef FOLEX_RATIONAL_HPP
#define FOLEX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace folex {

// Exact arbitrary-precision rationals, always kept in lowest terms by GMP.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace folex

#endif
