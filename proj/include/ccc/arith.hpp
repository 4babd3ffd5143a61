#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ccc {

// Exact arithmetic used throughout. Closed forms are evaluated for
// parameters far past 64-bit range in scan mode.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(Int base, unsigned long exp) {
  Int r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

}  // namespace ccc
