#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace knotcalc {

// Arbitrary-precision rational, GMP-backed. All invariant values in this
// project are exact; there is no floating-point mode.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace knotcalc
