#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcalc/rational.hpp"

namespace knotcalc {

class TruncSeries;

// Exact Laurent polynomial in q^{1/2} with rational coefficients.
//
// Exponents are stored doubled: a stored exponent k denotes q^{k/2}, so the
// half-integer powers arising in skein weights need no separate field.
// Terms are kept sorted by exponent with no zero coefficients, so equal
// polynomials have identical representations regardless of how they were
// built.
class HalfLaurent {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  HalfLaurent() = default;

  static HalfLaurent zero() { return HalfLaurent(); }
  static HalfLaurent one() { return monomial(0, Rational(1)); }
  static HalfLaurent constant(const Rational& c);
  // c * q^{k/2} (k is the doubled exponent).
  static HalfLaurent monomial(std::int64_t k, const Rational& c);
  // q^{e} for integer e, i.e. doubled exponent 2e.
  static HalfLaurent q_power(std::int64_t e) { return monomial(2 * e, Rational(1)); }
  // q^{k/2}.
  static HalfLaurent half_power(std::int64_t k) { return monomial(k, Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Nonzero monomial (a unit of the Laurent ring).
  bool is_monomial() const { return terms_.size() == 1; }

  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(std::int64_t k) const;
  std::int64_t min_exponent() const;  // requires nonzero
  std::int64_t max_exponent() const;  // requires nonzero

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

  bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const HalfLaurent& o) const { return !(*this == o); }

  HalfLaurent pow(unsigned e) const;

  // Mirror substitution q -> q^{-1}.
  HalfLaurent involute() const;

  // Value at q = 1 (the sum of all coefficients).
  Rational eval_one() const;

  // Substitute q = e^x and truncate at order N: q^{k/2} -> sum (k/2)^t x^t / t!.
  TruncSeries expand(int order) const;

  // Exact quotient, or nullopt if the division leaves a remainder.
  std::optional<HalfLaurent> divide_exact(const HalfLaurent& divisor) const;

  // Multiplicative inverse of a monomial; PreconditionError otherwise.
  HalfLaurent monomial_inverse() const;

  // Text form: terms by ascending exponent, `-q^-4 + q^-3 + 2*q^-1`,
  // half powers as `q^(3/2)`. parse() round-trips emit() bit-exactly.
  std::string to_text() const;
  static HalfLaurent parse(const std::string& text);

 private:
  void prune();  // drop zero coefficients
  std::vector<Term> terms_;
};

inline HalfLaurent hl_mul(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }
inline HalfLaurent hl_involute(const HalfLaurent& a) { return a.involute(); }
inline Rational hl_eval_one(const HalfLaurent& a) { return a.eval_one(); }

}  // namespace knotcalc
