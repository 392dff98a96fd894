#pragma once

#include <string>
#include <vector>

#include "knotcalc/rational.hpp"

namespace knotcalc {

// Rational power series in x truncated at a fixed order N. Arithmetic is
// exact through order N; there is no rounding anywhere.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  TruncSeries(int order, const Rational& constant) : TruncSeries(order) { coeffs_[0] = constant; }

  static TruncSeries one(int order) { return TruncSeries(order, Rational(1)); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int t) const { return coeffs_.at(static_cast<std::size_t>(t)); }
  void set_coeff(int t, const Rational& c) { coeffs_.at(static_cast<std::size_t>(t)) = c; }

  bool is_zero() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // Division requires an invertible (nonzero) constant term in the divisor.
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

  bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  // Smallest t with nonzero coefficient, or -1 when identically zero
  // through the truncation order.
  int lowest_nonzero() const;

  std::string to_text() const;

 private:
  std::vector<Rational> coeffs_;  // coeffs_[t] is the coefficient of x^t
};

}  // namespace knotcalc
