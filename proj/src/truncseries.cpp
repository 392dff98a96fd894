#include "knotcalc/truncseries.hpp"

#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw PreconditionError("series order mismatch");
}
}  // namespace

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_order(*this, o);
  for (int t = 0; t <= order(); ++t) coeffs_[static_cast<std::size_t>(t)] += o.coeff(t);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_order(*this, o);
  for (int t = 0; t <= order(); ++t) coeffs_[static_cast<std::size_t>(t)] -= o.coeff(t);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  TruncSeries r(a.order());
  for (int t = 0; t <= a.order(); ++t) {
    Rational acc(0);
    for (int s = 0; s <= t; ++s) acc += a.coeff(s) * b.coeff(t - s);
    r.set_coeff(t, acc);
  }
  return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  if (b.coeff(0) == 0) throw PreconditionError("series division: divisor constant term is zero");
  TruncSeries q(a.order());
  for (int t = 0; t <= a.order(); ++t) {
    Rational acc = a.coeff(t);
    for (int s = 0; s < t; ++s) acc -= q.coeff(s) * b.coeff(t - s);
    q.set_coeff(t, acc / b.coeff(0));
  }
  return q;
}

int TruncSeries::lowest_nonzero() const {
  for (int t = 0; t <= order(); ++t)
    if (coeff(t) != 0) return t;
  return -1;
}

std::string TruncSeries::to_text() const {
  std::ostringstream os;
  for (int t = 0; t <= order(); ++t) {
    if (t) os << ' ';
    os << coeff(t);
  }
  return os.str();
}

}  // namespace knotcalc
