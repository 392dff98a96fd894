#include "knotcalc/halflaurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "knotcalc/errors.hpp"
#include "knotcalc/truncseries.hpp"

namespace knotcalc {

HalfLaurent HalfLaurent::constant(const Rational& c) { return monomial(0, c); }

HalfLaurent HalfLaurent::monomial(std::int64_t k, const Rational& c) {
  HalfLaurent p;
  if (c != 0) p.terms_.emplace_back(k, c);
  return p;
}

bool HalfLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Rational HalfLaurent::coeff(std::int64_t k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, std::int64_t key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return Rational(0);
}

std::int64_t HalfLaurent::min_exponent() const {
  if (terms_.empty()) throw PreconditionError("min_exponent of zero polynomial");
  return terms_.front().first;
}

std::int64_t HalfLaurent::max_exponent() const {
  if (terms_.empty()) throw PreconditionError("max_exponent of zero polynomial");
  return terms_.back().first;
}

void HalfLaurent::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      merged.push_back(*a++);
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, ae);
  merged.insert(merged.end(), b, be);
  terms_ = std::move(merged);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) { return *this += -o; }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // Schoolbook product; collect all cross terms, then combine equal exponents.
  std::vector<HalfLaurent::Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc.emplace_back(ta.first + tb.first, ta.second * tb.second);
  std::sort(acc.begin(), acc.end(),
            [](const HalfLaurent::Term& x, const HalfLaurent::Term& y) { return x.first < y.first; });
  for (auto& t : acc) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  r.prune();
  return r;
}

HalfLaurent HalfLaurent::pow(unsigned e) const {
  HalfLaurent r = one();
  HalfLaurent b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

HalfLaurent HalfLaurent::involute() const {
  HalfLaurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

Rational HalfLaurent::eval_one() const {
  Rational s(0);
  for (const auto& t : terms_) s += t.second;
  return s;
}

TruncSeries HalfLaurent::expand(int order) const {
  if (order < 0) throw PreconditionError("expand: negative order");
  TruncSeries s(order);
  for (const auto& [k, c] : terms_) {
    // q^{k/2} = e^{kx/2}: coefficient of x^t is (k/2)^t / t!.
    Rational half_k(k, 2);
    Rational power(1);     // (k/2)^t
    Rational factorial(1); // t!
    for (int t = 0; t <= order; ++t) {
      if (t > 0) {
        power *= half_k;
        factorial *= t;
      }
      s.set_coeff(t, s.coeff(t) + c * power / factorial);
    }
  }
  return s;
}

std::optional<HalfLaurent> HalfLaurent::divide_exact(const HalfLaurent& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("division by zero polynomial");
  HalfLaurent rem = *this;
  HalfLaurent quot;
  const std::int64_t dlo = divisor.min_exponent();
  const std::int64_t dspan = divisor.max_exponent() - dlo;
  // Cancel the remainder's lowest term each round; the span shrinks strictly.
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < dspan) return std::nullopt;
    HalfLaurent t = monomial(rem.min_exponent() - dlo, rem.terms_.front().second / divisor.terms_.front().second);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

HalfLaurent HalfLaurent::monomial_inverse() const {
  if (!is_monomial()) throw PreconditionError("monomial_inverse: not an invertible monomial");
  return monomial(-terms_[0].first, Rational(1) / terms_[0].second);
}

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

// q-part of one term: "" for exponent 0, "q" for q^1, "q^-4", "q^(3/2)".
std::string q_part(std::int64_t k) {
  if (k == 0) return "";
  if (k % 2 == 0) {
    std::int64_t e = k / 2;
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
  }
  return "q^(" + std::to_string(k) + "/2)";
}

}  // namespace

std::string HalfLaurent::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const std::string qp = q_part(k);
    if (qp.empty()) {
      os << rational_text(mag);
    } else if (mag == 1) {
      os << qp;
    } else {
      os << rational_text(mag) << '*' << qp;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
};

std::int64_t parse_int(Cursor& c) {
  bool neg = false;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
    neg = c.peek() == '-';
    ++c.i;
  }
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("polynomial: expected integer at position " + std::to_string(c.i));
  std::int64_t v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    ++c.i;
  }
  return neg ? -v : v;
}

Rational parse_unsigned_rational(Cursor& c) {
  Integer num = Integer(parse_int(c));
  if (!c.done() && c.peek() == '/') {
    ++c.i;
    Integer den = Integer(parse_int(c));
    if (den == 0) throw ParseError("polynomial: zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

// One term: [rational][*]["q"[^exp]] where exp is an integer or (odd/2).
HalfLaurent parse_term(Cursor& c, bool negate) {
  Rational coeff(1);
  bool saw_coeff = false;
  c.skip_ws();
  if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = parse_unsigned_rational(c);
    saw_coeff = true;
    if (!c.done() && c.peek() == '*') ++c.i;
  }
  std::int64_t k = 0;
  if (!c.done() && c.peek() == 'q') {
    ++c.i;
    k = 2;  // bare q
    if (!c.done() && c.peek() == '^') {
      ++c.i;
      if (!c.done() && c.peek() == '(') {
        ++c.i;
        std::int64_t kk = parse_int(c);
        if (c.done() || c.peek() != '/') throw ParseError("polynomial: malformed half exponent");
        ++c.i;
        std::int64_t two = parse_int(c);
        if (two != 2) throw ParseError("polynomial: half exponents must be halves");
        if (c.done() || c.peek() != ')') throw ParseError("polynomial: missing ')'");
        ++c.i;
        k = kk;
      } else {
        k = 2 * parse_int(c);
      }
    }
  } else if (!saw_coeff) {
    throw ParseError("polynomial: empty term at position " + std::to_string(c.i));
  }
  if (negate) coeff = -coeff;
  return HalfLaurent::monomial(k, coeff);
}

}  // namespace

HalfLaurent HalfLaurent::parse(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("polynomial: empty input");
  HalfLaurent result;
  bool negate = false;
  if (c.peek() == '-') {
    negate = true;
    ++c.i;
  }
  result += parse_term(c, negate);
  for (;;) {
    c.skip_ws();
    if (c.done()) break;
    char op = c.peek();
    if (op != '+' && op != '-') throw ParseError("polynomial: expected '+' or '-' at position " + std::to_string(c.i));
    ++c.i;
    c.skip_ws();
    result += parse_term(c, op == '-');
  }
  return result;
}

}  // namespace knotcalc
