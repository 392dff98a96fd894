#include "knotcalc/rationalmatrix.hpp"

#include <algorithm>

#include "knotcalc/errors.hpp"

namespace knotcalc {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {
Integer pivot_weight(const Rational& x) {
  Integer w = numerator(x) * denominator(x);
  return w < 0 ? Integer(-w) : w;
}
}  // namespace

int RationalMatrix::rank() const {
  RationalMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int best = -1;
    Integer best_w;
    for (int r = rank; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      Integer w = pivot_weight(m.at(r, col));
      if (best < 0 || w < best_w) {
        best = r;
        best_w = w;
      }
    }
    if (best < 0) continue;
    if (best != rank)
      for (int c = col; c < cols_; ++c) std::swap(m.at(rank, c), m.at(best, c));
    const Rational pivot = m.at(rank, col);
    for (int r = rank + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col) / pivot;
      m.at(r, col) = 0;
      for (int c = col + 1; c < cols_; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

bool SparseEliminator::add_row(SparseRow row) {
  // Reduce against existing pivots, leftmost column first.
  while (!row.empty()) {
    const int col = row.front().first;
    const int p = pivot_for_col_[static_cast<std::size_t>(col)];
    if (p < 0) break;
    const Rational factor = row.front().second;
    const SparseRow& pivot = pivots_[static_cast<std::size_t>(p)];
    // row -= factor * pivot (merge of two sorted sparse rows).
    SparseRow merged;
    merged.reserve(row.size() + pivot.size());
    auto a = row.begin(), ae = row.end();
    auto b = pivot.begin(), be = pivot.end();
    while (a != ae && b != be) {
      if (a->first < b->first) {
        merged.push_back(*a++);
      } else if (b->first < a->first) {
        merged.emplace_back(b->first, -factor * b->second);
        ++b;
      } else {
        Rational c = a->second - factor * b->second;
        if (c != 0) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    merged.insert(merged.end(), a, ae);
    for (; b != be; ++b) merged.emplace_back(b->first, -factor * b->second);
    row = std::move(merged);
  }
  if (row.empty()) return false;
  // New pivot: normalize leading coefficient to 1.
  const Rational lead = row.front().second;
  if (lead != 1)
    for (auto& [c, v] : row) v /= lead;
  pivot_for_col_[static_cast<std::size_t>(row.front().first)] = static_cast<int>(pivots_.size());
  pivots_.push_back(std::move(row));
  return true;
}

}  // namespace knotcalc
