#pragma once

#include <map>
#include <utility>
#include <vector>

#include "knotcalc/rational.hpp"

namespace knotcalc {

// Dense matrix over the rationals with exact Gaussian elimination.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  // Exact rank via Gaussian elimination. The pivot within a column is the
  // entry of smallest |numerator|*|denominator| (ties to the lowest row):
  // with exact arithmetic pivoting only affects term growth, and simple
  // entries keep it down.
  int rank() const;
  int nullity() const { return cols_ - rank(); }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

inline int nullity(const RationalMatrix& m) { return m.nullity(); }

// Incremental exact rank computation for large sparse systems. Rows are fed
// one at a time; each is reduced against the stored pivot rows and either
// absorbed as a new pivot or discarded as dependent. Arithmetic is exact
// rational throughout, so the final rank is representation-independent.
class SparseEliminator {
 public:
  using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

  explicit SparseEliminator(int cols) : cols_(cols), pivot_for_col_(static_cast<std::size_t>(cols), -1) {}

  // Returns true if the row was independent of the rows seen so far.
  bool add_row(SparseRow row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }
  int nullity() const { return cols_ - rank(); }

 private:
  int cols_;
  std::vector<SparseRow> pivots_;     // pivot coefficient normalized to 1
  std::vector<int> pivot_for_col_;    // column -> index into pivots_, or -1
};

}  // namespace knotcalc
