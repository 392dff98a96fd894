#pragma once

#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/halflaurent.hpp"

namespace knotcalc {

// Dense matrix over a commutative ring R. R must be default-constructible
// to its zero and support +, *, ==.
template <class R>
class RingMatrix {
 public:
  RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be positive");
  }

  static RingMatrix identity(int n, const R& one) {
    RingMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const R& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product: dimension mismatch");
    RingMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const R& aik = a.at(i, k);
        if (aik == R{}) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const R& bkj = b.at(k, j);
          if (bkj == R{}) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum: dimension mismatch");
    RingMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference: dimension mismatch");
    RingMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }

  R trace() const {
    if (rows_ != cols_) throw PreconditionError("trace of non-square matrix");
    R t{};
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool operator==(const RingMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }

 private:
  int rows_, cols_;
  std::vector<R> e_;
};

using PolyMatrix = RingMatrix<HalfLaurent>;

template <class R>
RingMatrix<R> mat_mul(const RingMatrix<R>& a, const RingMatrix<R>& b) {
  return a * b;
}

template <class R>
R mat_trace(const RingMatrix<R>& a) {
  return a.trace();
}

}  // namespace knotcalc
