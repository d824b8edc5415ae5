#ifndef LIEB_MATRIX_HPP
#define LIEB_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lieb/errors.hpp"
#include "lieb/rational.hpp"
#include "lieb/rational_function.hpp"

namespace lieb {

// Dense row-major matrix over an exact field (Rat or RatFunc).
template <typename T>
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t entry_count() const { return rows_ * cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const T& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatchError("matrix product");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) += aik * b(k, j);
      }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_)
      throw DimensionMismatchError("matrix-vector product");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RatMatrix = ExactMatrix<Rat>;
using FuncMatrix = ExactMatrix<RatFunc>;

// Rank by fraction-free Bareiss elimination on an integer-scaled copy.
// Deterministic pivoting: smallest eligible row index first, then the
// smallest column index holding a nonzero entry in that row's candidate
// set, so reruns produce identical intermediate matrices.
std::size_t rank(const RatMatrix& m);

// Basis of the right null space in normal form: each vector's leading
// (lowest-index) nonzero coordinate is 1, vectors are sorted by leading
// index, and every other vector is zero at someone's leading index.  The
// result depends only on the null space, not on elimination order.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

// Canonicalizes a spanning set: returns the reduced row echelon basis of
// the span of `rows`.  kernel_basis output equals
// reduced_span(any kernel spanning set).
std::vector<std::vector<Rat>> reduced_span(
    const std::vector<std::vector<Rat>>& rows);

// True when every column of b lies in the column span of a.
bool column_span_contains(const RatMatrix& a, const RatMatrix& b);

// Gauss-Jordan inverse over any exact field; throws SingularError.
template <typename T>
ExactMatrix<T> invert(const ExactMatrix<T>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("invert");
  std::size_t n = m.rows();
  ExactMatrix<T> a(m);
  ExactMatrix<T> inv = ExactMatrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularError();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    T d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      T f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Column-compressed sparse matrix over Rat; used to assemble coboundary
// operators whose dense form would breach the size guard.
struct SparseRatMatrix {
  std::size_t rows = 0, cols = 0;
  // per column: (row, value) sorted by row, values nonzero
  std::vector<std::vector<std::pair<std::size_t, Rat>>> columns;

  SparseRatMatrix() = default;
  SparseRatMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), columns(c) {}

  std::size_t entry_count() const { return rows * cols; }
  std::size_t nonzero_count() const;
  bool is_zero() const;
  void add(std::size_t i, std::size_t j, const Rat& v);  // accumulate
  void finalize();  // sort columns, drop zeros; call once after adds
  RatMatrix dense() const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  friend SparseRatMatrix operator*(const SparseRatMatrix& a,
                                   const SparseRatMatrix& b);
};

}  // namespace lieb

#endif
