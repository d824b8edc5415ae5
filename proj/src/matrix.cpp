#include "lieb/matrix.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <map>

namespace lieb {

namespace {

// Integer matrix obtained by clearing denominators column by column;
// col_scale[j] is the factor column j was multiplied by.
struct ScaledCopy {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> e;
  std::vector<mpz_class> col_scale;

  mpz_class& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return e[i * cols + j];
  }
};

ScaledCopy scale_to_integers(const RatMatrix& m) {
  ScaledCopy s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.e.resize(s.rows * s.cols);
  s.col_scale.assign(s.cols, mpz_class(1));
  for (std::size_t j = 0; j < s.cols; ++j) {
    mpz_class l(1);
    for (std::size_t i = 0; i < s.rows; ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m(i, j).denominator().get_mpz_t());
    s.col_scale[j] = l;
    for (std::size_t i = 0; i < s.rows; ++i) {
      const Rat& r = m(i, j);
      mpz_class f = l / r.denominator();
      s.at(i, j) = r.numerator() * f;
    }
  }
  return s;
}

// Fraction-free Bareiss elimination, in place.  Pivot selection scans rows
// from the top and takes the leftmost nonzero entry of the first eligible
// row, which makes every intermediate matrix reproducible.  Returns the
// pivot columns in pivot order; on return rows 0..r-1 form an echelon
// basis of the row space and rows r.. are zero.
std::vector<std::size_t> bareiss(ScaledCopy& s) {
  std::vector<bool> used(s.cols, false);
  std::vector<std::size_t> pivot_cols;
  mpz_class prev(1);
  std::size_t r = 0;
  while (r < s.rows) {
    std::size_t pr = s.rows, pc = s.cols;
    for (std::size_t i = r; i < s.rows && pr == s.rows; ++i) {
      for (std::size_t j = 0; j < s.cols; ++j) {
        if (used[j] || sgn(s.at(i, j)) == 0) continue;
        pr = i;
        pc = j;
        break;
      }
    }
    if (pr == s.rows) break;
    if (pr != r)
      for (std::size_t j = 0; j < s.cols; ++j)
        std::swap(s.at(pr, j), s.at(r, j));
    const mpz_class p = s.at(r, pc);
    for (std::size_t i = r + 1; i < s.rows; ++i) {
      mpz_class f = s.at(i, pc);
      for (std::size_t j = 0; j < s.cols; ++j) {
        if (used[j] || j == pc) continue;
        mpz_class v = s.at(i, j) * p - f * s.at(r, j);
        // exact by the Bareiss identity
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        s.at(i, j) = v;
      }
      s.at(i, pc) = 0;
    }
    used[pc] = true;
    pivot_cols.push_back(pc);
    prev = p;
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  ScaledCopy s = scale_to_integers(m);
  return bareiss(s).size();
}

std::vector<std::vector<Rat>> reduced_span(
    const std::vector<std::vector<Rat>>& rows_in) {
  std::vector<std::vector<Rat>> rows;
  std::size_t n = rows_in.empty() ? 0 : rows_in[0].size();
  for (const auto& row : rows_in) {
    if (row.size() != n) throw DimensionMismatchError("reduced_span");
    rows.push_back(row);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rat inv = Rat(1) / rows[r][c];
    for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  std::size_t n = m.cols();
  ScaledCopy s = scale_to_integers(m);
  std::vector<std::size_t> pivot_cols = bareiss(s);
  std::size_t r = pivot_cols.size();

  // Reduce the echelon rows over Q; their null space equals null(M * D)
  // with D = diag(col_scale) since Bareiss only performs row operations.
  std::vector<std::vector<Rat>> echelon(r, std::vector<Rat>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      echelon[i][j] = Rat(mpq_class(s.at(i, j)));
  std::vector<std::vector<Rat>> rref = reduced_span(echelon);

  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> lead(rref.size());
  for (std::size_t i = 0; i < rref.size(); ++i) {
    std::size_t c = 0;
    while (c < n && rref[i][c].is_zero()) ++c;
    lead[i] = c;
    is_pivot[c] = true;
  }

  std::vector<std::vector<Rat>> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n);
    v[f] = Rat(1);
    for (std::size_t i = 0; i < rref.size(); ++i) v[lead[i]] = -rref[i][f];
    // undo the column scaling: kernel(M) = D * kernel(M * D)
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) v[j] *= Rat(mpq_class(s.col_scale[j]));
    kernel.push_back(std::move(v));
  }
  return reduced_span(kernel);
}

bool column_span_contains(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatchError("column_span_contains");
  RatMatrix joint(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) joint(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      joint(i, a.cols() + j) = b(i, j);
  }
  return rank(joint) == rank(a);
}

std::size_t SparseRatMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& col : columns) n += col.size();
  return n;
}

bool SparseRatMatrix::is_zero() const { return nonzero_count() == 0; }

void SparseRatMatrix::add(std::size_t i, std::size_t j, const Rat& v) {
  if (!v.is_zero()) columns[j].emplace_back(i, v);
}

void SparseRatMatrix::finalize() {
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, Rat>> merged;
    for (auto& [row, val] : col) {
      if (!merged.empty() && merged.back().first == row)
        merged.back().second += val;
      else
        merged.emplace_back(row, val);
    }
    std::erase_if(merged, [](const auto& p) { return p.second.is_zero(); });
    col = std::move(merged);
  }
}

RatMatrix SparseRatMatrix::dense() const {
  RatMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) m(i, j) = v;
  return m;
}

std::vector<Rat> SparseRatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols)
    throw DimensionMismatchError("sparse matrix-vector product");
  std::vector<Rat> out(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, val] : columns[j]) out[i] += val * v[j];
  }
  return out;
}

SparseRatMatrix operator*(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  if (a.cols != b.rows)
    throw DimensionMismatchError("sparse matrix product");
  SparseRatMatrix c(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<std::size_t, Rat> acc;
    for (const auto& [k, bv] : b.columns[j])
      for (const auto& [i, av] : a.columns[k]) acc[i] += av * bv;
    for (auto& [i, v] : acc)
      if (!v.is_zero()) c.columns[j].emplace_back(i, v);
  }
  return c;
}

}  // namespace lieb
