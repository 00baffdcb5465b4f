#pragma once

#include <optional>
#include <vector>

#include "chordal/field.hpp"

namespace chordal {

// Dense row-major matrix over a field.  Sizes here are small (hundreds at
// most); what matters is exactness and a deterministic elimination order:
// columns are processed left to right and the pivot is always the smallest
// usable row index, so ranks, kernels and solutions are reproducible.
template <class F>
struct Matrix {
  using Elem = typename F::Elem;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}
  Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

namespace detail {

// In-place forward elimination.  Returns the pivot columns; pivot_row_of[j]
// records which row holds the pivot of column j (-1 if none).  After the
// call, m is upper-triangular with respect to the pivot order.
template <class F>
std::vector<int> eliminate(const F& f, Matrix<F>& m, std::vector<int>* pivot_row_of = nullptr) {
  std::vector<int> pivot_cols;
  if (pivot_row_of) pivot_row_of->assign(m.cols, -1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i) {
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    const typename F::Elem pv = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      typename F::Elem factor = f.div(m.at(i, c), pv);
      m.at(i, c) = f.zero();
      for (int j = c + 1; j < m.cols; ++j) {
        if (f.is_zero(m.at(r, j))) continue;
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    if (pivot_row_of) (*pivot_row_of)[c] = r;
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace detail

template <class F>
int rank(const F& f, Matrix<F> m) {
  return static_cast<int>(detail::eliminate(f, m).size());
}

// Solve A x = b.  Free variables are set to zero, which makes the returned
// solution deterministic.  nullopt if the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, Matrix<F> A,
                                                   std::vector<typename F::Elem> b) {
  const int n = A.cols;
  Matrix<F> aug(f, A.rows, n + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivot_row_of;
  std::vector<int> pivots = detail::eliminate(f, aug, &pivot_row_of);
  // inconsistent iff the last column is a pivot column
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<typename F::Elem> x(n, f.zero());
  for (int pi = static_cast<int>(pivots.size()) - 1; pi >= 0; --pi) {
    int c = pivots[pi];
    int r = pivot_row_of[c];
    typename F::Elem acc = aug.at(r, n);
    for (int j = c + 1; j < n; ++j) {
      if (f.is_zero(x[j]) || f.is_zero(aug.at(r, j))) continue;
      acc = f.sub(acc, f.mul(aug.at(r, j), x[j]));
    }
    x[c] = f.div(acc, aug.at(r, c));
  }
  return x;
}

// Basis of the kernel of m, one vector per free column, ordered by the free
// column index.  The vector for free column c has x[c] = 1.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& f, Matrix<F> m) {
  const int n = m.cols;
  std::vector<int> pivot_row_of;
  std::vector<int> pivots = detail::eliminate(f, m, &pivot_row_of);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> x(n, f.zero());
    x[fc] = f.one();
    // back-substitute the pivot coordinates (pivots left of fc matter)
    for (int pi = static_cast<int>(pivots.size()) - 1; pi >= 0; --pi) {
      int c = pivots[pi];
      if (c > fc) continue;
      int r = pivot_row_of[c];
      typename F::Elem acc = f.zero();
      for (int j = c + 1; j <= fc; ++j) {
        if (f.is_zero(x[j]) || f.is_zero(m.at(r, j))) continue;
        acc = f.add(acc, f.mul(m.at(r, j), x[j]));
      }
      x[c] = f.neg(f.div(acc, m.at(r, c)));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// rank of [A | extra columns]; used for image-membership tests
template <class F>
int rank_augmented(const F& f, const Matrix<F>& A,
                   const std::vector<std::vector<typename F::Elem>>& extra) {
  Matrix<F> m(f, A.rows, A.cols + static_cast<int>(extra.size()));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
  for (std::size_t e = 0; e < extra.size(); ++e)
    for (int i = 0; i < A.rows; ++i) m.at(i, A.cols + static_cast<int>(e)) = extra[e][i];
  return rank(f, std::move(m));
}

// Whether every vector in vecs lies in the column span of A.  One elimination
// of [A | vecs]: the span contains them all iff no pivot lands in the
// appended columns (left-to-right pivoting prefers A's columns).
template <class F>
bool image_contains(const F& f, const Matrix<F>& A,
                    const std::vector<std::vector<typename F::Elem>>& vecs) {
  Matrix<F> m(f, A.rows, A.cols + static_cast<int>(vecs.size()));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
  for (std::size_t e = 0; e < vecs.size(); ++e)
    for (int i = 0; i < A.rows; ++i) m.at(i, A.cols + static_cast<int>(e)) = vecs[e][i];
  std::vector<int> pivots = detail::eliminate(f, m);
  return pivots.empty() || pivots.back() < A.cols;
}

}  // namespace chordal
