#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "chordal/chain.hpp"
#include "chordal/complex.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

inline int face_row_index(const std::vector<Face>& sorted_faces, Face f) {
  auto it = std::lower_bound(sorted_faces.begin(), sorted_faces.end(), f, face_lex_less);
  if (it == sorted_faces.end() || !(*it == f)) return -1;
  return static_cast<int>(it - sorted_faces.begin());
}

// Matrix of ∂_k with rows indexed by the given (k-1)-faces and columns by the
// given k-faces, both in face_lex_less order.  Rows absent from `rows` are
// dropped, which is exactly the relative boundary.
template <class F>
Matrix<F> boundary_matrix_between(const F& f, const std::vector<Face>& rows,
                                  const std::vector<Face>& cols) {
  Matrix<F> m(f, rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Chain<F> b = boundary_of_face(f, cols[j]);
    for (const auto& [bf, bc] : b.terms) {
      int r = face_row_index(rows, bf);
      if (r >= 0) m.at(r, j) = bc;
    }
  }
  return m;
}

// ∂_k of the reduced chain complex: columns are the k-faces, rows the
// (k-1)-faces, with the empty face giving the augmentation row at k = 0.
template <class F>
Matrix<F> boundary_matrix(const F& f, const SimplicialComplex& c, int k) {
  return boundary_matrix_between(f, c.faces_of_dim(k - 1), c.faces_of_dim(k));
}

template <class F>
Matrix<F> boundary_matrix(const F& f, const RelativeComplex& pair, int k) {
  return boundary_matrix_between(f, pair.rel_faces_of_dim(k - 1), pair.rel_faces_of_dim(k));
}

// Reduced Betti numbers for degrees -1 .. dim, so out[k+1] = b~_k.  The void
// complex gives an empty vector; the complex {∅} gives {1} (b~_{-1} = 1).
template <class F>
std::vector<int> betti_all(const F& f, const SimplicialComplex& c) {
  std::vector<int> out;
  int d = c.dim();
  if (d < -1) return out;
  std::vector<int> fcount(d + 2), rk(d + 3, 0);
  for (int k = -1; k <= d; ++k) fcount[k + 1] = static_cast<int>(c.faces_of_dim(k).size());
  for (int k = 0; k <= d; ++k) rk[k + 1] = rank(f, boundary_matrix(f, c, k));
  for (int k = -1; k <= d; ++k) out.push_back(fcount[k + 1] - rk[k + 1] - rk[k + 2]);
  return out;
}

template <class F>
int betti(const F& f, const SimplicialComplex& c, int k) {
  if (k < -1 || k > c.dim()) return 0;
  int fcount = static_cast<int>(c.faces_of_dim(k).size());
  int rk = (k >= 0) ? rank(f, boundary_matrix(f, c, k)) : 0;
  int rk1 = (k + 1 <= c.dim()) ? rank(f, boundary_matrix(f, c, k + 1)) : 0;
  return fcount - rk - rk1;
}

template <class F>
int betti_rel(const F& f, const RelativeComplex& pair, int k) {
  if (k < -1 || k > pair.dim()) return 0;
  int fcount = static_cast<int>(pair.rel_faces_of_dim(k).size());
  if (fcount == 0) return 0;
  int rk = rank(f, boundary_matrix(f, pair, k));
  int rk1 = (k + 1 <= pair.dim()) ? rank(f, boundary_matrix(f, pair, k + 1)) : 0;
  return fcount - rk - rk1;
}

template <class F>
std::vector<typename F::Elem> chain_to_vector(const F& f, const std::vector<Face>& basis,
                                              const Chain<F>& c) {
  std::vector<typename F::Elem> v(basis.size(), f.zero());
  for (const auto& [face, coeff] : c.terms) {
    int r = face_row_index(basis, face);
    if (r < 0) throw std::runtime_error("chain_to_vector: face outside basis");
    v[r] = coeff;
  }
  return v;
}

template <class F>
Chain<F> chain_from_vector(const F& f, const std::vector<Face>& basis,
                           const std::vector<typename F::Elem>& v, int degree) {
  Chain<F> c;
  c.degree = degree;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!f.is_zero(v[i])) c.terms.emplace(basis[i], v[i]);
  return c;
}

// Find c with ∂c = z where c may use exactly the faces in `allowed`, all of
// dimension z.degree + 1.  Rows are the (z.degree)-faces of the ambient
// complex.  Returns nullopt when no such chain exists.
template <class F>
std::optional<Chain<F>> solve_boundary(const F& f, const SimplicialComplex& ambient,
                                       const Chain<F>& z, const std::vector<Face>& allowed) {
  std::vector<Face> rows = ambient.faces_of_dim(z.degree);
  Matrix<F> m = boundary_matrix_between(f, rows, allowed);
  auto x = solve(f, m, chain_to_vector(f, rows, z));
  if (!x) return std::nullopt;
  return chain_from_vector(f, allowed, *x, z.degree + 1);
}

template <class F>
std::optional<Chain<F>> solve_boundary(const F& f, const SimplicialComplex& ambient,
                                       const Chain<F>& z) {
  return solve_boundary(f, ambient, z, ambient.faces_of_dim(z.degree + 1));
}

// Relative variant: rows and columns are the relative faces, so boundary terms
// in the removed subcomplex are ignored on both sides.
template <class F>
std::optional<Chain<F>> solve_boundary(const F& f, const RelativeComplex& pair,
                                       const Chain<F>& z) {
  std::vector<Face> rows = pair.rel_faces_of_dim(z.degree);
  std::vector<Face> cols = pair.rel_faces_of_dim(z.degree + 1);
  Matrix<F> m = boundary_matrix_between(f, rows, cols);
  auto x = solve(f, m, chain_to_vector(f, rows, z));
  if (!x) return std::nullopt;
  return chain_from_vector(f, cols, *x, z.degree + 1);
}

}  // namespace chordal
