#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordal/homology.hpp"
#include "chordal/scan.hpp"

namespace chordal {

struct ChordalityWitness {
  std::uint64_t vertex_mask = 0;
  std::vector<std::string> vertices;
  std::string cycle;  // a k-cycle on Δ|_V with no resolution, one term per line
};

struct ChordalityVerdict {
  bool holds = true;
  std::string kind;  // "resolution" or "decomposition"
  int k = 0;
  FieldSpec field;
  // true when the complex has no k-cycles at all, which settles the question
  // without scanning subsets (every restriction cycle is a global cycle).
  bool fast_path = false;
  std::optional<ChordalityWitness> witness;
};

ChordalityVerdict is_resolution_chordal(const FieldSpec& fs, const SimplicialComplex& c, int k);
ChordalityVerdict is_resolution_chordal(const FieldSpec& fs, const RelativeComplex& pair, int k);
ChordalityVerdict is_decomposition_chordal(const FieldSpec& fs, const SimplicialComplex& c, int k);

// Least L with H~_d(Δ|_W) = 0 for all d ≥ L and all W.  Exact; requires either
// a feasible subset scan or a complex whose answer is forced structurally.
int leray_number(const FieldSpec& fs, const SimplicialComplex& c);

// Decide leray_number(c) ≤ k without insisting on a full scan: degrees d ≥ k
// with no global d-cycles cannot contribute.  nullopt when undecidable within
// the scan limit.
std::optional<bool> leray_at_most(const FieldSpec& fs, const SimplicialComplex& c, int k);

// Graded Betti numbers of the Stanley-Reisner ring over the declared vertex
// set, assembled from induced-subcomplex homology.
struct BettiTable {
  int n = 0;
  FieldSpec field;
  std::vector<std::vector<long long>> beta;  // beta[a][j]

  long long at(int a, int j) const {
    if (a < 0 || j < 0 || a >= static_cast<int>(beta.size())) return 0;
    if (j >= static_cast<int>(beta[a].size())) return 0;
    return beta[a][j];
  }
  int reg() const;
  int pdim() const;
  std::optional<int> t(int a) const;  // max j with beta[a][j] != 0
};

BettiTable betti_table(const FieldSpec& fs, const SimplicialComplex& c);
int regularity(const FieldSpec& fs, const SimplicialComplex& c);

enum class LinearResolution { yes, no, not_applicable };

struct LinearResolutionReport {
  LinearResolution verdict = LinearResolution::not_applicable;
  std::string reason;
  int generator_dim = -3;  // common missing-face dimension when applicable
  int reg = -1;
};

LinearResolutionReport has_linear_resolution(const FieldSpec& fs, const SimplicialComplex& c);

// Reisner's criterion: every link (including Lk_∅ = Δ) has vanishing reduced
// homology below its own dimension.
bool is_cohen_macaulay(const FieldSpec& fs, const SimplicialComplex& c);

struct PropagationReport {
  int k = 0;
  FieldSpec field;
  bool hyp_no_big_missing = false;   // no missing faces of dimension > k
  bool hyp_chordal = false;          // resolution l-chordal for l in [k, 2k-1]
  int hyp_fail_level = -1;
  bool concl_chordal = false;        // resolution l-chordal for l in [k, dim]
  int concl_fail_level = -1;
  bool concl_leray = false;          // leray_number <= k
  bool leray_decided = false;
  bool hs_checked = false;           // Herzog-Srinivasan t_a <= t_{a-1} + t_1
  bool hs_ok = false;
  std::vector<long long> t_values;   // t_a for a = 0..pdim (-1 when undefined)

  bool hypotheses() const { return hyp_no_big_missing && hyp_chordal; }
  bool conclusions() const { return concl_chordal && concl_leray && leray_decided; }
  bool respected() const { return !hypotheses() || conclusions(); }
};

PropagationReport check_propagation(const FieldSpec& fs, const SimplicialComplex& c, int k);

// ---- cycle-level operations -----------------------------------------------

// First kernel-basis k-cycle that does not bound, in the deterministic basis
// order; nullopt when H~_k = 0.
template <class F>
std::optional<Chain<F>> nonbounding_cycle(const F& f, const SimplicialComplex& c, int k) {
  std::vector<Face> rows = c.faces_of_dim(k - 1);
  std::vector<Face> cols = c.faces_of_dim(k);
  if (cols.empty()) return std::nullopt;
  Matrix<F> dk = boundary_matrix_between(f, rows, cols);
  auto cycles = kernel_basis(f, dk);
  if (cycles.empty()) return std::nullopt;
  Matrix<F> dk1 = boundary_matrix_between(f, cols, c.faces_of_dim(k + 1));
  int base = rank(f, dk1);
  for (const auto& v : cycles) {
    if (rank_augmented(f, dk1, {v}) > base) return chain_from_vector(f, cols, v, k);
  }
  return std::nullopt;
}

template <class F>
std::optional<Chain<F>> nonbounding_cycle(const F& f, const RelativeComplex& pair, int k) {
  std::vector<Face> rows = pair.rel_faces_of_dim(k - 1);
  std::vector<Face> cols = pair.rel_faces_of_dim(k);
  if (cols.empty()) return std::nullopt;
  Matrix<F> dk = boundary_matrix_between(f, rows, cols);
  auto cycles = kernel_basis(f, dk);
  if (cycles.empty()) return std::nullopt;
  Matrix<F> dk1 = boundary_matrix_between(f, cols, pair.rel_faces_of_dim(k + 1));
  int base = rank(f, dk1);
  for (const auto& v : cycles) {
    if (rank_augmented(f, dk1, {v}) > base) return chain_from_vector(f, cols, v, k);
  }
  return std::nullopt;
}

template <class F>
void require_cycle(const F& f, const SimplicialComplex& amb, const Chain<F>& z) {
  if (!boundary(f, amb, z).is_zero()) throw std::runtime_error("input chain is not a cycle");
}

// Resolution of z: a chain c with ∂c = z supported on (k+1)-faces whose
// vertices lie in z's support.  Then c^(0) = z^(0) automatically.
template <class F>
std::optional<Chain<F>> resolve_cycle(const F& f, const SimplicialComplex& amb,
                                      const Chain<F>& z) {
  require_cycle(f, amb, z);
  Face sup = z.vertex_support();
  std::vector<Face> allowed;
  for (const Face& g : amb.faces_of_dim(z.degree + 1))
    if (g.is_subset_of(sup)) allowed.push_back(g);
  return solve_boundary(f, amb, z, allowed);
}

template <class F>
std::optional<Chain<F>> resolve_cycle(const F& f, const RelativeComplex& pair,
                                      const Chain<F>& z) {
  if (!boundary(f, pair, z).is_zero()) throw std::runtime_error("input chain is not a cycle");
  Face sup = z.vertex_support();
  std::vector<Face> rows = pair.rel_faces_of_dim(z.degree);
  std::vector<Face> allowed;
  for (const Face& g : pair.rel_faces_of_dim(z.degree + 1))
    if (g.is_subset_of(sup)) allowed.push_back(g);
  Matrix<F> m = boundary_matrix_between(f, rows, allowed);
  auto x = solve(f, m, chain_to_vector(f, rows, z));
  if (!x) return std::nullopt;
  return chain_from_vector(f, allowed, *x, z.degree + 1);
}

template <class F>
struct CompleteCycleTerm {
  Face support;  // the (k+2) vertices spanning the complete cycle
  typename F::Elem coeff;
};

// Write z as a combination of complete k-cycles on (k+2)-subsets S of z's
// support with Sk_k(2^S) ⊆ Δ; solved over all eligible subsets at once.
template <class F>
std::optional<std::vector<CompleteCycleTerm<F>>> decompose_cycle(const F& f,
                                                                 const SimplicialComplex& amb,
                                                                 const Chain<F>& z) {
  require_cycle(f, amb, z);
  int k = z.degree;
  Face sup = z.vertex_support();
  std::vector<Face> subsets;
  subsets_of_card(sup, k + 2, subsets);
  std::vector<Face> eligible;
  for (const Face& s : subsets) {
    std::vector<Face> tops;
    subsets_of_card(s, k + 1, tops);
    bool ok = true;
    for (const Face& t : tops)
      if (!amb.contains(t)) {
        ok = false;
        break;
      }
    if (ok) eligible.push_back(s);
  }
  std::vector<Face> rows;
  for (const Face& g : amb.faces_of_dim(k))
    if (g.is_subset_of(sup)) rows.push_back(g);
  Matrix<F> m(f, rows.size(), eligible.size());
  for (std::size_t j = 0; j < eligible.size(); ++j) {
    Chain<F> cyc = complete_cycle(f, eligible[j]);
    for (const auto& [face, coeff] : cyc.terms) {
      int r = face_row_index(rows, face);
      if (r < 0) throw std::runtime_error("decompose: complete cycle face missing");
      m.at(r, j) = coeff;
    }
  }
  auto x = solve(f, m, chain_to_vector(f, rows, z));
  if (!x) return std::nullopt;
  std::vector<CompleteCycleTerm<F>> out;
  for (std::size_t j = 0; j < eligible.size(); ++j)
    if (!f.is_zero((*x)[j])) out.push_back({eligible[j], (*x)[j]});
  return out;
}

// ---- text-level wrappers for the CLI ----------------------------------------

struct ResolveOutcome {
  bool found = false;
  std::string chain;
};

struct DecomposeOutcome {
  bool found = false;
  std::vector<std::pair<std::vector<std::string>, std::string>> terms;  // (S, coeff)
};

ResolveOutcome resolve_cycle_text(const FieldSpec& fs, const SimplicialComplex& amb,
                                  const std::string& cycle_text);
DecomposeOutcome decompose_cycle_text(const FieldSpec& fs, const SimplicialComplex& amb,
                                      const std::string& cycle_text);

}  // namespace chordal
