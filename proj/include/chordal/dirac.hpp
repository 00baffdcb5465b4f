#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/field.hpp"

namespace chordal {

// Γ_k: nodes are the k-faces, an edge joins two k-faces whose intersection is
// a (k-1)-face, and that intersection is the edge's label.
struct FaceAdjacencyGraph {
  int k = 0;
  std::vector<Face> nodes;
  struct Edge {
    int a = 0, b = 0;
    Face label;
  };
  std::vector<Edge> edges;
};

FaceAdjacencyGraph face_adjacency_graph(const SimplicialComplex& c, int k);

// Two readings of "the path intersects the cut": traversing an edge labeled by
// a cut member (edge_label, the default), or visiting a node that contains a
// cut member (face_containment).
enum class CutMode { edge_label, face_containment };

CutMode parse_cut_mode(const std::string& s);
std::string cut_mode_name(CutMode m);

struct CutReport {
  int k = 0;
  CutMode mode = CutMode::edge_label;
  std::vector<Face> cut;
  Face source, target;
  bool is_cut = false;
  bool minimality_checked = false;
  bool is_minimal = false;
  // Components generated by the k-faces reachable from the source/target side.
  std::optional<SimplicialComplex> comp_source, comp_target;
  bool homology_checked = false;
  bool hom_source = false, hom_target = false;
  bool two_sided() const { return homology_checked && hom_source && hom_target; }
};

CutReport is_cut(const SimplicialComplex& c, const std::vector<Face>& cut, Face sigma, Face tau,
                 int k, CutMode mode = CutMode::edge_label);

// Start from the (k-1)-subfaces of the k-faces around sigma and greedily drop
// removable members in lexicographic order; the result is inclusion-minimal.
CutReport minimal_cut(const SimplicialComplex& c, Face sigma, Face tau, int k,
                      CutMode mode = CutMode::edge_label);

// Homology flags: on each side L, every (k-1)-cycle z of the cut complex must
// bound a k-chain of L whose vertices meet the cut's vertex set inside z's
// support.  Decided by one image-membership test per vertex subset W of the
// cut's support, restricted to k-faces F of L with F ∩ C^(0) ⊆ W.
CutReport is_homology_cut(const FieldSpec& fs, const SimplicialComplex& c,
                          const std::vector<Face>& cut, Face sigma, Face tau, int k,
                          CutMode mode = CutMode::edge_label);

// Does some pair of k-faces witness the (k-1)-faces of eLk_sigma as a
// two-sided homology k-cut of Sk_k?  Only the two components matter, so one
// representative pair per component pair is checked.
std::optional<std::pair<Face, Face>> two_sided_elk_pair(const FieldSpec& fs,
                                                        const SimplicialComplex& c, Face sigma,
                                                        int k,
                                                        CutMode mode = CutMode::edge_label);

struct ExtendedLinkCut {
  Face sigma;
  CutReport report;
  bool constructive = false;  // found by the refinement argument, not the sweep
};

// Find a face sigma of dimension <= k-1 whose extended link's (k-1)-faces form
// a verified inclusion-minimal k-cut.  Tries the constructive refinement
// first (start from a (k-1)-face tau, pass to tau', sigma'), then falls back
// to sweeping all faces of dimension <= k-1.
ExtendedLinkCut find_extended_link_minimal_cut(const SimplicialComplex& c, int k,
                                               CutMode mode = CutMode::edge_label);

// True when Sk_k(c) equals the complete k-skeleton of the simplex on c's
// support (the base case of the Dirac recursion).
bool is_complete_skeleton(const SimplicialComplex& c, int k);

struct DiracCertificate {
  int k = 0;
  bool base = false;
  Face sigma;  // eliminated face when base is false
  std::shared_ptr<const DiracCertificate> rest;  // Δ − σ at level k
  std::shared_ptr<const DiracCertificate> elk;   // eLk_σΔ at level k − 1
};

enum class DiracStatus { certified, none, unknown };

struct DiracResult {
  DiracStatus status = DiracStatus::none;
  std::shared_ptr<const DiracCertificate> cert;
  std::uint64_t checks = 0;  // candidate eliminations examined
};

// Exhaustive memoized search.  `none` is a proof (the search space is finite);
// `unknown` only means the candidate budget ran out.
DiracResult is_k_dirac(const SimplicialComplex& c, int k, std::uint64_t budget = 1000000);

// Re-verify every base case, elimination step, and clique-complex equality of
// a certificate against the complex, without consulting the search.
bool replay_certificate(const SimplicialComplex& c, const DiracCertificate& cert);

struct ReversePropagationReport {
  int k = 0;
  FieldSpec field;
  bool hyp_decomposition_chordal = false;
  bool hyp_homology_cut = false;        // (b): two-sided homology k-cut of Sk_k
  std::optional<std::pair<Face, Face>> hyp_b_pair;
  bool hyp_upper_cut = false;           // (c): Sk_k(eLk) is a (k+1)-cut of Sk_{k+1}
  bool hyp_upper_vacuous = false;       // no (k+1)-faces at all
  std::optional<std::pair<Face, Face>> hyp_c_pair;
  bool conclusion = false;              // eLk_σΔ is decomposition (k-1)-chordal
  bool hypotheses() const {
    return hyp_decomposition_chordal && hyp_homology_cut && hyp_upper_cut;
  }
  bool respected() const { return !hypotheses() || conclusion; }
};

ReversePropagationReport check_reverse_propagation(const FieldSpec& fs,
                                                   const SimplicialComplex& c, Face sigma,
                                                   int k, CutMode mode = CutMode::edge_label);

}  // namespace chordal
