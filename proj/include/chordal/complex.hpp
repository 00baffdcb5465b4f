#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "chordal/face.hpp"

namespace chordal {

// An abstract simplicial complex on a declared, ordered vertex list.  Only
// inclusion-maximal faces are stored; membership of any face is decided
// against the facet list.  The position of a label in `labels` is the vertex
// index used by every Face, and that order is the total vertex order fixing
// all orientation signs downstream.
//
// Invariants after construction:
//   - facets are pairwise incomparable, sorted by face_lex_less
//   - every facet is a subset of the declared label range
//   - a complex with no facets at all is the void complex (it has no faces,
//     not even the empty one); {()} is represented by the single facet ∅
//
// Derived complexes (induced, link, deletion, ...) keep the parent's label
// list and index space, so faces of related complexes can be compared
// directly.  A label that appears in no face is part of the ground set only.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets);

  SimplicialComplex(const SimplicialComplex& o)
      : labels_(o.labels_), facets_(o.facets_), dim_(o.dim_), support_(o.support_) {}
  SimplicialComplex& operator=(const SimplicialComplex& o) {
    labels_ = o.labels_;
    facets_ = o.facets_;
    dim_ = o.dim_;
    support_ = o.support_;
    std::lock_guard<std::mutex> lk(cache_mu_);
    faces_cache_.clear();
    return *this;
  }
  SimplicialComplex(SimplicialComplex&& o) noexcept
      : labels_(std::move(o.labels_)), facets_(std::move(o.facets_)), dim_(o.dim_), support_(o.support_) {}
  SimplicialComplex& operator=(SimplicialComplex&& o) noexcept {
    labels_ = std::move(o.labels_);
    facets_ = std::move(o.facets_);
    dim_ = o.dim_;
    support_ = o.support_;
    std::lock_guard<std::mutex> lk(cache_mu_);
    faces_cache_.clear();
    return *this;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  int n_labels() const { return static_cast<int>(labels_.size()); }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  // dimension; -1 for {()}, -2 for the void complex
  int dim() const { return dim_; }
  // union of all facets: the vertices that are actually 0-faces
  Face support() const { return support_; }
  int n_vertices() const { return support_.card(); }

  bool contains(Face f) const {
    if (f.empty()) return !is_void();
    for (const Face& g : facets_)
      if (g.contains(f)) return true;
    return false;
  }

  // All faces of the given dimension, sorted by face_lex_less.  k = -1 yields
  // {∅} for any nonvoid complex.  Results are memoised; the complex is
  // immutable so concurrent readers only race on the cache mutex.
  const std::vector<Face>& faces_of_dim(int k) const;

  // f-vector entry
  int face_count(int k) const { return static_cast<int>(faces_of_dim(k).size()); }

  std::string label_of(int v) const { return labels_.at(v); }
  std::optional<int> index_of_label(const std::string& s) const;
  std::string face_to_string(Face f) const;

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && facets_eq(o);
  }
  // facet sets equal, ignoring label lists (for derived complexes that share
  // an index space)
  bool facets_eq(const SimplicialComplex& o) const {
    if (facets_.size() != o.facets_.size()) return false;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (!(facets_[i] == o.facets_[i])) return false;
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  int dim_ = -2;
  Face support_;
  mutable std::mutex cache_mu_;
  mutable std::map<int, std::vector<Face>> faces_cache_;
};

// --- construction -----------------------------------------------------------

// Build from labelled facets.  Throws std::runtime_error on unknown labels,
// duplicate labels, more than 64 labels, or a duplicate vertex inside one
// facet line.  The facet list is reduced to maximal faces and sorted.
SimplicialComplex build_complex(const std::vector<std::string>& labels,
                                const std::vector<std::vector<std::string>>& facets);

// Same index space as `like`, facet list maximalised and sorted.
SimplicialComplex complex_from_faces(const SimplicialComplex& like, std::vector<Face> faces);

SimplicialComplex void_complex(std::vector<std::string> labels);

// --- elementary operations ---------------------------------------------------

// faces of dimension <= k
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

// induced subcomplex on a vertex set (bitmask over c's index space)
SimplicialComplex induced(const SimplicialComplex& c, Face vertex_set);
SimplicialComplex induced(const SimplicialComplex& c, const std::vector<std::string>& vertex_labels);

// all faces that do not contain sigma; sigma must be a nonempty face of c
SimplicialComplex delete_face(const SimplicialComplex& c, Face sigma);
SimplicialComplex delete_faces(const SimplicialComplex& c, const std::vector<Face>& sigmas);

// union of the closed facets containing sigma; sigma must be a face of c
SimplicialComplex star(const SimplicialComplex& c, Face sigma);

// Lk_sigma = { tau \ sigma : sigma ⊆ tau ∈ c }
SimplicialComplex link(const SimplicialComplex& c, Face sigma);

// eLk_sigma = St_sigma − sigma; equals ∂sigma * Lk_sigma as a face set
SimplicialComplex extended_link(const SimplicialComplex& c, Face sigma);

// join; label sets must be disjoint.  a's vertex order precedes b's.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// cone = join(apex point, c) with the apex appended after c's labels
SimplicialComplex cone(const std::string& apex_label, const SimplicialComplex& c);

// union / intersection of two complexes sharing one label list
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Cl_k c = { sigma ⊆ vertices : Sk_k(2^sigma) ⊆ c }
SimplicialComplex clique_complex(const SimplicialComplex& c, int k);

// minimal nonfaces, sorted by (cardinality, lex).  For the void complex this
// is {∅}; for a full simplex it is empty.  Ground-set-only labels appear as
// dimension-0 missing faces.
std::vector<Face> missing_faces(const SimplicialComplex& c);

enum class DualGround { declared, support };

// Alexander dual over the chosen ground set V: { F ⊆ V : V∖F ∉ c }.
SimplicialComplex alexander_dual(const SimplicialComplex& c, DualGround ground = DualGround::declared);

// Barycentric subdivision: one vertex per nonempty face (labelled by joining
// the original labels with '.'), facets = maximal chains.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

// --- relative complexes ------------------------------------------------------

// A pair (total, removed) with removed a subcomplex of total, sharing one
// label list.  Relative chains live on faces of total that are not in removed.
struct RelativeComplex {
  SimplicialComplex total;
  SimplicialComplex removed;

  RelativeComplex(SimplicialComplex t, SimplicialComplex r);

  // faces of `total` of dimension k that are not faces of `removed`
  std::vector<Face> rel_faces_of_dim(int k) const;
  bool in_removed(Face f) const { return removed.contains(f); }
  int dim() const { return total.dim(); }
};

// canonical encoding of the facet set, for memo keys and hashing
std::string canonical_key(const SimplicialComplex& c);

}  // namespace chordal
