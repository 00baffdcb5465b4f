#include "chordal/complex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace chordal {

void subsets_of_card(Face f, int card, std::vector<Face>& out) {
  if (card < 0) return;
  if (card == 0) {
    out.push_back(Face{});
    return;
  }
  std::vector<int> vs = f.vertices();
  int n = static_cast<int>(vs.size());
  if (card > n) return;
  // ascending combinations, which yields face_lex_less order directly
  std::vector<int> idx(card);
  for (int i = 0; i < card; ++i) idx[i] = i;
  while (true) {
    Face g;
    for (int i : idx) g = g.with(vs[i]);
    out.push_back(g);
    int i = card - 1;
    while (i >= 0 && idx[i] == n - card + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

std::vector<Face> maximalize(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(),
            [](Face a, Face b) { return a.card() > b.card(); });
  std::vector<Face> out;
  for (Face f : faces) {
    bool dominated = false;
    for (Face g : out) {
      if (g.contains(f)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), FaceLexLess{});
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {
  if (labels_.size() > 64) throw std::runtime_error("complex: more than 64 vertices");
  facets_ = maximalize(std::move(facets_));
  dim_ = facets_.empty() ? -2 : -1;
  for (Face f : facets_) {
    dim_ = std::max(dim_, f.dim());
    support_ = support_.unite(f);
    if (f.card() > 0) {
      int top = 63 - std::countl_zero(f.bits);
      if (top >= static_cast<int>(labels_.size()))
        throw std::runtime_error("complex: facet vertex outside label range");
    }
  }
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int k) const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  auto it = faces_cache_.find(k);
  if (it != faces_cache_.end()) return it->second;
  std::vector<Face> out;
  if (k < -1 || is_void() || k > dim_) {
    // empty
  } else if (k == -1) {
    out.push_back(Face{});
  } else {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Face> scratch;
    for (Face f : facets_) {
      if (f.dim() < k) continue;
      scratch.clear();
      subsets_of_card(f, k + 1, scratch);
      for (Face g : scratch)
        if (seen.insert(g.bits).second) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), FaceLexLess{});
  }
  auto [pos, ok] = faces_cache_.emplace(k, std::move(out));
  (void)ok;
  return pos->second;
}

std::optional<int> SimplicialComplex::index_of_label(const std::string& s) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == s) return static_cast<int>(i);
  return std::nullopt;
}

std::string SimplicialComplex::face_to_string(Face f) const {
  if (f.empty()) return "()";
  std::string out;
  for (int v : f.vertices()) {
    if (!out.empty()) out += ' ';
    out += labels_.at(v);
  }
  return out;
}

SimplicialComplex build_complex(const std::vector<std::string>& labels,
                                const std::vector<std::vector<std::string>>& facets) {
  if (labels.size() > 64) throw std::runtime_error("build_complex: more than 64 vertices");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw std::runtime_error("build_complex: empty label");
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      throw std::runtime_error("build_complex: duplicate label '" + labels[i] + "'");
  }
  std::vector<Face> fs;
  fs.reserve(facets.size());
  for (const auto& line : facets) {
    Face f;
    for (const auto& s : line) {
      auto it = index.find(s);
      if (it == index.end()) throw std::runtime_error("build_complex: unknown label '" + s + "'");
      if (f.has_vertex(it->second))
        throw std::runtime_error("build_complex: repeated vertex '" + s + "' in facet");
      f = f.with(it->second);
    }
    fs.push_back(f);
  }
  return SimplicialComplex(labels, std::move(fs));
}

SimplicialComplex complex_from_faces(const SimplicialComplex& like, std::vector<Face> faces) {
  return SimplicialComplex(like.labels(), std::move(faces));
}

SimplicialComplex void_complex(std::vector<std::string> labels) {
  return SimplicialComplex(std::move(labels), {});
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (c.is_void()) return c;
  if (k >= c.dim()) return c;
  if (k < -1) return void_complex(c.labels());
  std::vector<Face> faces = c.faces_of_dim(k);
  for (Face f : c.facets())
    if (f.dim() < k) faces.push_back(f);
  if (k == -1) faces.push_back(Face{});
  return complex_from_faces(c, std::move(faces));
}

SimplicialComplex induced(const SimplicialComplex& c, Face vertex_set) {
  if (c.is_void()) return c;
  std::vector<Face> faces;
  faces.reserve(c.facets().size());
  for (Face f : c.facets()) faces.push_back(f.intersect(vertex_set));
  return complex_from_faces(c, std::move(faces));
}

SimplicialComplex induced(const SimplicialComplex& c, const std::vector<std::string>& vertex_labels) {
  Face v;
  for (const auto& s : vertex_labels) {
    auto idx = c.index_of_label(s);
    if (!idx) throw std::runtime_error("induced: unknown label '" + s + "'");
    v = v.with(*idx);
  }
  return induced(c, v);
}

SimplicialComplex delete_face(const SimplicialComplex& c, Face sigma) {
  if (!c.contains(sigma)) throw std::runtime_error("delete_face: not a face");
  if (sigma.empty()) return void_complex(c.labels());
  std::vector<Face> faces;
  for (Face f : c.facets()) {
    if (!f.contains(sigma)) {
      faces.push_back(f);
    } else {
      for (int v : sigma.vertices()) faces.push_back(f.without(v));
    }
  }
  return complex_from_faces(c, std::move(faces));
}

SimplicialComplex delete_faces(const SimplicialComplex& c, const std::vector<Face>& sigmas) {
  SimplicialComplex out = c;
  for (Face s : sigmas) {
    if (out.contains(s)) out = delete_face(out, s);
  }
  return out;
}

SimplicialComplex star(const SimplicialComplex& c, Face sigma) {
  if (!c.contains(sigma)) throw std::runtime_error("star: not a face");
  std::vector<Face> faces;
  for (Face f : c.facets())
    if (f.contains(sigma)) faces.push_back(f);
  return complex_from_faces(c, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& c, Face sigma) {
  if (!c.contains(sigma)) throw std::runtime_error("link: not a face");
  std::vector<Face> faces;
  for (Face f : c.facets())
    if (f.contains(sigma)) faces.push_back(f.minus(sigma));
  if (faces.empty()) faces.push_back(Face{});  // sigma itself maximal -> link {()}
  return complex_from_faces(c, std::move(faces));
}

SimplicialComplex extended_link(const SimplicialComplex& c, Face sigma) {
  return delete_face(star(c, sigma), sigma);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& s : b.labels()) {
    for (const auto& t : a.labels())
      if (s == t) throw std::runtime_error("join: label sets overlap at '" + s + "'");
    labels.push_back(s);
  }
  int shift = a.n_labels();
  std::vector<Face> faces;
  for (Face fa : a.facets())
    for (Face fb : b.facets())
      faces.push_back(Face{fa.bits | (fb.bits << shift)});
  return SimplicialComplex(std::move(labels), std::move(faces));
}

SimplicialComplex cone(const std::string& apex_label, const SimplicialComplex& c) {
  SimplicialComplex apex({apex_label}, {Face{1}});
  return join(c, apex);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.labels() != b.labels()) throw std::runtime_error("complex_union: label lists differ");
  std::vector<Face> faces = a.facets();
  for (Face f : b.facets()) faces.push_back(f);
  return complex_from_faces(a, std::move(faces));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.labels() != b.labels()) throw std::runtime_error("complex_intersection: label lists differ");
  if (a.is_void() || b.is_void()) return void_complex(a.labels());
  std::vector<Face> faces;
  for (Face fa : a.facets())
    for (Face fb : b.facets()) faces.push_back(fa.intersect(fb));
  return complex_from_faces(a, std::move(faces));
}

namespace {

// Enumerate the maximal members of { sigma : Sk_k(2^sigma) ⊆ c }, k >= 1.
// The family is downward closed, so a Bron-Kerbosch style expansion with an
// exclusion set yields exactly the maximal ones.
void clique_extend(const SimplicialComplex& c, int k, Face r, std::vector<int> cand,
                   std::vector<int> excl, std::vector<Face>& out) {
  auto admits = [&](Face base, int v) {
    // all (k+1)-subsets of base+v that contain v must be faces
    Face ext = base.with(v);
    std::vector<Face> subs;
    subsets_of_card(base, k, subs);
    for (Face s : subs)
      if (!c.contains(s.with(v))) return false;
    // smaller subsets are covered inductively; ext itself when |ext| <= k+1
    if (ext.card() <= k + 1 && !c.contains(ext)) return false;
    return true;
  };
  if (cand.empty() && excl.empty()) {
    out.push_back(r);
    return;
  }
  std::vector<int> cand_left = cand;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    int v = cand[i];
    Face r2 = r.with(v);
    std::vector<int> cand2, excl2;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (admits(r2, cand[j])) cand2.push_back(cand[j]);
    for (int u : excl)
      if (admits(r2, u)) excl2.push_back(u);
    for (std::size_t j = 0; j < i; ++j)
      if (admits(r2, cand[j])) excl2.push_back(cand[j]);
    clique_extend(c, k, r2, std::move(cand2), std::move(excl2), out);
  }
  (void)cand_left;
}

}  // namespace

SimplicialComplex clique_complex(const SimplicialComplex& c, int k) {
  if (k < 0) throw std::runtime_error("clique_complex: k must be >= 0");
  if (c.is_void()) return c;
  std::vector<int> verts = c.support().vertices();
  if (k == 0) {
    // Sk_0(2^sigma) ⊆ c for any sigma made of vertices of c
    std::vector<Face> fs = {c.support()};
    if (fs[0].empty()) fs = {Face{}};
    return complex_from_faces(c, std::move(fs));
  }
  std::vector<Face> out;
  clique_extend(c, k, Face{}, verts, {}, out);
  if (out.empty()) out.push_back(Face{});
  return complex_from_faces(c, std::move(out));
}

std::vector<Face> missing_faces(const SimplicialComplex& c) {
  std::vector<Face> out;
  if (c.is_void()) {
    out.push_back(Face{});
    return out;
  }
  // dimension 0: declared labels that are not vertices
  for (int v = 0; v < c.n_labels(); ++v)
    if (!c.support().has_vertex(v)) out.push_back(Face{}.with(v));
  // dimension d >= 1: sigma = g + v with g a (d-1)-face, all facets of sigma faces
  for (int d = 1; d <= c.dim() + 1; ++d) {
    std::unordered_set<std::uint64_t> seen;
    for (Face g : c.faces_of_dim(d - 1)) {
      for (int v : c.support().vertices()) {
        if (g.has_vertex(v)) continue;
        Face sigma = g.with(v);
        if (!seen.insert(sigma.bits).second) continue;
        if (c.contains(sigma)) continue;
        bool all_facets_in = true;
        for (int u : sigma.vertices()) {
          if (!c.contains(sigma.without(u))) {
            all_facets_in = false;
            break;
          }
        }
        if (all_facets_in) out.push_back(sigma);
      }
    }
  }
  std::sort(out.begin(), out.end(), face_size_lex_less);
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c, DualGround ground) {
  Face v;
  if (ground == DualGround::declared) {
    for (int i = 0; i < c.n_labels(); ++i) v = v.with(i);
  } else {
    v = c.support();
  }
  // facets of the dual = complements (in V) of the minimal nonfaces
  std::vector<Face> duals;
  for (Face m : missing_faces(c)) {
    if (!m.is_subset_of(v)) continue;  // nonface outside the ground set: irrelevant
    duals.push_back(v.minus(m));
  }
  return complex_from_faces(c, std::move(duals));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
  if (c.is_void()) return void_complex({});
  // vertex per nonempty face, ordered by (dim, lex)
  std::vector<Face> all;
  for (int d = 0; d <= c.dim(); ++d)
    for (Face f : c.faces_of_dim(d)) all.push_back(f);
  if (all.size() > 64) throw std::runtime_error("barycentric_subdivision: more than 64 faces");
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[all[i].bits] = static_cast<int>(i);
    std::string lab;
    for (int v : all[i].vertices()) {
      if (!lab.empty()) lab += '.';
      lab += c.label_of(v);
    }
    labels.push_back(lab);
  }
  // maximal chains: per facet, one chain per permutation of its vertices
  std::vector<Face> chains;
  for (Face f : c.facets()) {
    std::vector<int> vs = f.vertices();
    std::sort(vs.begin(), vs.end());
    do {
      Face chain;
      Face prefix;
      for (int v : vs) {
        prefix = prefix.with(v);
        chain = chain.with(index.at(prefix.bits));
      }
      chains.push_back(chain);
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return SimplicialComplex(std::move(labels), std::move(chains));
}

RelativeComplex::RelativeComplex(SimplicialComplex t, SimplicialComplex r)
    : total(std::move(t)), removed(std::move(r)) {
  if (total.labels() != removed.labels())
    throw std::runtime_error("relative complex: label lists differ");
  for (Face f : removed.facets())
    if (!total.contains(f)) throw std::runtime_error("relative complex: removed is not a subcomplex");
}

std::vector<Face> RelativeComplex::rel_faces_of_dim(int k) const {
  std::vector<Face> out;
  for (Face f : total.faces_of_dim(k))
    if (!removed.contains(f)) out.push_back(f);
  return out;
}

std::string canonical_key(const SimplicialComplex& c) {
  std::ostringstream os;
  os << c.n_labels() << ';';
  for (Face f : c.facets()) os << f.bits << ',';
  return os.str();
}

}  // namespace chordal
