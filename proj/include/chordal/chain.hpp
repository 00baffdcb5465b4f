#pragma once

#include <bit>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/field.hpp"

namespace chordal {

// sgn(tau, sigma) for tau ⊆ sigma: the sign of the permutation taking the
// ascending order of sigma to the concatenation (tau, sigma∖tau), i.e. the
// parity of #{ (t,s) : t ∈ tau, s ∈ sigma∖tau, s < t }.
inline int sgn(Face tau, Face sigma) {
  if (!sigma.contains(tau)) throw std::runtime_error("sgn: tau is not a subface of sigma");
  std::uint64_t rest = sigma.bits & ~tau.bits;
  int inversions = 0;
  std::uint64_t t = tau.bits;
  while (t) {
    int v = std::countr_zero(t);
    inversions += std::popcount(rest & ((std::uint64_t{1} << v) - 1));
    t &= t - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

// A formal linear combination of faces of one dimension.  Terms are kept in
// face_lex_less order and never store a zero coefficient.
template <class F>
struct Chain {
  using Elem = typename F::Elem;
  int degree = 0;
  std::map<Face, Elem, FaceLexLess> terms;

  bool is_zero() const { return terms.empty(); }
  Face vertex_support() const {
    Face s;
    for (const auto& [f, c] : terms) s = s.unite(f);
    return s;
  }
  std::vector<Face> faces() const {
    std::vector<Face> out;
    out.reserve(terms.size());
    for (const auto& [f, c] : terms) out.push_back(f);
    return out;
  }
};

template <class F>
void chain_add_term(const F& f, Chain<F>& c, Face face, typename F::Elem coeff) {
  if (f.is_zero(coeff)) return;
  auto it = c.terms.find(face);
  if (it == c.terms.end()) {
    c.terms.emplace(face, std::move(coeff));
  } else {
    it->second = f.add(it->second, coeff);
    if (f.is_zero(it->second)) c.terms.erase(it);
  }
}

template <class F>
Chain<F> chain_scale(const F& f, const Chain<F>& c, const typename F::Elem& s) {
  Chain<F> out;
  out.degree = c.degree;
  if (f.is_zero(s)) return out;
  for (const auto& [face, coeff] : c.terms) out.terms.emplace(face, f.mul(coeff, s));
  return out;
}

template <class F>
Chain<F> chain_sum(const F& f, const Chain<F>& a, const Chain<F>& b) {
  Chain<F> out = a;
  for (const auto& [face, coeff] : b.terms) chain_add_term(f, out, face, coeff);
  return out;
}

template <class F>
bool chain_eq(const F& f, const Chain<F>& a, const Chain<F>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  for (; ia != a.terms.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !f.eq(ia->second, ib->second)) return false;
  }
  return true;
}

// Boundary of a single oriented face: ∂sigma = Σ_v sgn(sigma∖v, sigma)·(sigma∖v).
// With the inversion-count sign this is the usual alternating sum over the
// ascending vertex order; ∂(vertex) = +∅ (reduced complex).
template <class F>
Chain<F> boundary_of_face(const F& f, Face sigma) {
  Chain<F> out;
  out.degree = sigma.dim() - 1;
  int i = 0;
  for (int v : sigma.vertices()) {
    typename F::Elem c = (i % 2 == 0) ? f.one() : f.neg(f.one());
    chain_add_term(f, out, sigma.without(v), std::move(c));
    ++i;
  }
  return out;
}

// Boundary of a chain over the given complex.  Every face of c must be a face
// of the complex.  For a relative complex the terms landing in `removed` are
// dropped.
template <class F>
Chain<F> boundary(const F& f, const SimplicialComplex& ambient, const Chain<F>& c) {
  Chain<F> out;
  out.degree = c.degree - 1;
  for (const auto& [face, coeff] : c.terms) {
    if (!ambient.contains(face)) throw std::runtime_error("boundary: chain face not in complex");
    Chain<F> b = boundary_of_face(f, face);
    for (const auto& [bf, bc] : b.terms) chain_add_term(f, out, bf, f.mul(coeff, bc));
  }
  return out;
}

template <class F>
Chain<F> boundary(const F& f, const RelativeComplex& pair, const Chain<F>& c) {
  Chain<F> out;
  out.degree = c.degree - 1;
  for (const auto& [face, coeff] : c.terms) {
    if (!pair.total.contains(face) || pair.in_removed(face))
      throw std::runtime_error("boundary: chain face not in the relative complex");
    Chain<F> b = boundary_of_face(f, face);
    for (const auto& [bf, bc] : b.terms) {
      if (pair.in_removed(bf)) continue;
      chain_add_term(f, out, bf, f.mul(coeff, bc));
    }
  }
  return out;
}

// The complete k-cycle on a (k+2)-subset S: the boundary of the simplex on S.
template <class F>
Chain<F> complete_cycle(const F& f, Face s) {
  if (s.card() < 2) throw std::runtime_error("complete_cycle: need at least 2 vertices");
  Chain<F> z = boundary_of_face(f, s);
  z.degree = s.card() - 2;
  return z;
}

// Join of chains.  Faces must come from complexes whose vertex orders are
// already concatenated (every vertex of a's faces precedes b's), so the
// orientation of sigma∪tau is the concatenated one and no sign is needed.
template <class F>
Chain<F> chain_join(const F& f, const Chain<F>& a, const Chain<F>& b) {
  Chain<F> out;
  out.degree = a.degree + b.degree + 1;
  for (const auto& [fa, ca] : a.terms)
    for (const auto& [fb, cb] : b.terms) {
      if (fa.bits & fb.bits) throw std::runtime_error("chain_join: overlapping faces");
      chain_add_term(f, out, fa.unite(fb), f.mul(ca, cb));
    }
  return out;
}

// Link map along a vertex: lk_v(c) = Σ_{sigma ∋ v} g_sigma · sgn(v, sigma) · (sigma∖v),
// a (k-1)-chain of Lk_v.  It anticommutes with the boundary: lk_v∂ = −∂lk_v.
template <class F>
Chain<F> link_map(const F& f, const Chain<F>& c, int v) {
  Chain<F> out;
  out.degree = c.degree - 1;
  Face vf = Face{}.with(v);
  for (const auto& [face, coeff] : c.terms) {
    if (!face.has_vertex(v)) continue;
    int s = sgn(vf, face);
    chain_add_term(f, out, face.without(v), s > 0 ? coeff : f.neg(coeff));
  }
  return out;
}

// Extended link map along a face tau:
//   lk_tau(c) = Σ_{sigma ⊇ tau} g_sigma · sgn(tau, sigma) · ∂tau * (sigma∖tau),
// a chain of eLk_tau of the same degree as c minus 1.
template <class F>
Chain<F> extended_link_map(const F& f, const Chain<F>& c, Face tau) {
  Chain<F> out;
  out.degree = c.degree - 1;
  for (const auto& [face, coeff] : c.terms) {
    if (!face.contains(tau)) continue;
    int s = sgn(tau, face);
    Chain<F> dt = boundary_of_face(f, tau);
    for (const auto& [tf, tc] : dt.terms) {
      typename F::Elem e = f.mul(coeff, tc);
      chain_add_term(f, out, tf.unite(face.minus(tau)), s > 0 ? e : f.neg(e));
    }
  }
  return out;
}

// --- text form ----------------------------------------------------------------
// One term per line: "<coeff> : v1 v2 ... vk".  Rationals as p/q.

template <class F>
std::string format_chain(const F& f, const SimplicialComplex& ambient, const Chain<F>& c) {
  std::ostringstream os;
  for (const auto& [face, coeff] : c.terms)
    os << f.str(coeff) << " : " << ambient.face_to_string(face) << "\n";
  return os.str();
}

// Parse one term line; returns false for blank/comment lines.
template <class F>
bool parse_chain_line(const F& f, const SimplicialComplex& ambient, const std::string& line,
                      Face& face_out, typename F::Elem& coeff_out) {
  std::string stripped = line.substr(0, line.find('#'));
  if (stripped.find_first_not_of(" \t\r\n") == std::string::npos) return false;
  auto colon = stripped.find(':');
  if (colon == std::string::npos) throw std::runtime_error("chain: missing ':' in line '" + line + "'");
  std::istringstream head(stripped.substr(0, colon));
  std::string ctext;
  head >> ctext;
  std::string trailing;
  if (head >> trailing) throw std::runtime_error("chain: bad coefficient in '" + line + "'");
  auto coeff = f.parse(ctext);
  if (!coeff) throw std::runtime_error("chain: bad coefficient '" + ctext + "'");
  std::istringstream tail(stripped.substr(colon + 1));
  Face face;
  std::string lab;
  while (tail >> lab) {
    auto idx = ambient.index_of_label(lab);
    if (!idx) throw std::runtime_error("chain: unknown vertex '" + lab + "'");
    if (face.has_vertex(*idx)) throw std::runtime_error("chain: repeated vertex '" + lab + "'");
    face = face.with(*idx);
  }
  face_out = face;
  coeff_out = *coeff;
  return true;
}

// Parse a whole chain; all faces must be faces of the ambient complex and of
// equal dimension.
template <class F>
Chain<F> parse_chain(const F& f, const SimplicialComplex& ambient, const std::string& text) {
  Chain<F> out;
  int degree = INT_MIN;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    Face face;
    typename F::Elem coeff = f.zero();
    if (!parse_chain_line(f, ambient, line, face, coeff)) continue;
    if (!ambient.contains(face))
      throw std::runtime_error("chain: '" + ambient.face_to_string(face) + "' is not a face");
    if (degree == INT_MIN)
      degree = face.dim();
    else if (face.dim() != degree)
      throw std::runtime_error("chain: mixed dimensions");
    chain_add_term(f, out, face, std::move(coeff));
  }
  if (degree == INT_MIN) throw std::runtime_error("chain: no terms");
  out.degree = degree;
  return out;
}

}  // namespace chordal
