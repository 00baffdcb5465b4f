#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordal {

// A face is a set of vertex indices stored as bits of one 64-bit word, so a
// complex may have at most 64 declared vertices.  The empty face (no bits set)
// is a legitimate face of dimension -1.
struct Face {
  std::uint64_t bits = 0;

  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t b) : bits(b) {}

  static Face of(std::initializer_list<int> vs) {
    Face f;
    for (int v : vs) f.bits |= (std::uint64_t{1} << v);
    return f;
  }
  static Face of(const std::vector<int>& vs) {
    Face f;
    for (int v : vs) f.bits |= (std::uint64_t{1} << v);
    return f;
  }

  int card() const { return std::popcount(bits); }
  int dim() const { return card() - 1; }
  bool empty() const { return bits == 0; }

  bool has_vertex(int v) const { return (bits >> v) & 1; }
  bool contains(Face other) const { return (other.bits & ~bits) == 0; }
  bool is_subset_of(Face other) const { return (bits & ~other.bits) == 0; }

  Face unite(Face o) const { return Face{bits | o.bits}; }
  Face intersect(Face o) const { return Face{bits & o.bits}; }
  Face minus(Face o) const { return Face{bits & ~o.bits}; }
  Face without(int v) const { return Face{bits & ~(std::uint64_t{1} << v)}; }
  Face with(int v) const { return Face{bits | (std::uint64_t{1} << v)}; }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(card());
    std::uint64_t b = bits;
    while (b) {
      out.push_back(std::countr_zero(b));
      b &= b - 1;
    }
    return out;
  }

  bool operator==(const Face&) const = default;
};

// Total order used everywhere a deterministic face order is needed: compare
// the ascending vertex sequences lexicographically, shorter prefix first.
// {0,3} < {1,2} and {1} < {1,2} < {2}.
inline bool face_lex_less(Face a, Face b) {
  std::uint64_t x = a.bits, y = b.bits;
  while (x && y) {
    int va = std::countr_zero(x), vb = std::countr_zero(y);
    if (va != vb) return va < vb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

struct FaceLexLess {
  bool operator()(Face a, Face b) const { return face_lex_less(a, b); }
};

// Order by (cardinality, lex); used for witness minimality.
inline bool face_size_lex_less(Face a, Face b) {
  if (a.card() != b.card()) return a.card() < b.card();
  return face_lex_less(a, b);
}

struct FaceHash {
  std::size_t operator()(Face f) const {
    std::uint64_t x = f.bits;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

// Enumerate all subsets of f of the given cardinality, ascending combinations.
void subsets_of_card(Face f, int card, std::vector<Face>& out);

// Iterate sub-bitmasks of a mask (includes 0 and the mask itself).
template <class Fn>
void for_each_submask(std::uint64_t mask, Fn&& fn) {
  std::uint64_t sub = 0;
  while (true) {
    fn(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace chordal
