#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chordal/chain.hpp"
#include "chordal/complex.hpp"
#include "chordal/corpus.hpp"
#include "chordal/field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordal;

namespace {

// random chain of the given degree in a complex, drawn from its face list
template <class F>
Chain<F> random_chain(const F& f, const SimplicialComplex& c, int degree, std::mt19937_64& rng) {
  Chain<F> out;
  out.degree = degree;
  const std::vector<Face>& faces = c.faces_of_dim(degree);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (Face face : faces) {
    if ((rng() & 3) == 0) continue;  // keep roughly three quarters of the faces
    chain_add_term(f, out, face, f.from_long(coeff(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("sgn matches a brute-force inversion count") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 2000; ++it) {
    std::uint64_t sigma = rng() & 0xfffULL;
    std::uint64_t tau = rng() & sigma;
    CHECK(sgn(Face{tau}, Face{sigma}) == oracles::sgn_reference(Face{tau}, Face{sigma}));
  }
  CHECK(sgn(Face{}, Face::of({0, 1})) == 1);
  CHECK(sgn(Face::of({1}), Face::of({0, 1})) == -1);
  CHECK_THROWS(sgn(Face::of({5}), Face::of({0, 1})));
}

TEST_CASE("boundary of a single face") {
  RationalField q;
  Chain<RationalField> b = boundary_of_face(q, Face::of({0, 1, 2}));
  CHECK(b.degree == 1);
  REQUIRE(b.terms.size() == 3);
  CHECK(q.eq(b.terms.at(Face::of({1, 2})), q.one()));
  CHECK(q.eq(b.terms.at(Face::of({0, 2})), q.neg(q.one())));
  CHECK(q.eq(b.terms.at(Face::of({0, 1})), q.one()));

  Chain<RationalField> v = boundary_of_face(q, Face::of({3}));
  CHECK(v.degree == -1);
  REQUIRE(v.terms.size() == 1);
  CHECK(q.eq(v.terms.at(Face{}), q.one()));
}

TEST_CASE("boundary of a boundary vanishes") {
  SimplicialComplex s = make_simplex(8);
  RationalField q;
  PrimeField f2(2), f3(3);
  std::mt19937_64 r1(11), r2(12), r3(13);
  for (int it = 0; it < 30; ++it) {
    Chain<RationalField> zq = random_chain(q, s, 3, r1);
    CHECK(boundary(q, s, boundary(q, s, zq)).is_zero());
    Chain<PrimeField> z2 = random_chain(f2, s, 4, r2);
    CHECK(boundary(f2, s, boundary(f2, s, z2)).is_zero());
    Chain<PrimeField> z3 = random_chain(f3, s, 2, r3);
    CHECK(boundary(f3, s, boundary(f3, s, z3)).is_zero());
  }
  Chain<RationalField> bad;
  bad.degree = 1;
  chain_add_term(q, bad, Face::of({0, 60}), q.one());
  CHECK_THROWS(boundary(q, s, bad));
}

TEST_CASE("relative boundary drops removed faces and still squares to zero") {
  SimplicialComplex s = make_simplex(7);
  RelativeComplex pair(s, induced(s, Face::of({0, 1, 2, 3})));
  RationalField q;
  std::mt19937_64 rng(14);
  for (int it = 0; it < 20; ++it) {
    Chain<RationalField> z;
    z.degree = 3;
    for (Face face : s.faces_of_dim(3)) {
      if (pair.in_removed(face) || (rng() & 1)) continue;
      chain_add_term(q, z, face, q.from_long(1 + (int)(rng() % 3)));
    }
    if (z.is_zero()) continue;
    Chain<RationalField> d = boundary(q, pair, z);
    for (const auto& [face, coeff] : d.terms) CHECK(!pair.in_removed(face));
    CHECK(boundary(q, pair, d).is_zero());
  }
  Chain<RationalField> removed_term;
  removed_term.degree = 2;
  chain_add_term(q, removed_term, Face::of({0, 1, 2}), q.one());
  CHECK_THROWS(boundary(q, pair, removed_term));
}

TEST_CASE("complete cycles really are cycles") {
  RationalField q;
  SimplicialComplex s = make_simplex(6);
  Chain<RationalField> z = complete_cycle(q, Face::of({0, 1, 2, 3, 4}));
  CHECK(z.degree == 3);
  CHECK(z.terms.size() == 5);
  CHECK(boundary(q, s, z).is_zero());
  CHECK_THROWS(complete_cycle(q, Face::of({2})));
}

TEST_CASE("joining cycles multiplies terms and adds degrees") {
  SimplicialComplex a = build_complex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  SimplicialComplex b = build_complex({"d", "e", "f"}, {{"d", "e"}, {"e", "f"}, {"d", "f"}});
  SimplicialComplex j = join(a, b);
  RationalField q;
  Chain<RationalField> za = complete_cycle(q, Face::of({0, 1, 2}));
  Chain<RationalField> zb = complete_cycle(q, Face::of({3, 4, 5}));
  Chain<RationalField> zj = chain_join(q, za, zb);
  CHECK(zj.degree == 3);
  CHECK(zj.terms.size() == 9);
  CHECK(boundary(q, j, zj).is_zero());
  CHECK_THROWS(chain_join(q, za, za));
}

TEST_CASE("the link map anticommutes with the boundary") {
  SimplicialComplex s = make_simplex(7);
  SimplicialComplex lk = link(s, Face::of({0}));
  RationalField q;
  PrimeField f3(3);
  std::mt19937_64 r1(21), r2(22);
  for (int it = 0; it < 40; ++it) {
    Chain<RationalField> z = random_chain(q, s, 3, r1);
    Chain<RationalField> lhs = link_map(q, boundary(q, s, z), 0);
    Chain<RationalField> rhs = chain_scale(q, boundary(q, lk, link_map(q, z, 0)), q.neg(q.one()));
    CHECK(chain_eq(q, lhs, rhs));

    Chain<PrimeField> w = random_chain(f3, s, 4, r2);
    Chain<PrimeField> lhs3 = link_map(f3, boundary(f3, s, w), 0);
    Chain<PrimeField> rhs3 = chain_scale(f3, boundary(f3, lk, link_map(f3, w, 0)), f3.neg(f3.one()));
    CHECK(chain_eq(f3, lhs3, rhs3));
  }
}

TEST_CASE("the extended link map agrees with the link map on vertices") {
  SimplicialComplex s = make_simplex(7);
  RationalField q;
  std::mt19937_64 rng(31);
  for (int it = 0; it < 30; ++it) {
    Chain<RationalField> z = random_chain(q, s, 3, rng);
    CHECK(chain_eq(q, extended_link_map(q, z, Face::of({2})), link_map(q, z, 2)));
  }
}

TEST_CASE("the extended link map sends cycles to extended-link cycles") {
  SimplicialComplex s = make_simplex(6);
  Face tau = Face::of({0, 1});
  SimplicialComplex elk = extended_link(s, tau);
  RationalField q;
  std::mt19937_64 rng(33);
  int nonzero = 0;
  for (int it = 0; it < 25; ++it) {
    Chain<RationalField> z = boundary(q, s, random_chain(q, s, 4, rng));
    Chain<RationalField> w = extended_link_map(q, z, tau);
    CHECK(w.degree == z.degree - 1);
    if (!w.is_zero()) ++nonzero;
    CHECK(boundary(q, elk, w).is_zero());
  }
  CHECK(nonzero > 0);
}

TEST_CASE("chain text round trip") {
  RationalField q;
  SimplicialComplex s = make_simplex(5);
  Chain<RationalField> z = complete_cycle(q, Face::of({0, 1, 2, 3}));
  chain_add_term(q, z, Face::of({0, 1, 4}), mpq_class(3, 2));
  std::string text = format_chain(q, s, z);
  CHECK(text.find("3/2") != std::string::npos);
  CHECK(chain_eq(q, parse_chain(q, s, text), z));

  PrimeField f5(5);
  Chain<PrimeField> w;
  w.degree = 1;
  chain_add_term(f5, w, Face::of({0, 1}), 2);
  chain_add_term(f5, w, Face::of({2, 3}), 4);
  CHECK(chain_eq(f5, parse_chain(f5, s, format_chain(f5, s, w)), w));

  // comments and blank lines are skipped
  Chain<RationalField> one = parse_chain(q, s, "# a comment\n\n1 : 1 2\n");
  CHECK(one.degree == 1);
  CHECK(one.terms.size() == 1);
}

TEST_CASE("chain parsing rejects malformed input") {
  RationalField q;
  SimplicialComplex c4 = make_cycle(4);
  CHECK_THROWS(parse_chain(q, c4, "1 1 2\n"));        // missing colon
  CHECK_THROWS(parse_chain(q, c4, "x : 1 2\n"));      // bad coefficient
  CHECK_THROWS(parse_chain(q, c4, "1 2 : 1 2\n"));    // two tokens before the colon
  CHECK_THROWS(parse_chain(q, c4, "1 : 9\n"));        // unknown vertex
  CHECK_THROWS(parse_chain(q, c4, "1 : 1 1\n"));      // repeated vertex
  CHECK_THROWS(parse_chain(q, c4, "1 : 1 3\n"));      // not a face
  CHECK_THROWS(parse_chain(q, c4, "1 : 1 2\n1 : 3\n"));  // mixed dimensions
  CHECK_THROWS(parse_chain(q, c4, "# nothing\n"));    // no terms
}
