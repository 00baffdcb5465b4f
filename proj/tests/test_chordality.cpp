#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "chordal/chain.hpp"
#include "chordal/chordality.hpp"
#include "chordal/complex.hpp"
#include "chordal/corpus.hpp"
#include "chordal/field.hpp"
#include "chordal/homology.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordal;

namespace {

// Reisner's criterion recomputed from scratch: every link, the empty face
// included, must have vanishing reduced homology below its own dimension.
template <class F>
bool reisner_direct(const F& f, const SimplicialComplex& c) {
  std::vector<Face> faces;
  faces.push_back(Face{});
  for (int d = 0; d <= c.dim(); ++d)
    for (Face s : c.faces_of_dim(d)) faces.push_back(s);
  for (Face s : faces) {
    SimplicialComplex lk = link(c, s);
    for (int d = -1; d < lk.dim(); ++d)
      if (betti(f, lk, d) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph decomposition 1-chordality matches a perfect elimination oracle") {
  FieldSpec q = FieldSpec::rational();
  int chordal_count = 0;
  for (int it = 0; it < 60; ++it) {
    int n = 4 + static_cast<int>(oracles::mix(900 + it) % 5);  // 4..8 vertices
    int p = 250 + static_cast<int>(oracles::mix(1800 + it) % 600);
    SimplicialComplex g = random_graph(n, p, 4000 + it);
    bool want = oracles::graph_is_chordal(g);
    if (want) ++chordal_count;
    ChordalityVerdict v = is_decomposition_chordal(q, g, 1);
    CHECK(v.holds == want);
    CHECK(v.kind == "decomposition");
    CHECK(v.k == 1);
    SimplicialComplex cl = clique_complex(g, 1);
    CHECK(is_resolution_chordal(q, cl, 1).holds == want);
    CHECK(is_decomposition_chordal(q, cl, 1).holds == want);
  }
  CHECK(chordal_count > 5);
  CHECK(chordal_count < 55);
}

TEST_CASE("a hollow triangle separates the two chordality notions at k = 1") {
  FieldSpec q = FieldSpec::rational();
  SimplicialComplex k3 = build_complex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(is_decomposition_chordal(q, k3, 1).holds);   // the triangle is complete
  CHECK(!is_resolution_chordal(q, k3, 1).holds);     // but nothing fills it
}

TEST_CASE("witnesses against chordality are replayable") {
  FieldSpec qs = FieldSpec::rational();
  RationalField q;

  ChordalityVerdict v4 = is_decomposition_chordal(qs, make_cycle(4), 1);
  REQUIRE(!v4.holds);
  REQUIRE(v4.witness.has_value());
  CHECK(v4.witness->vertices.size() == 4);
  SimplicialComplex sub4 = induced(make_cycle(4), Face{v4.witness->vertex_mask});
  Chain<RationalField> z4 = parse_chain(q, sub4, v4.witness->cycle);
  CHECK(z4.degree == 1);
  CHECK(boundary(q, sub4, z4).is_zero());
  CHECK(!decompose_cycle(q, sub4, z4).has_value());

  ChordalityVerdict vo = is_resolution_chordal(qs, octahedron(), 2);
  REQUIRE(!vo.holds);
  REQUIRE(vo.witness.has_value());
  CHECK(vo.witness->vertices.size() == 6);
  SimplicialComplex subo = induced(octahedron(), Face{vo.witness->vertex_mask});
  Chain<RationalField> zo = parse_chain(q, subo, vo.witness->cycle);
  CHECK(zo.degree == 2);
  CHECK(boundary(q, subo, zo).is_zero());
  CHECK(!resolve_cycle(q, subo, zo).has_value());

  CHECK(!is_decomposition_chordal(qs, octahedron(), 2).holds);
  CHECK(!is_decomposition_chordal(qs, make_cycle(6), 1).holds);
}

TEST_CASE("complexes that are chordal in higher dimensions") {
  FieldSpec q = FieldSpec::rational();
  CHECK(is_resolution_chordal(q, make_jk(2), 2).holds);
  CHECK(is_decomposition_chordal(q, make_jk(2), 2).holds);
  std::vector<Face> mf = missing_faces(make_jk(2));
  REQUIRE(mf.size() == 2);
  CHECK(mf[0].card() == 3);
  CHECK(mf[1].card() == 3);

  // the cone over C4: 2-chordal every way, but not 1-chordal
  CHECK(is_resolution_chordal(q, cone_square(), 2).holds);
  CHECK(!is_resolution_chordal(q, cone_square(), 1).holds);
  CHECK(!is_decomposition_chordal(q, cone_square(), 1).holds);

  // a forest has no 1-cycles at all, so the fast path applies
  SimplicialComplex path = build_complex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  ChordalityVerdict vp = is_resolution_chordal(q, path, 1);
  CHECK(vp.holds);
  CHECK(vp.fast_path);

  // too wide to scan, but free of 2-cycles
  ChordalityVerdict vf = is_decomposition_chordal(q, flag_dunce(), 2);
  CHECK(vf.holds);
  CHECK(vf.fast_path);
}

TEST_CASE("relative chordality of star pairs") {
  FieldSpec q = FieldSpec::rational();
  SimplicialComplex s4 = make_simplex(4);
  RelativeComplex good(star(s4, Face::of({0})), delete_face(star(s4, Face::of({0})), Face::of({0})));
  CHECK(is_resolution_chordal(q, good, 2).holds);

  SimplicialComplex oct = octahedron();
  SimplicialComplex st = star(oct, Face::of({0}));
  RelativeComplex bad(st, delete_face(st, Face::of({0})));
  CHECK(!is_resolution_chordal(q, bad, 2).holds);
  CHECK(!is_resolution_chordal(q, link(oct, Face::of({0})), 1).holds);
}

TEST_CASE("linear resolution reports") {
  FieldSpec q = FieldSpec::rational();
  FieldSpec f2 = FieldSpec::prime(2);

  LinearResolutionReport c4 = has_linear_resolution(q, make_cycle(4));
  CHECK(c4.verdict == LinearResolution::no);
  CHECK(c4.generator_dim == 1);
  CHECK(c4.reg == 2);

  LinearResolutionReport rq = has_linear_resolution(q, rp2_6());
  CHECK(rq.verdict == LinearResolution::yes);
  CHECK(rq.generator_dim == 2);
  CHECK(rq.reg == 2);
  LinearResolutionReport r2 = has_linear_resolution(f2, rp2_6());
  CHECK(r2.verdict == LinearResolution::no);
  CHECK(r2.reg == 3);

  LinearResolutionReport b5 = has_linear_resolution(q, make_boundary(5));
  CHECK(b5.verdict == LinearResolution::yes);
  CHECK(b5.generator_dim == 4);
  CHECK(b5.reg == 4);

  LinearResolutionReport gl = has_linear_resolution(q, glued_sheets());
  CHECK(gl.verdict == LinearResolution::not_applicable);
  CHECK(gl.reason.find("several dimensions") != std::string::npos);

  SimplicialComplex hollow_plus_point =
      build_complex({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"4"}});
  CHECK(has_linear_resolution(q, hollow_plus_point).verdict == LinearResolution::not_applicable);
}

TEST_CASE("cohen-macaulayness by reisner's criterion") {
  FieldSpec qs = FieldSpec::rational();
  FieldSpec f2s = FieldSpec::prime(2);
  RationalField q;
  PrimeField f2(2);

  struct Want {
    SimplicialComplex c;
    bool over_q;
    bool over_f2;
  };
  std::vector<Want> wants = {
      {rp2_6(), true, false}, {dunce8(), true, true},        {octahedron(), true, true},
      {make_cycle(4), true, true}, {glued_sheets(), true, true}, {woodroofe_join(), false, false},
  };
  for (const Want& w : wants) {
    CHECK(is_cohen_macaulay(qs, w.c) == w.over_q);
    CHECK(is_cohen_macaulay(f2s, w.c) == w.over_f2);
    CHECK(reisner_direct(q, w.c) == w.over_q);
    CHECK(reisner_direct(f2, w.c) == w.over_f2);
  }
}

TEST_CASE("linear resolutions pair with cohen-macaulay duals") {
  for (FieldSpec fs : {FieldSpec::rational(), FieldSpec::prime(2)}) {
    for (const SimplicialComplex& c : {rp2_6(), make_cycle(4), octahedron()}) {
      LinearResolutionReport rep = has_linear_resolution(fs, c);
      if (rep.verdict == LinearResolution::not_applicable) continue;
      bool dual_cm = is_cohen_macaulay(fs, alexander_dual(c, DualGround::support));
      CHECK((rep.verdict == LinearResolution::yes) == dual_cm);
    }
    for (int seed = 1; seed <= 10; ++seed) {
      SimplicialComplex rf = random_flag(7, 500, 700 + seed);
      LinearResolutionReport rep = has_linear_resolution(fs, rf);
      if (rep.verdict == LinearResolution::not_applicable) continue;
      if (alexander_dual(rf, DualGround::support).is_void()) continue;
      bool dual_cm = is_cohen_macaulay(fs, alexander_dual(rf, DualGround::support));
      CHECK((rep.verdict == LinearResolution::yes) == dual_cm);
    }
  }
}

TEST_CASE("propagation reports on the named complexes") {
  FieldSpec q = FieldSpec::rational();

  PropagationReport s1 = check_propagation(q, make_simplex(5), 1);
  CHECK(s1.hypotheses());
  CHECK(s1.conclusions());
  CHECK(s1.respected());
  CHECK(s1.hs_checked);
  CHECK(s1.hs_ok);

  PropagationReport c41 = check_propagation(q, make_cycle(4), 1);
  CHECK(c41.hyp_no_big_missing);
  CHECK(!c41.hyp_chordal);
  CHECK(c41.hyp_fail_level == 1);
  CHECK(!c41.hypotheses());
  CHECK(c41.respected());

  PropagationReport c42 = check_propagation(q, make_cycle(4), 2);
  CHECK(c42.hypotheses());
  CHECK(c42.conclusions());

  PropagationReport o2 = check_propagation(q, octahedron(), 2);
  CHECK(o2.hyp_no_big_missing);
  CHECK(!o2.hyp_chordal);
  CHECK(o2.hyp_fail_level == 2);
  CHECK(o2.respected());

  PropagationReport g2 = check_propagation(q, glued_sheets(), 2);
  CHECK(!g2.hyp_no_big_missing);
  CHECK(g2.respected());

  // scanning is infeasible here, yet both sides are still decidable
  PropagationReport fd = check_propagation(q, flag_dunce(), 2);
  CHECK(fd.hypotheses());
  CHECK(fd.conclusions());
  CHECK(fd.leray_decided);
  CHECK(!fd.hs_checked);
  CHECK(fd.respected());
}

TEST_CASE("herzog-srinivasan subadditivity on the named complexes") {
  for (FieldSpec fs : {FieldSpec::rational(), FieldSpec::prime(2)}) {
    for (const std::string& name : corpus_catalog()) {
      SimplicialComplex c = corpus_member(name);
      if (!scan_feasible(c)) continue;
      BettiTable bt = betti_table(fs, c);
      auto t1 = bt.t(1);
      if (!t1.has_value()) continue;
      for (int a = 2; a <= bt.pdim(); ++a) {
        auto ta = bt.t(a);
        auto tprev = bt.t(a - 1);
        if (!ta.has_value() || !tprev.has_value()) continue;
        CHECK(*ta <= *tprev + *t1);
      }
    }
  }
}

TEST_CASE("nonbounding cycles and their certificates") {
  RationalField q;
  auto z = nonbounding_cycle(q, make_cycle(4), 1);
  REQUIRE(z.has_value());
  CHECK(z->degree == 1);
  CHECK(boundary(q, make_cycle(4), *z).is_zero());
  CHECK(!solve_boundary(q, make_cycle(4), *z).has_value());

  auto top = nonbounding_cycle(q, make_boundary(5), 3);
  REQUIRE(top.has_value());
  CHECK(top->degree == 3);

  CHECK(!nonbounding_cycle(q, make_simplex(5), 1).has_value());
  CHECK(!nonbounding_cycle(q, make_simplex(5), 7).has_value());

  Chain<RationalField> notcycle;
  notcycle.degree = 1;
  chain_add_term(q, notcycle, Face::of({0, 1}), q.one());
  CHECK_THROWS(require_cycle(q, make_cycle(4), notcycle));
}

TEST_CASE("resolving and decomposing concrete cycles") {
  RationalField q;
  SimplicialComplex oct = octahedron();
  Chain<RationalField> z = boundary_of_face(q, Face::of({0, 1, 2}));
  auto res = resolve_cycle(q, oct, z);
  REQUIRE(res.has_value());
  CHECK(chain_eq(q, boundary(q, oct, *res), z));
  for (const auto& [face, coeff] : res->terms) CHECK(face.is_subset_of(z.vertex_support()));

  // the square inside the solid K4 decomposes into two triangle cycles but
  // does not resolve: K4's 1-skeleton has no 2-faces to fill with
  SimplicialComplex k4 = make_skeleton(4, 1);
  Chain<RationalField> sq;
  sq.degree = 1;
  chain_add_term(q, sq, Face::of({0, 1}), q.one());
  chain_add_term(q, sq, Face::of({1, 2}), q.one());
  chain_add_term(q, sq, Face::of({2, 3}), q.one());
  chain_add_term(q, sq, Face::of({0, 3}), q.neg(q.one()));
  auto dec = decompose_cycle(q, k4, sq);
  REQUIRE(dec.has_value());
  CHECK(dec->size() == 2);
  Chain<RationalField> rebuilt;
  rebuilt.degree = 1;
  for (const auto& term : *dec) {
    Chain<RationalField> cyc = complete_cycle(q, term.support);
    rebuilt = chain_sum(q, rebuilt, chain_scale(q, cyc, term.coeff));
  }
  CHECK(chain_eq(q, rebuilt, sq));
  CHECK(!resolve_cycle(q, k4, sq).has_value());

  // in C4 even the decomposition fails: no chord, no complete cycles
  SimplicialComplex c4 = make_cycle(4);
  Chain<RationalField> sqc = parse_chain(q, c4, "1 : 1 2\n1 : 2 3\n1 : 3 4\n-1 : 1 4\n");
  CHECK(!decompose_cycle(q, c4, sqc).has_value());
  CHECK(!resolve_cycle(q, c4, sqc).has_value());
}

TEST_CASE("text wrappers for resolve and decompose") {
  FieldSpec q = FieldSpec::rational();
  SimplicialComplex oct = octahedron();
  RationalField qf;
  std::string cycle = format_chain(qf, oct, boundary_of_face(qf, Face::of({0, 1, 2})));
  ResolveOutcome ro = resolve_cycle_text(q, oct, cycle);
  CHECK(ro.found);
  CHECK(!ro.chain.empty());

  SimplicialComplex c4 = make_cycle(4);
  ResolveOutcome rno = resolve_cycle_text(q, c4, "1 : 1 2\n1 : 2 3\n1 : 3 4\n-1 : 1 4\n");
  CHECK(!rno.found);
  DecomposeOutcome dno = decompose_cycle_text(q, c4, "1 : 1 2\n1 : 2 3\n1 : 3 4\n-1 : 1 4\n");
  CHECK(!dno.found);

  SimplicialComplex k4 = make_skeleton(4, 1);
  std::string sq = "1 : 1 2\n1 : 2 3\n1 : 3 4\n-1 : 1 4\n";
  DecomposeOutcome das = decompose_cycle_text(q, k4, sq);
  CHECK(das.found);
  CHECK(das.terms.size() == 2);
  for (const auto& [support, coeff] : das.terms) {
    CHECK(support.size() == 3);
    CHECK(!coeff.empty());
  }
}
