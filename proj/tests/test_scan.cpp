#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "chordal/chordality.hpp"
#include "chordal/complex.hpp"
#include "chordal/corpus.hpp"
#include "chordal/field.hpp"
#include "chordal/homology.hpp"
#include "chordal/scan.hpp"
#include "doctest.h"

using namespace chordal;

namespace {

// Hochster-style direct recount: sum of reduced Betti numbers over all
// induced subcomplexes with |W| = j, computed one betti() call at a time.
template <class F>
long long hochster_direct(const F& f, const FieldSpec&, const SimplicialComplex& c, int a, int j) {
  long long total = 0;
  std::uint64_t ground = (c.n_labels() == 64) ? ~0ULL : ((1ULL << c.n_labels()) - 1);
  for_each_submask(ground, [&](std::uint64_t w) {
    if (std::popcount(w) != j) return;
    total += betti(f, induced(c, Face{w}), j - a - 1);
  });
  return total;
}

}  // namespace

TEST_CASE("the parallel scan kernel agrees with the serial reference") {
  struct Probe {
    SimplicialComplex c;
    FieldSpec fs;
  };
  std::vector<Probe> probes = {
      {octahedron(), FieldSpec::rational()},
      {rp2_6(), FieldSpec::prime(2)},
      {make_jk(2), FieldSpec::rational()},
      {glued_sheets(), FieldSpec::prime(3)},
      {random_flag(9, 450, 101), FieldSpec::rational()},
      {random_flag(9, 550, 102), FieldSpec::prime(2)},
      {random_pure(2, 9, 400, 103), FieldSpec::prime(5)},
  };
  for (const Probe& p : probes) {
    SubsetScan par = scan_subsets(p.fs, p.c, true);
    SubsetScan ser = scan_subsets(p.fs, p.c, false);
    CHECK(par.ground == ser.ground);
    REQUIRE(par.masks == ser.masks);
    CHECK(par.betti == ser.betti);
  }
}

TEST_CASE("scan entries match direct induced-subcomplex homology") {
  FieldSpec fs = FieldSpec::rational();
  RationalField q;
  SimplicialComplex oct = octahedron();
  SubsetScan scan = scan_subsets(fs, oct);
  CHECK(scan.masks.size() == 64);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 25; ++it) {
    std::uint64_t w = rng() & scan.ground;
    SimplicialComplex sub = induced(oct, Face{w});
    for (int d = -1; d <= 2; ++d) CHECK(scan.betti_of(w, d) == betti(q, sub, d));
  }
  CHECK(scan.find(~0ULL) == nullptr);       // not a submask of the ground set
  CHECK(scan.betti_of(scan.ground, 9) == 0);  // out of stored range
  CHECK(scan.approx_bytes() > 0);
}

TEST_CASE("scan feasibility respects the width ceiling") {
  CHECK(scan_feasible(octahedron()));
  CHECK(scan_feasible(make_jk(2)));
  CHECK(!scan_feasible(make_skeleton(25, 1)));
  CHECK(!scan_feasible(flag_dunce()));
  CHECK(kScanLimit == 22);
}

TEST_CASE("graded betti table of the 4-cycle") {
  BettiTable bt = betti_table(FieldSpec::rational(), make_cycle(4));
  CHECK(bt.n == 4);
  CHECK(bt.at(0, 0) == 1);
  CHECK(bt.at(1, 2) == 2);
  CHECK(bt.at(2, 4) == 1);
  CHECK(bt.at(1, 3) == 0);
  CHECK(bt.reg() == 2);
  CHECK(bt.pdim() == 2);
  REQUIRE(bt.t(1).has_value());
  CHECK(*bt.t(1) == 2);
  REQUIRE(bt.t(2).has_value());
  CHECK(*bt.t(2) == 4);
}

TEST_CASE("graded betti tables can depend on the field") {
  SimplicialComplex rp2 = rp2_6();
  BettiTable bq = betti_table(FieldSpec::rational(), rp2);
  CHECK(bq.at(0, 0) == 1);
  CHECK(bq.at(1, 3) == 10);
  CHECK(bq.at(2, 4) == 15);
  CHECK(bq.at(3, 5) == 6);
  CHECK(bq.at(3, 6) == 0);
  CHECK(bq.reg() == 2);
  CHECK(bq.pdim() == 3);

  BettiTable b2 = betti_table(FieldSpec::prime(2), rp2);
  CHECK(b2.at(1, 3) == 10);
  CHECK(b2.at(3, 5) == 6);
  CHECK(b2.at(3, 6) == 1);
  CHECK(b2.at(4, 6) == 1);
  CHECK(b2.reg() == 3);
  CHECK(b2.pdim() == 4);
}

TEST_CASE("graded betti tables of a simplex and of the octahedron") {
  BettiTable bs = betti_table(FieldSpec::rational(), make_simplex(5));
  CHECK(bs.at(0, 0) == 1);
  CHECK(bs.reg() == 0);
  CHECK(bs.pdim() == 0);
  CHECK(!bs.t(1).has_value());

  BettiTable bo = betti_table(FieldSpec::rational(), octahedron());
  CHECK(bo.at(0, 0) == 1);
  CHECK(bo.at(1, 2) == 3);
  CHECK(bo.at(2, 4) == 3);
  CHECK(bo.at(3, 6) == 1);
  CHECK(bo.reg() == 3);
  CHECK(bo.pdim() == 3);
}

TEST_CASE("betti tables match a direct Hochster recount") {
  RationalField q;
  PrimeField f2(2);
  for (const SimplicialComplex& c : {make_cycle(4), glued_sheets()}) {
    BettiTable bt = betti_table(FieldSpec::rational(), c);
    for (int a = 0; a <= bt.pdim() + 1; ++a)
      for (int j = 0; j <= c.n_labels(); ++j)
        CHECK(bt.at(a, j) == hochster_direct(q, FieldSpec::rational(), c, a, j));
  }
  SimplicialComplex rf = random_flag(7, 500, 5);
  BettiTable bt = betti_table(FieldSpec::prime(2), rf);
  for (int a = 0; a <= bt.pdim() + 1; ++a)
    for (int j = 0; j <= rf.n_labels(); ++j)
      CHECK(bt.at(a, j) == hochster_direct(f2, FieldSpec::prime(2), rf, a, j));
}

TEST_CASE("leray numbers of the named complexes") {
  FieldSpec q = FieldSpec::rational();
  CHECK(leray_number(q, make_cycle(4)) == 2);
  CHECK(leray_number(q, octahedron()) == 3);
  CHECK(leray_number(q, make_jk(2)) == 4);
  CHECK(leray_number(q, make_skeleton(6, 2)) == 3);
  CHECK(leray_number(q, glued_sheets()) == 3);
  CHECK(leray_number(q, cone_square()) == 2);
  CHECK(leray_number(q, woodroofe_join()) == 2);
  CHECK(leray_number(q, make_simplex(4)) == 0);
  SimplicialComplex two_edges = build_complex({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(leray_number(q, two_edges) == 1);
}

TEST_CASE("leray_at_most decides what it can and admits what it cannot") {
  FieldSpec q = FieldSpec::rational();
  CHECK(leray_at_most(q, make_cycle(4), 1) == std::optional<bool>(false));
  CHECK(leray_at_most(q, make_cycle(4), 2) == std::optional<bool>(true));
  CHECK(leray_at_most(q, octahedron(), 2) == std::optional<bool>(false));
  CHECK(leray_at_most(q, octahedron(), 3) == std::optional<bool>(true));
  // too wide to scan, but the absence of global 2-cycles settles k=2
  CHECK(leray_at_most(q, flag_dunce(), 2) == std::optional<bool>(true));
  CHECK(leray_at_most(q, flag_dunce(), 1) == std::nullopt);
  SimplicialComplex k25 = make_skeleton(25, 1);
  CHECK(leray_at_most(q, k25, 1) == std::nullopt);
  CHECK(leray_at_most(q, k25, 2) == std::optional<bool>(true));
  SimplicialComplex pts = make_skeleton(25, 0);
  CHECK(leray_at_most(q, pts, 1) == std::optional<bool>(true));
}

TEST_CASE("regularity equals the leray number where both are computable") {
  std::vector<SimplicialComplex> cs = {make_cycle(4),  make_cycle(6),  octahedron(),
                                       glued_sheets(), cone_square(),  make_jk(2),
                                       rp2_6(),        dunce8(),       woodroofe_join(),
                                       make_simplex(5), make_boundary(5), make_skeleton(6, 2)};
  for (const SimplicialComplex& c : cs) {
    for (FieldSpec fs : {FieldSpec::rational(), FieldSpec::prime(2)}) {
      CHECK(regularity(fs, c) == leray_number(fs, c));
    }
  }
}

TEST_CASE("scan cache reuses results per facet structure and field") {
  clear_scan_cache();
  SimplicialComplex rp2 = rp2_6();
  auto p1 = scan_subsets_cached(FieldSpec::rational(), rp2);
  auto p2 = scan_subsets_cached(FieldSpec::rational(), rp2_6());
  CHECK(p1.get() == p2.get());
  auto p3 = scan_subsets_cached(FieldSpec::prime(2), rp2);
  CHECK(p3.get() != p1.get());
  CHECK(p1->betti_of(p1->ground, 2) == 0);
  CHECK(p3->betti_of(p3->ground, 2) == 1);
  clear_scan_cache();
  auto p4 = scan_subsets_cached(FieldSpec::rational(), rp2);
  CHECK(p4->masks == p1->masks);
  CHECK(p4->betti == p1->betti);
}
