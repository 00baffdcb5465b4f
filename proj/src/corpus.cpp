#include "chordal/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chordal/field.hpp"
#include "chordal/homology.hpp"
#include "chordal/io.hpp"

#ifndef CHORDAL_DATA_DIR
#define CHORDAL_DATA_DIR "data"
#endif

namespace chordal {

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_n(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("corpus: vertex count must be in 1..64");
}

[[noreturn]] void fail_oracle(const std::string& name, const std::string& what) {
  throw std::runtime_error("corpus: " + name + " failed its validation oracle (" + what + ")");
}

std::vector<int> betti_q(const SimplicialComplex& c) {
  return betti_all(RationalField{}, c);
}

std::vector<int> betti_f2(const SimplicialComplex& c) {
  return betti_all(PrimeField(2), c);
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

SimplicialComplex make_simplex(int n) {
  check_n(n);
  Face all;
  for (int i = 0; i < n; ++i) all = all.with(i);
  return SimplicialComplex(numeric_labels(n), {all});
}

SimplicialComplex make_skeleton(int n, int k) {
  return skeleton(make_simplex(n), k);
}

SimplicialComplex make_boundary(int n) {
  return skeleton(make_simplex(n), n - 2);
}

SimplicialComplex make_cycle(int n) {
  check_n(n);
  if (n < 3) throw std::invalid_argument("corpus: cycle needs at least 3 vertices");
  std::vector<Face> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Face::of({i, (i + 1) % n}));
  return SimplicialComplex(numeric_labels(n), std::move(edges));
}

SimplicialComplex make_jk(int k) {
  if (k < 1 || k > 15) throw std::invalid_argument("corpus: jk needs 1 <= k <= 15");
  std::vector<std::string> labels;
  for (int i = 1; i <= k + 1; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= k + 1; ++i) labels.push_back("b" + std::to_string(i));
  Face A, B;
  for (int i = 0; i <= k; ++i) A = A.with(i);
  for (int i = k + 1; i <= 2 * k + 1; ++i) B = B.with(i);
  std::vector<Face> facets;
  for (int i = 0; i <= k; ++i)
    for (int j = k + 1; j <= 2 * k + 1; ++j) facets.push_back(A.without(i).unite(B.without(j)));
  return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex rp2_6() {
  static const SimplicialComplex inst = [] {
    SimplicialComplex c = load_complex_file(std::string(CHORDAL_DATA_DIR) + "/rp2_6.facets");
    if (c.n_vertices() != 6 || c.dim() != 2 || c.face_count(2) != 10)
      fail_oracle("rp2_6", "f-vector");
    if (!all_zero(betti_q(c))) fail_oracle("rp2_6", "should be acyclic over the rationals");
    std::vector<int> b2 = betti_f2(c);
    if (b2.size() != 4 || b2[0] != 0 || b2[1] != 0 || b2[2] != 1 || b2[3] != 1)
      fail_oracle("rp2_6", "mod-2 homology should be 1 in degrees 1 and 2");
    return c;
  }();
  return inst;
}

SimplicialComplex dunce8() {
  static const SimplicialComplex inst = [] {
    SimplicialComplex c = load_complex_file(std::string(CHORDAL_DATA_DIR) + "/dunce8.facets");
    if (c.n_vertices() != 8 || c.dim() != 2) fail_oracle("dunce8", "size");
    if (!all_zero(betti_q(c)) || !all_zero(betti_f2(c)))
      fail_oracle("dunce8", "should be acyclic over the rationals and mod 2");
    for (Face e : c.faces_of_dim(1)) {
      int deg = 0;
      for (Face t : c.faces_of_dim(2))
        if (e.is_subset_of(t)) ++deg;
      if (deg < 2) fail_oracle("dunce8", "free edge " + c.face_to_string(e));
    }
    return c;
  }();
  return inst;
}

SimplicialComplex flag_dunce() {
  static const SimplicialComplex inst = [] {
    SimplicialComplex c = barycentric_subdivision(dunce8());
    if (!(clique_complex(skeleton(c, 1), 1) == c))
      fail_oracle("flag_dunce", "subdivision should be flag");
    return c;
  }();
  return inst;
}

SimplicialComplex woodroofe_join() {
  // edge {1,2} joined with the square boundary 3-4-5-6, then both diagonals
  SimplicialComplex c(numeric_labels(6),
                      {Face::of({0, 1, 2, 3}), Face::of({0, 1, 3, 4}), Face::of({0, 1, 4, 5}),
                       Face::of({0, 1, 2, 5}), Face::of({2, 4}), Face::of({3, 5})});
  return c;
}

SimplicialComplex cone_square() {
  return cone("v", make_cycle(4));
}

SimplicialComplex octahedron() {
  // antipodal pairs 1-4, 2-5, 3-6
  std::vector<Face> facets;
  for (int i : {0, 3})
    for (int j : {1, 4})
      for (int l : {2, 5}) facets.push_back(Face::of({i, j, l}));
  return SimplicialComplex(numeric_labels(6), std::move(facets));
}

SimplicialComplex glued_sheets() {
  std::vector<std::string> labels = {"a", "b", "c", "d", "e"};
  std::vector<Face> facets;
  for (int skip = 0; skip < 4; ++skip)  // boundary of abcd
    facets.push_back(Face::of({0, 1, 2, 3}).without(skip));
  for (int skip = 0; skip < 5; ++skip)  // boundary of abce
    if (skip != 3) facets.push_back(Face::of({0, 1, 2, 4}).without(skip));
  return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex random_graph(int n, int p_permille, std::uint64_t seed) {
  check_n(n);
  if (p_permille < 0 || p_permille > 1000)
    throw std::invalid_argument("corpus: edge probability is in permille, 0..1000");
  std::mt19937_64 rng(seed);
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) facets.push_back(Face::of({i}));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 1000) < p_permille) facets.push_back(Face::of({i, j}));
  return SimplicialComplex(numeric_labels(n), std::move(facets));
}

SimplicialComplex random_flag(int n, int p_permille, std::uint64_t seed) {
  return clique_complex(random_graph(n, p_permille, seed), 1);
}

SimplicialComplex random_pure(int k, int n, int p_permille, std::uint64_t seed) {
  check_n(n);
  if (k < 1 || k + 1 > n) throw std::invalid_argument("corpus: pure model needs 1 <= k < n");
  if (p_permille < 0 || p_permille > 1000)
    throw std::invalid_argument("corpus: probability is in permille, 0..1000");
  std::mt19937_64 rng(seed);
  Face ground;
  for (int i = 0; i < n; ++i) ground = ground.with(i);
  std::vector<Face> all;
  subsets_of_card(ground, k + 1, all);
  std::vector<Face> facets;
  for (Face f : all)
    if (static_cast<int>(rng() % 1000) < p_permille) facets.push_back(f);
  return SimplicialComplex(numeric_labels(n), std::move(facets));
}

SimplicialComplex random_chordal_graph(int n, std::uint64_t seed) {
  check_n(n);
  std::mt19937_64 rng(seed);
  // each new vertex attaches to a nonempty subset of one existing clique, so
  // the reverse insertion order is a perfect elimination ordering
  std::vector<Face> cliques = {Face::of({0})};
  std::vector<Face> facets = {Face::of({0})};
  for (int v = 1; v < n; ++v) {
    facets.push_back(Face::of({v}));
    const Face base = cliques[rng() % cliques.size()];
    Face nb;
    for (int u : base.vertices())
      if (rng() % 1000 < 600) nb = nb.with(u);
    if (nb.empty()) {
      std::vector<int> vs = base.vertices();
      nb = nb.with(vs[rng() % vs.size()]);
    }
    for (int u : nb.vertices()) facets.push_back(Face::of({u, v}));
    cliques.push_back(nb.with(v));
  }
  return SimplicialComplex(numeric_labels(n), std::move(facets));
}

CorpusSpec parse_corpus_spec(const std::string& name, const std::string& params,
                             std::optional<std::uint64_t> seed) {
  CorpusSpec spec;
  spec.name = name;
  spec.seed = seed;
  std::string normalized = params;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream ss(normalized);
  std::string tok;
  while (ss >> tok) {
    try {
      spec.params.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("corpus: bad integer parameter '" + tok + "'");
    }
  }
  return spec;
}

namespace {

long long param_at(const CorpusSpec& s, std::size_t i, const char* what) {
  if (i >= s.params.size())
    throw std::invalid_argument("corpus: " + s.name + " needs parameter " + what);
  return s.params[i];
}

void want_params(const CorpusSpec& s, std::size_t count) {
  if (s.params.size() != count)
    throw std::invalid_argument("corpus: " + s.name + " takes " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(s.params.size()));
}

}  // namespace

SimplicialComplex named_complex(const CorpusSpec& spec) {
  const std::string& n = spec.name;
  std::uint64_t seed = spec.seed.value_or(0);
  if (n == "simplex") {
    want_params(spec, 1);
    return make_simplex(static_cast<int>(param_at(spec, 0, "n")));
  }
  if (n == "skeleton") {
    want_params(spec, 2);
    return make_skeleton(static_cast<int>(param_at(spec, 0, "n")),
                         static_cast<int>(param_at(spec, 1, "k")));
  }
  if (n == "boundary") {
    want_params(spec, 1);
    return make_boundary(static_cast<int>(param_at(spec, 0, "n")));
  }
  if (n == "cycle") {
    want_params(spec, 1);
    return make_cycle(static_cast<int>(param_at(spec, 0, "n")));
  }
  if (n == "jk") {
    want_params(spec, 1);
    return make_jk(static_cast<int>(param_at(spec, 0, "k")));
  }
  if (n == "rp2_6") {
    want_params(spec, 0);
    return rp2_6();
  }
  if (n == "dunce8") {
    want_params(spec, 0);
    return dunce8();
  }
  if (n == "flag_dunce") {
    want_params(spec, 0);
    return flag_dunce();
  }
  if (n == "woodroofe_join") {
    want_params(spec, 0);
    return woodroofe_join();
  }
  if (n == "cone_square") {
    want_params(spec, 0);
    return cone_square();
  }
  if (n == "octahedron") {
    want_params(spec, 0);
    return octahedron();
  }
  if (n == "glued_sheets") {
    want_params(spec, 0);
    return glued_sheets();
  }
  if (n == "graph") {
    want_params(spec, 2);
    return random_graph(static_cast<int>(param_at(spec, 0, "n")),
                        static_cast<int>(param_at(spec, 1, "p_permille")), seed);
  }
  if (n == "flag") {
    want_params(spec, 2);
    return random_flag(static_cast<int>(param_at(spec, 0, "n")),
                       static_cast<int>(param_at(spec, 1, "p_permille")), seed);
  }
  if (n == "pure") {
    want_params(spec, 3);
    return random_pure(static_cast<int>(param_at(spec, 0, "k")),
                       static_cast<int>(param_at(spec, 1, "n")),
                       static_cast<int>(param_at(spec, 2, "p_permille")), seed);
  }
  if (n == "chordal_graph") {
    want_params(spec, 1);
    return random_chordal_graph(static_cast<int>(param_at(spec, 0, "n")), seed);
  }
  throw std::invalid_argument("corpus: unknown name '" + n + "'");
}

std::vector<std::string> corpus_catalog() {
  return {"simplex(5)",  "skeleton(6,2)",  "boundary(5)", "cycle(4)",       "cycle(6)",
          "jk(2)",       "rp2_6",          "dunce8",      "flag_dunce",     "woodroofe_join",
          "cone_square", "octahedron",     "glued_sheets"};
}

SimplicialComplex corpus_member(const std::string& name) {
  auto open = name.find('(');
  std::string base = name.substr(0, open);
  std::string params;
  if (open != std::string::npos) {
    auto close = name.find(')', open);
    if (close == std::string::npos)
      throw std::invalid_argument("corpus: malformed name '" + name + "'");
    params = name.substr(open + 1, close - open - 1);
  }
  return named_complex(parse_corpus_spec(base, params, std::nullopt));
}

}  // namespace chordal
