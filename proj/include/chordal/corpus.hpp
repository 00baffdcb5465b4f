#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordal/complex.hpp"

namespace chordal {

struct CorpusSpec {
  std::string name;
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
};

// Accepts comma or whitespace separated integers for params.
CorpusSpec parse_corpus_spec(const std::string& name, const std::string& params,
                             std::optional<std::uint64_t> seed);

// Dispatch over the whole catalog, named and random models alike.
SimplicialComplex named_complex(const CorpusSpec& spec);

// The named (non-random) catalog, for test sweeps.
std::vector<std::string> corpus_catalog();
SimplicialComplex corpus_member(const std::string& name);

SimplicialComplex make_simplex(int n);
SimplicialComplex make_skeleton(int n, int k);  // Sk_k of the n-vertex simplex
SimplicialComplex make_boundary(int n);         // boundary of the n-vertex simplex
SimplicialComplex make_cycle(int n);            // the n-cycle graph
SimplicialComplex make_jk(int k);               // ∂Δ^k * ∂Δ^k on disjoint copies

// Vendored triangulations, validated against homology oracles on first load.
SimplicialComplex rp2_6();
SimplicialComplex dunce8();
SimplicialComplex flag_dunce();  // barycentric subdivision of dunce8

SimplicialComplex woodroofe_join();  // edge * ∂square, plus the two diagonals
SimplicialComplex cone_square();     // v * C_4
SimplicialComplex octahedron();
SimplicialComplex glued_sheets();    // ∂(abcd) ∪ ∂(abce)

// Random models.  Probabilities are given in permille so that specs stay
// integer lists; identical (params, seed) gives an identical facet list.
SimplicialComplex random_graph(int n, int p_permille, std::uint64_t seed);
SimplicialComplex random_flag(int n, int p_permille, std::uint64_t seed);
SimplicialComplex random_pure(int k, int n, int p_permille, std::uint64_t seed);
SimplicialComplex random_chordal_graph(int n, std::uint64_t seed);

}  // namespace chordal
