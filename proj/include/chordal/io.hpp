#pragma once

#include <cstdint>
#include <string>

#include "chordal/complex.hpp"

namespace chordal {

// Facet file format: an optional header line `vertices: l1 l2 ...` fixing the
// vertex order, then one facet per line as whitespace-separated labels.
// `#` starts a comment, blank lines are ignored.  Without a header the vertex
// order is the order of first appearance.
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex load_complex_file(const std::string& path);
std::string dump_complex(const SimplicialComplex& c);

std::string load_text_file(const std::string& path);

// FNV-1a 64-bit, used to fingerprint inputs in reports.
std::uint64_t fnv1a(const std::string& s);

}  // namespace chordal
