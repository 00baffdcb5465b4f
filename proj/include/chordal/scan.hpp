#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/field.hpp"

namespace chordal {

// Reduced Betti numbers of every induced subcomplex Δ|_W, W ⊆ support(Δ).
// betti[i][d+1] = dim H~_d(Δ|_{masks[i]}).  Masks ascend numerically, so
// lookups binary-search.  This is the workhorse shared by the chordality,
// Leray, and Hochster computations.
struct SubsetScan {
  std::uint64_t ground = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> betti;

  const std::vector<int>* find(std::uint64_t mask) const;
  // dim H~_d(Δ|_mask); 0 outside the stored range.
  int betti_of(std::uint64_t mask, int d) const;
  std::size_t approx_bytes() const;
};

// Hard ceiling on scan width: 2^n subsets get enumerated.
inline constexpr int kScanLimit = 22;

bool scan_feasible(const SimplicialComplex& c);

// parallel=true uses the OpenMP kernel; false runs the serial reference
// implementation.  Both produce identical results.
SubsetScan scan_subsets(const FieldSpec& fs, const SimplicialComplex& c, bool parallel = true);

// Memoised scans keyed by (facet structure, field).  Cache size is capped by
// the CHORDAL_SCAN_CACHE_MB environment variable (default 256).
std::shared_ptr<const SubsetScan> scan_subsets_cached(const FieldSpec& fs,
                                                      const SimplicialComplex& c);
void clear_scan_cache();

}  // namespace chordal
