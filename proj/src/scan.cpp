#include "chordal/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <list>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "chordal/homology.hpp"

namespace chordal {

const std::vector<int>* SubsetScan::find(std::uint64_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask) return nullptr;
  return &betti[static_cast<std::size_t>(it - masks.begin())];
}

int SubsetScan::betti_of(std::uint64_t mask, int d) const {
  const std::vector<int>* v = find(mask);
  if (!v) throw std::runtime_error("scan: mask not covered");
  int i = d + 1;
  if (i < 0 || i >= static_cast<int>(v->size())) return 0;
  return (*v)[i];
}

std::size_t SubsetScan::approx_bytes() const {
  std::size_t b = sizeof(SubsetScan) + masks.size() * sizeof(std::uint64_t);
  for (const auto& v : betti) b += sizeof(v) + v.size() * sizeof(int);
  return b;
}

bool scan_feasible(const SimplicialComplex& c) {
  return c.support().card() <= kScanLimit;
}

namespace {

// Cheap acyclicity shortcut: if the induced facets share a vertex the
// subcomplex is a cone, so every reduced Betti number vanishes.
template <class F>
std::vector<int> betti_of_mask(const F& f, const SimplicialComplex& c, std::uint64_t mask) {
  if (c.dim() == -2) return {};
  if (mask == 0) return {1};
  SimplicialComplex sub = induced(c, Face{mask});
  if (sub.dim() >= 0) {
    std::uint64_t common = ~std::uint64_t{0};
    for (const Face& g : sub.facets()) common &= g.bits;
    if (common) return std::vector<int>(static_cast<std::size_t>(sub.dim()) + 2, 0);
  }
  return betti_all(f, sub);
}

template <class F>
void run_scan(const F& f, const SimplicialComplex& c, SubsetScan& s, bool parallel) {
  const std::int64_t n = static_cast<std::int64_t>(s.masks.size());
  s.betti.resize(s.masks.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) s.betti[i] = betti_of_mask(f, c, s.masks[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) s.betti[i] = betti_of_mask(f, c, s.masks[i]);
  }
}

struct ScanCache {
  std::mutex mu;
  std::size_t bytes = 0;
  std::size_t cap = 0;
  // LRU: front = most recent.
  std::list<std::pair<std::string, std::shared_ptr<const SubsetScan>>> order;
  std::unordered_map<std::string, decltype(order)::iterator> index;

  ScanCache() {
    std::size_t mb = 256;
    if (const char* env = std::getenv("CHORDAL_SCAN_CACHE_MB")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end && *end == '\0') mb = v;
    }
    cap = mb * 1024 * 1024;
  }
};

ScanCache& cache() {
  static ScanCache c;
  return c;
}

}  // namespace

SubsetScan scan_subsets(const FieldSpec& fs, const SimplicialComplex& c, bool parallel) {
  if (!scan_feasible(c))
    throw std::runtime_error("subset scan over " + std::to_string(c.support().card()) +
                             " vertices exceeds the limit of " + std::to_string(kScanLimit));
  SubsetScan s;
  s.ground = c.support().bits;
  s.masks.reserve(std::size_t{1} << c.support().card());
  for_each_submask(s.ground, [&](std::uint64_t m) { s.masks.push_back(m); });
  with_field(fs, [&](const auto& f) { run_scan(f, c, s, parallel); });
  return s;
}

std::shared_ptr<const SubsetScan> scan_subsets_cached(const FieldSpec& fs,
                                                      const SimplicialComplex& c) {
  std::string key = fs.to_string() + "|" + canonical_key(c);
  ScanCache& cc = cache();
  {
    std::lock_guard<std::mutex> lock(cc.mu);
    auto it = cc.index.find(key);
    if (it != cc.index.end()) {
      cc.order.splice(cc.order.begin(), cc.order, it->second);
      return cc.order.front().second;
    }
  }
  auto scan = std::make_shared<const SubsetScan>(scan_subsets(fs, c, true));
  std::lock_guard<std::mutex> lock(cc.mu);
  auto it = cc.index.find(key);
  if (it != cc.index.end()) return it->second->second;
  cc.order.emplace_front(key, scan);
  cc.index[key] = cc.order.begin();
  cc.bytes += scan->approx_bytes();
  while (cc.bytes > cc.cap && cc.order.size() > 1) {
    auto& back = cc.order.back();
    cc.bytes -= back.second->approx_bytes();
    cc.index.erase(back.first);
    cc.order.pop_back();
  }
  return scan;
}

void clear_scan_cache() {
  ScanCache& cc = cache();
  std::lock_guard<std::mutex> lock(cc.mu);
  cc.order.clear();
  cc.index.clear();
  cc.bytes = 0;
}

}  // namespace chordal
