#include "chordal/chordality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace chordal {

namespace {

std::vector<std::vector<long long>> binomials(int n) {
  std::vector<std::vector<long long>> b(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    b[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      b[i][j] = b[i - 1][j - 1] + (j <= i - 1 ? b[i - 1][j] : 0);
  }
  return b;
}

// dim ker ∂_k of the whole complex; if this is zero no induced subcomplex can
// carry k-cycles either, since restriction chains include into global chains.
int global_cycle_dim(const FieldSpec& fs, const SimplicialComplex& c, int k) {
  int fk = static_cast<int>(c.faces_of_dim(k).size());
  if (fk == 0) return 0;
  int rk = 0;
  with_field(fs, [&](const auto& f) { rk = rank(f, boundary_matrix(f, c, k)); });
  return fk - rk;
}

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  int ca = std::popcount(a);
  int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  return face_lex_less(Face{a}, Face{b});
}

std::vector<std::string> mask_labels(const SimplicialComplex& c, std::uint64_t mask) {
  std::vector<std::string> out;
  for (int v : Face{mask}.vertices()) out.push_back(c.label_of(v));
  return out;
}

}  // namespace

ChordalityVerdict is_resolution_chordal(const FieldSpec& fs, const SimplicialComplex& c, int k) {
  if (k < 0) throw std::invalid_argument("chordality degree must be >= 0");
  ChordalityVerdict v;
  v.kind = "resolution";
  v.k = k;
  v.field = fs;
  if (global_cycle_dim(fs, c, k) == 0) {
    v.fast_path = true;
    return v;
  }
  if (!scan_feasible(c))
    throw std::runtime_error("resolution chordality needs a subset scan, but the support is too large");
  auto scan = scan_subsets_cached(fs, c);
  bool have = false;
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < scan->masks.size(); ++i) {
    std::uint64_t m = scan->masks[i];
    if (std::popcount(m) < k + 2) continue;
    int idx = k + 1;
    if (idx >= static_cast<int>(scan->betti[i].size()) || scan->betti[i][idx] == 0) continue;
    if (!have || mask_lex_less(m, best)) {
      have = true;
      best = m;
    }
  }
  if (!have) return v;
  v.holds = false;
  ChordalityWitness w;
  w.vertex_mask = best;
  w.vertices = mask_labels(c, best);
  SimplicialComplex sub = induced(c, Face{best});
  with_field(fs, [&](const auto& f) {
    auto z = nonbounding_cycle(f, sub, k);
    if (!z) throw std::runtime_error("internal: scan found homology but no witness cycle");
    w.cycle = format_chain(f, c, *z);
  });
  v.witness = std::move(w);
  return v;
}

ChordalityVerdict is_resolution_chordal(const FieldSpec& fs, const RelativeComplex& pair, int k) {
  if (k < 0) throw std::invalid_argument("chordality degree must be >= 0");
  ChordalityVerdict v;
  v.kind = "resolution";
  v.k = k;
  v.field = fs;
  const SimplicialComplex& total = pair.total;
  if (!scan_feasible(total))
    throw std::runtime_error("relative chordality needs a subset scan, but the support is too large");
  std::vector<std::uint64_t> masks;
  for_each_submask(total.support().bits, [&](std::uint64_t m) { masks.push_back(m); });
  std::sort(masks.begin(), masks.end(), mask_lex_less);
  for (std::uint64_t m : masks) {
    RelativeComplex sub(induced(total, Face{m}), induced(pair.removed, Face{m}));
    int b = 0;
    with_field(fs, [&](const auto& f) { b = betti_rel(f, sub, k); });
    if (b == 0) continue;
    v.holds = false;
    ChordalityWitness w;
    w.vertex_mask = m;
    w.vertices = mask_labels(total, m);
    with_field(fs, [&](const auto& f) {
      auto z = nonbounding_cycle(f, sub, k);
      if (!z) throw std::runtime_error("internal: relative homology without witness cycle");
      w.cycle = format_chain(f, total, *z);
    });
    v.witness = std::move(w);
    return v;
  }
  return v;
}

ChordalityVerdict is_decomposition_chordal(const FieldSpec& fs, const SimplicialComplex& c, int k) {
  ChordalityVerdict v = is_resolution_chordal(fs, clique_complex(c, k), k);
  v.kind = "decomposition";
  return v;
}

int leray_number(const FieldSpec& fs, const SimplicialComplex& c) {
  if (c.dim() <= -1) return 0;
  if (c.contains(c.support())) return 0;
  if (!scan_feasible(c)) throw std::runtime_error("leray number needs a subset scan, but the support is too large");
  auto scan = scan_subsets_cached(fs, c);
  int L = 0;
  for (const auto& bv : scan->betti)
    for (int d = 0; d + 1 < static_cast<int>(bv.size()); ++d)
      if (bv[d + 1] != 0) L = std::max(L, d + 1);
  return L;
}

std::optional<bool> leray_at_most(const FieldSpec& fs, const SimplicialComplex& c, int k) {
  if (k < 0) return c.dim() == -2;
  bool fast = true;
  for (int d = std::max(k, 0); d <= c.dim(); ++d)
    if (global_cycle_dim(fs, c, d) != 0) {
      fast = false;
      break;
    }
  if (fast && k >= 1) return true;
  if (fast && k == 0 && (c.dim() <= -1 || c.contains(c.support()))) return true;
  if (scan_feasible(c)) return leray_number(fs, c) <= k;
  return std::nullopt;
}

int BettiTable::reg() const {
  int r = 0;
  for (int a = 0; a < static_cast<int>(beta.size()); ++a)
    for (int j = 0; j < static_cast<int>(beta[a].size()); ++j)
      if (beta[a][j] != 0) r = std::max(r, j - a);
  return r;
}

int BettiTable::pdim() const {
  int p = 0;
  for (int a = 0; a < static_cast<int>(beta.size()); ++a)
    for (long long x : beta[a])
      if (x != 0) p = std::max(p, a);
  return p;
}

std::optional<int> BettiTable::t(int a) const {
  if (a < 0 || a >= static_cast<int>(beta.size())) return std::nullopt;
  std::optional<int> best;
  for (int j = 0; j < static_cast<int>(beta[a].size()); ++j)
    if (beta[a][j] != 0) best = j;
  return best;
}

BettiTable betti_table(const FieldSpec& fs, const SimplicialComplex& c) {
  BettiTable t;
  t.field = fs;
  t.n = static_cast<int>(c.labels().size());
  t.beta.assign(t.n + 1, std::vector<long long>(t.n + 1, 0));
  if (c.dim() == -2) return t;
  if (!scan_feasible(c)) throw std::runtime_error("Betti table needs a subset scan, but the support is too large");
  auto scan = scan_subsets_cached(fs, c);
  int unused = t.n - c.support().card();
  auto binom = binomials(t.n);
  for (std::size_t i = 0; i < scan->masks.size(); ++i) {
    int s = std::popcount(scan->masks[i]);
    const auto& bv = scan->betti[i];
    for (int d = -1; d + 1 < static_cast<int>(bv.size()); ++d) {
      int h = bv[d + 1];
      if (h == 0) continue;
      for (int e = 0; e <= unused; ++e) {
        int j = s + e;
        int a = j - d - 1;
        if (a < 0 || a > t.n || j > t.n) continue;
        t.beta[a][j] += binom[unused][e] * h;
      }
    }
  }
  return t;
}

int regularity(const FieldSpec& fs, const SimplicialComplex& c) {
  return betti_table(fs, c).reg();
}

LinearResolutionReport has_linear_resolution(const FieldSpec& fs, const SimplicialComplex& c) {
  LinearResolutionReport r;
  if (c.dim() == -2) {
    r.verdict = LinearResolution::not_applicable;
    r.reason = "unit ideal: the void complex has the empty set as a missing face";
    return r;
  }
  std::vector<Face> mf = missing_faces(c);
  if (mf.empty()) {
    r.verdict = LinearResolution::not_applicable;
    r.reason = "zero ideal: the complex is a full simplex";
    return r;
  }
  int d = mf.front().dim();
  for (const Face& m : mf)
    if (m.dim() != d) {
      r.verdict = LinearResolution::not_applicable;
      r.reason = "missing faces span several dimensions, so linearity does not apply";
      return r;
    }
  r.generator_dim = d;
  r.reg = regularity(fs, c);
  r.verdict = (r.reg <= d) ? LinearResolution::yes : LinearResolution::no;
  r.reason = (r.verdict == LinearResolution::yes)
                 ? "regularity equals the generator degree minus one"
                 : "regularity exceeds the common missing-face dimension";
  return r;
}

bool is_cohen_macaulay(const FieldSpec& fs, const SimplicialComplex& c) {
  if (c.dim() == -2) return true;
  bool ok = true;
  with_field(fs, [&](const auto& f) {
    for (int d = -1; d <= c.dim() && ok; ++d) {
      for (const Face& face : c.faces_of_dim(d)) {
        SimplicialComplex lk = link(c, face);
        if (lk.dim() < 0) continue;
        std::vector<int> bv = betti_all(f, lk);
        for (int i = 0; i + 1 < static_cast<int>(bv.size()); ++i) {
          if (bv[i] != 0) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
  });
  return ok;
}

PropagationReport check_propagation(const FieldSpec& fs, const SimplicialComplex& c, int k) {
  if (k < 1) throw std::invalid_argument("propagation is stated for k >= 1");
  PropagationReport r;
  r.k = k;
  r.field = fs;
  r.hyp_no_big_missing = true;
  for (const Face& m : missing_faces(c))
    if (m.dim() > k) {
      r.hyp_no_big_missing = false;
      break;
    }
  r.hyp_chordal = true;
  for (int l = k; l <= 2 * k - 1; ++l) {
    if (!is_resolution_chordal(fs, c, l).holds) {
      r.hyp_chordal = false;
      r.hyp_fail_level = l;
      break;
    }
  }
  r.concl_chordal = true;
  for (int l = k; l <= c.dim(); ++l) {
    if (!is_resolution_chordal(fs, c, l).holds) {
      r.concl_chordal = false;
      r.concl_fail_level = l;
      break;
    }
  }
  auto lb = leray_at_most(fs, c, k);
  r.leray_decided = lb.has_value();
  r.concl_leray = lb.value_or(false);
  if (scan_feasible(c)) {
    BettiTable t = betti_table(fs, c);
    r.hs_checked = true;
    r.hs_ok = true;
    int p = t.pdim();
    for (int a = 0; a <= p; ++a) {
      auto ta = t.t(a);
      r.t_values.push_back(ta ? *ta : -1);
    }
    auto t1 = t.t(1);
    for (int a = 1; a <= p && t1; ++a) {
      auto ta = t.t(a);
      auto tam1 = t.t(a - 1);
      if (ta && tam1 && *ta > *tam1 + *t1) {
        r.hs_ok = false;
        break;
      }
    }
  }
  return r;
}

ResolveOutcome resolve_cycle_text(const FieldSpec& fs, const SimplicialComplex& amb,
                                  const std::string& cycle_text) {
  ResolveOutcome out;
  with_field(fs, [&](const auto& f) {
    auto z = parse_chain(f, amb, cycle_text);
    auto c = resolve_cycle(f, amb, z);
    if (c) {
      out.found = true;
      out.chain = format_chain(f, amb, *c);
    }
  });
  return out;
}

DecomposeOutcome decompose_cycle_text(const FieldSpec& fs, const SimplicialComplex& amb,
                                      const std::string& cycle_text) {
  DecomposeOutcome out;
  with_field(fs, [&](const auto& f) {
    auto z = parse_chain(f, amb, cycle_text);
    auto terms = decompose_cycle(f, amb, z);
    if (!terms) return;
    out.found = true;
    for (const auto& t : *terms) {
      std::vector<std::string> labs;
      for (int v : t.support.vertices()) labs.push_back(amb.label_of(v));
      out.terms.emplace_back(std::move(labs), f.str(t.coeff));
    }
  });
  return out;
}

}  // namespace chordal
