#include "chordal/dirac.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>

#include "chordal/chordality.hpp"
#include "chordal/homology.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

FaceAdjacencyGraph face_adjacency_graph(const SimplicialComplex& c, int k) {
  if (k < 1) throw std::invalid_argument("face adjacency graph: k must be at least 1");
  FaceAdjacencyGraph g;
  g.k = k;
  g.nodes = c.faces_of_dim(k);
  const int n = static_cast<int>(g.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Face inter = g.nodes[i].intersect(g.nodes[j]);
      if (inter.card() == k) g.edges.push_back({i, j, inter});
    }
  return g;
}

CutMode parse_cut_mode(const std::string& s) {
  if (s == "edge" || s == "edge-label" || s == "edge_label") return CutMode::edge_label;
  if (s == "face" || s == "face-containment" || s == "face_containment")
    return CutMode::face_containment;
  throw std::invalid_argument("unknown cut mode '" + s + "' (expected edge-label or face-containment)");
}

std::string cut_mode_name(CutMode m) {
  return m == CutMode::edge_label ? "edge-label" : "face-containment";
}

namespace {

std::vector<Face> sorted_cut(const std::vector<Face>& cut) {
  std::vector<Face> cs = cut;
  std::sort(cs.begin(), cs.end(), FaceLexLess{});
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

bool cut_member(const std::vector<Face>& cs, Face f) {
  return std::binary_search(cs.begin(), cs.end(), f, FaceLexLess{});
}

struct Partition {
  FaceAdjacencyGraph g;
  std::vector<char> alive;  // face_containment mode can delete nodes
  std::vector<int> comp;    // component id per node, -1 for dead nodes
  int n_comps = 0;
};

Partition partition_by_cut(const SimplicialComplex& c, const std::vector<Face>& cs, int k,
                           CutMode mode) {
  Partition p;
  p.g = face_adjacency_graph(c, k);
  const int n = static_cast<int>(p.g.nodes.size());
  p.alive.assign(n, 1);
  if (mode == CutMode::face_containment) {
    for (int i = 0; i < n; ++i)
      for (Face m : cs)
        if (m.is_subset_of(p.g.nodes[i])) {
          p.alive[i] = 0;
          break;
        }
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : p.g.edges) {
    if (!p.alive[e.a] || !p.alive[e.b]) continue;
    if (mode == CutMode::edge_label && cut_member(cs, e.label)) continue;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  p.comp.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (!p.alive[s] || p.comp[s] >= 0) continue;
    int id = p.n_comps++;
    std::queue<int> q;
    q.push(s);
    p.comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (p.comp[v] < 0) {
          p.comp[v] = id;
          q.push(v);
        }
    }
  }
  return p;
}

void validate_cut_inputs(const SimplicialComplex& c, const std::vector<Face>& cs, Face sigma,
                         Face tau, int k) {
  if (k < 1) throw std::invalid_argument("cut: k must be at least 1");
  if (!c.contains(sigma) || !c.contains(tau))
    throw std::invalid_argument("cut: sigma and tau must be faces of the complex");
  for (Face m : cs) {
    if (m.dim() != k - 1 || !c.contains(m))
      throw std::invalid_argument("cut: every member must be a (k-1)-face of the complex");
    if (sigma.is_subset_of(m) || tau.is_subset_of(m))
      throw std::invalid_argument("cut: a member contains sigma or tau");
  }
}

}  // namespace

CutReport is_cut(const SimplicialComplex& c, const std::vector<Face>& cut, Face sigma, Face tau,
                 int k, CutMode mode) {
  std::vector<Face> cs = sorted_cut(cut);
  validate_cut_inputs(c, cs, sigma, tau, k);
  Partition p = partition_by_cut(c, cs, k, mode);
  const int n = static_cast<int>(p.g.nodes.size());

  bool sigma_covered = false, tau_covered = false;
  std::vector<char> sigma_comp(p.n_comps, 0), tau_comp(p.n_comps, 0);
  for (int i = 0; i < n; ++i) {
    bool in_s = sigma.is_subset_of(p.g.nodes[i]);
    bool in_t = tau.is_subset_of(p.g.nodes[i]);
    sigma_covered |= in_s;
    tau_covered |= in_t;
    if (!p.alive[i]) continue;
    if (in_s) sigma_comp[p.comp[i]] = 1;
    if (in_t) tau_comp[p.comp[i]] = 1;
  }
  if (!sigma_covered) throw std::invalid_argument("cut: sigma lies in no k-face");
  if (!tau_covered) throw std::invalid_argument("cut: tau lies in no k-face");

  CutReport r;
  r.k = k;
  r.mode = mode;
  r.cut = std::move(cs);
  r.source = sigma;
  r.target = tau;
  r.is_cut = true;
  for (int id = 0; id < p.n_comps; ++id)
    if (sigma_comp[id] && tau_comp[id]) r.is_cut = false;

  std::vector<Face> src, tgt;
  for (int i = 0; i < n; ++i) {
    if (!p.alive[i]) continue;
    if (sigma_comp[p.comp[i]]) src.push_back(p.g.nodes[i]);
    if (tau_comp[p.comp[i]]) tgt.push_back(p.g.nodes[i]);
  }
  r.comp_source = complex_from_faces(c, std::move(src));
  r.comp_target = complex_from_faces(c, std::move(tgt));
  return r;
}

CutReport minimal_cut(const SimplicialComplex& c, Face sigma, Face tau, int k, CutMode mode) {
  if (k < 1) throw std::invalid_argument("cut: k must be at least 1");
  if (!c.contains(sigma) || !c.contains(tau))
    throw std::invalid_argument("cut: sigma and tau must be faces of the complex");
  const auto& kfaces = c.faces_of_dim(k);
  if (kfaces.size() < 2) throw std::invalid_argument("cut: need at least two k-faces");
  Face both = sigma.unite(tau);
  bool has_s = false, has_t = false;
  for (Face f : kfaces) {
    if (both.is_subset_of(f))
      throw std::invalid_argument("cut: a k-face contains both sigma and tau");
    has_s |= sigma.is_subset_of(f);
    has_t |= tau.is_subset_of(f);
  }
  if (!has_s) throw std::invalid_argument("cut: sigma lies in no k-face");
  if (!has_t) throw std::invalid_argument("cut: tau lies in no k-face");

  // start from the (k-1)-subfaces of the k-faces around sigma, minus those
  // containing sigma; any escaping path crosses one of these
  std::vector<Face> cur;
  for (Face f : kfaces) {
    if (!sigma.is_subset_of(f)) continue;
    for (int v : f.vertices()) {
      Face g = f.without(v);
      if (!sigma.is_subset_of(g)) cur.push_back(g);
    }
  }
  std::sort(cur.begin(), cur.end(), FaceLexLess{});
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  if (!is_cut(c, cur, sigma, tau, k, mode).is_cut)
    throw std::logic_error("cut: star boundary unexpectedly fails to separate");

  // one greedy pass in lex order is enough: dropping members never turns a
  // non-cut subset into a cut, so every kept member stays necessary
  for (std::size_t i = 0; i < cur.size();) {
    std::vector<Face> smaller = cur;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_cut(c, smaller, sigma, tau, k, mode).is_cut)
      cur = std::move(smaller);
    else
      ++i;
  }

  CutReport r = is_cut(c, cur, sigma, tau, k, mode);
  r.minimality_checked = true;
  r.is_minimal = true;
  for (std::size_t i = 0; i < cur.size() && r.is_minimal; ++i) {
    std::vector<Face> smaller = cur;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_cut(c, smaller, sigma, tau, k, mode).is_cut) r.is_minimal = false;
  }
  return r;
}

CutReport is_homology_cut(const FieldSpec& fs, const SimplicialComplex& c,
                          const std::vector<Face>& cut, Face sigma, Face tau, int k,
                          CutMode mode) {
  CutReport r = is_cut(c, cut, sigma, tau, k, mode);
  if (!r.is_cut) throw std::invalid_argument("homology cut: the given set does not separate sigma from tau");

  SimplicialComplex cc = complex_from_faces(c, r.cut);
  Face csupp = cc.support();
  const std::vector<Face>& rows = c.faces_of_dim(k - 1);

  // when the cut complex is a graph (k == 2), a union-find cycle test screens
  // out the many W whose induced piece is a forest before any elimination runs
  std::array<int, 64> vpos{};
  vpos.fill(-1);
  {
    int idx = 0;
    for (int v : csupp.vertices()) vpos[static_cast<std::size_t>(v)] = idx++;
  }
  auto has_cycle = [&](Face W) -> bool {
    std::array<int, 64> parent{};
    const int m = csupp.card();
    for (int i = 0; i < m; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (Face mem : r.cut) {
      if (!mem.is_subset_of(W)) continue;
      auto vs = mem.vertices();
      int a = find(vpos[static_cast<std::size_t>(vs[0])]);
      int b = find(vpos[static_cast<std::size_t>(vs[1])]);
      if (a == b) return true;
      parent[static_cast<std::size_t>(a)] = b;
    }
    return false;
  };

  with_field(fs, [&](const auto& f) {
    auto side_ok = [&](const SimplicialComplex& comp) -> bool {
      const auto& side_faces = comp.faces_of_dim(k);
      std::vector<std::pair<Face, Face>> keyed;  // (k-face, its vertices inside the cut)
      keyed.reserve(side_faces.size());
      for (Face F : side_faces) keyed.emplace_back(F, F.intersect(csupp));

      bool ok = true;
      for_each_submask(csupp.bits, [&](std::uint64_t wbits) {
        if (!ok) return;
        Face W{wbits};
        if (k == 1 && W.card() < 2) return;   // no reduced 0-cycles in a point
        if (k == 2 && !has_cycle(W)) return;  // forest: no 1-cycles to bound
        SimplicialComplex cw = induced(cc, W);
        if (cw.dim() < k - 1) return;
        const auto& zcols = cw.faces_of_dim(k - 1);
        auto zb = kernel_basis(f, boundary_matrix(f, cw, k - 1));
        if (zb.empty()) return;

        std::vector<Face> allowed;
        for (const auto& [F, key] : keyed)
          if (key.is_subset_of(W)) allowed.push_back(F);
        auto A = boundary_matrix_between(f, rows, allowed);

        // embed the cycles into the ambient (k-1)-face coordinates
        std::vector<std::vector<typename std::decay_t<decltype(f)>::Elem>> vecs;
        vecs.reserve(zb.size());
        for (const auto& x : zb) {
          std::vector<typename std::decay_t<decltype(f)>::Elem> v(rows.size(), f.zero());
          for (std::size_t j = 0; j < zcols.size(); ++j) {
            int ri = face_row_index(rows, zcols[j]);
            if (ri < 0) throw std::logic_error("homology cut: cut face missing from the complex");
            v[static_cast<std::size_t>(ri)] = x[j];
          }
          vecs.push_back(std::move(v));
        }
        if (!image_contains(f, A, vecs)) ok = false;
      });
      return ok;
    };
    r.hom_source = side_ok(*r.comp_source);
    r.hom_target = side_ok(*r.comp_target);
  });
  r.homology_checked = true;
  return r;
}

std::optional<std::pair<Face, Face>> two_sided_elk_pair(const FieldSpec& fs,
                                                        const SimplicialComplex& c, Face sigma,
                                                        int k, CutMode mode) {
  if (k < 1) throw std::invalid_argument("homology cut pair: k must be at least 1");
  if (!c.contains(sigma))
    throw std::invalid_argument("homology cut pair: sigma must be a face of the complex");
  SimplicialComplex elk = extended_link(c, sigma);
  if (elk.dim() < k - 1) return std::nullopt;
  std::vector<Face> cutb = elk.faces_of_dim(k - 1);
  if (cutb.empty()) return std::nullopt;
  std::sort(cutb.begin(), cutb.end(), FaceLexLess{});
  SimplicialComplex skk = skeleton(c, k);
  Partition p = partition_by_cut(skk, cutb, k, mode);
  std::vector<Face> rep_face(static_cast<std::size_t>(p.n_comps));
  std::vector<char> seen(static_cast<std::size_t>(p.n_comps), 0);
  for (std::size_t i = 0; i < p.g.nodes.size(); ++i) {
    if (!p.alive[i]) continue;
    auto id = static_cast<std::size_t>(p.comp[i]);
    if (!seen[id]) {
      seen[id] = 1;
      rep_face[id] = p.g.nodes[i];  // nodes come in lex order
    }
  }
  for (std::size_t a = 0; a < rep_face.size(); ++a)
    for (std::size_t b = a + 1; b < rep_face.size(); ++b) {
      CutReport hr = is_homology_cut(fs, skk, cutb, rep_face[a], rep_face[b], k, mode);
      if (hr.two_sided()) return std::make_pair(rep_face[a], rep_face[b]);
    }
  return std::nullopt;
}

bool is_complete_skeleton(const SimplicialComplex& c, int k) {
  if (c.dim() == -2) return true;
  Face supp = c.support();
  int j = std::min(k + 1, supp.card());
  if (j <= 0) return true;
  std::vector<Face> subs;
  subsets_of_card(supp, j, subs);
  for (Face s : subs)
    if (!c.contains(s)) return false;
  return true;
}

ExtendedLinkCut find_extended_link_minimal_cut(const SimplicialComplex& c, int k, CutMode mode) {
  if (k < 1) throw std::invalid_argument("extended-link cut: k must be at least 1");
  if (c.dim() != k)
    throw std::invalid_argument("extended-link cut: complex must be pure of dimension k");
  for (Face f : c.facets())
    if (f.dim() != k)
      throw std::invalid_argument("extended-link cut: complex must be pure of dimension k");
  const auto& kfaces = c.faces_of_dim(k);
  if (kfaces.size() < 2)
    throw std::invalid_argument("extended-link cut: need at least two k-faces");
  if (is_complete_skeleton(c, k))
    throw std::invalid_argument(
        "extended-link cut: the complete k-skeleton of a simplex admits no such cut");
  {
    Partition whole = partition_by_cut(c, {}, k, mode);
    if (whole.n_comps != 1)
      throw std::invalid_argument("extended-link cut: face adjacency graph is disconnected");
  }

  auto attempt = [&](Face rho) -> std::optional<CutReport> {
    SimplicialComplex elk = extended_link(c, rho);
    if (elk.dim() < k - 1) return std::nullopt;
    std::vector<Face> members = elk.faces_of_dim(k - 1);
    if (members.empty()) return std::nullopt;
    Face sF, tF;
    bool have_s = false, have_t = false;
    for (Face F : kfaces) {  // lex order, so both picks are lex-least
      if (!have_s && rho.is_subset_of(F)) {
        sF = F;
        have_s = true;
      }
      if (!have_t && !rho.is_subset_of(F)) {
        tF = F;
        have_t = true;
      }
      if (have_s && have_t) break;
    }
    if (!have_s || !have_t) return std::nullopt;
    CutReport r = is_cut(c, members, sF, tF, k, mode);
    if (!r.is_cut) return std::nullopt;
    for (std::size_t i = 0; i < r.cut.size(); ++i) {
      std::vector<Face> smaller = r.cut;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_cut(c, smaller, sF, tF, k, mode).is_cut) return std::nullopt;
    }
    r.minimality_checked = true;
    r.is_minimal = true;
    return r;
  };

  // refinement pass: start from a (k-1)-face tau; if its extended link is not
  // already a minimal cut, look for tau' in eLk_tau with St_tau' inside
  // St_tau, let sigma' = tau ∪ tau', and intersect the facets of sigma'
  // whose star is just sigma'
  for (Face tau : c.faces_of_dim(k - 1)) {
    if (auto r = attempt(tau)) return {tau, std::move(*r), true};
    SimplicialComplex elk_tau = extended_link(c, tau);
    if (elk_tau.dim() < k - 1) continue;
    for (Face taup : elk_tau.faces_of_dim(k - 1)) {
      bool star_sub = true;
      for (Face F : kfaces)
        if (taup.is_subset_of(F) && !tau.is_subset_of(F)) {
          star_sub = false;
          break;
        }
      if (!star_sub) continue;
      Face sigmap = tau.unite(taup);
      if (sigmap.card() != k + 1 || !c.contains(sigmap)) continue;
      Face acc = sigmap;
      bool any = false;
      for (int v : sigmap.vertices()) {
        Face g = sigmap.without(v);
        bool only_here = true;
        for (Face F : kfaces)
          if (g.is_subset_of(F) && !(F == sigmap)) {
            only_here = false;
            break;
          }
        if (only_here) {
          acc = acc.intersect(g);
          any = true;
        }
      }
      if (!any || acc.empty()) continue;
      if (auto r = attempt(acc)) return {acc, std::move(*r), true};
    }
  }

  // exhaustive fallback over every face of dimension <= k-1
  for (int d = 0; d <= k - 1; ++d)
    for (Face rho : c.faces_of_dim(d))
      if (auto r = attempt(rho)) return {rho, std::move(*r), false};
  throw std::runtime_error("extended-link cut: no face of dimension below k gives a minimal cut");
}

namespace {

struct DiracCtx {
  std::uint64_t budget = 0;
  std::uint64_t checks = 0;
  std::map<std::string, DiracResult> memo;  // certified/none only
};

DiracResult dirac_search(const SimplicialComplex& c, int k, DiracCtx& ctx) {
  DiracResult res;
  if (is_complete_skeleton(c, k)) {
    auto cert = std::make_shared<DiracCertificate>();
    cert->k = k;
    cert->base = true;
    res.status = DiracStatus::certified;
    res.cert = std::move(cert);
    return res;
  }
  std::string key = canonical_key(c) + "|" + std::to_string(k);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  std::optional<SimplicialComplex> cl_k;  // clique_complex(c, k), computed on demand
  bool saw_unknown = false;
  for (int d = 0; d <= k - 1 && res.status != DiracStatus::certified; ++d) {
    for (Face s : c.faces_of_dim(d)) {
      if (ctx.checks >= ctx.budget) {
        saw_unknown = true;
        break;
      }
      ++ctx.checks;
      SimplicialComplex elk = extended_link(c, s);
      DiracResult relk = dirac_search(elk, k - 1, ctx);
      if (relk.status == DiracStatus::unknown) saw_unknown = true;
      if (relk.status != DiracStatus::certified) continue;
      if (!cl_k) cl_k = clique_complex(c, k);
      if (!(clique_complex(elk, k - 1) == extended_link(*cl_k, s))) continue;
      DiracResult rrest = dirac_search(delete_face(c, s), k, ctx);
      if (rrest.status == DiracStatus::unknown) saw_unknown = true;
      if (rrest.status != DiracStatus::certified) continue;
      auto cert = std::make_shared<DiracCertificate>();
      cert->k = k;
      cert->base = false;
      cert->sigma = s;
      cert->rest = rrest.cert;
      cert->elk = relk.cert;
      res.status = DiracStatus::certified;
      res.cert = std::move(cert);
      break;
    }
  }
  if (res.status != DiracStatus::certified) {
    if (saw_unknown) {
      res.status = DiracStatus::unknown;
      return res;  // budget-dependent, do not memoize
    }
    res.status = DiracStatus::none;
  }
  ctx.memo[key] = res;
  return res;
}

bool replay(const SimplicialComplex& c, const DiracCertificate& cert) {
  if (cert.base) return is_complete_skeleton(c, cert.k);
  if (cert.k < 1) return false;
  Face s = cert.sigma;
  if (s.dim() < 0 || s.dim() > cert.k - 1 || !c.contains(s)) return false;
  if (!cert.rest || !cert.elk) return false;
  if (cert.rest->k != cert.k || cert.elk->k != cert.k - 1) return false;
  SimplicialComplex elk = extended_link(c, s);
  if (!(clique_complex(elk, cert.k - 1) == extended_link(clique_complex(c, cert.k), s)))
    return false;
  return replay(elk, *cert.elk) && replay(delete_face(c, s), *cert.rest);
}

}  // namespace

DiracResult is_k_dirac(const SimplicialComplex& c, int k, std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("dirac: k must be at least 1");
  DiracCtx ctx;
  ctx.budget = budget;
  DiracResult r = dirac_search(c, k, ctx);
  r.checks = ctx.checks;
  return r;
}

bool replay_certificate(const SimplicialComplex& c, const DiracCertificate& cert) {
  return replay(c, cert);
}

ReversePropagationReport check_reverse_propagation(const FieldSpec& fs,
                                                   const SimplicialComplex& c, Face sigma,
                                                   int k, CutMode mode) {
  if (k < 1) throw std::invalid_argument("reverse propagation: k must be at least 1");
  if (sigma.dim() != k || !c.contains(sigma))
    throw std::invalid_argument("reverse propagation: sigma must be a k-face of the complex");

  ReversePropagationReport rep;
  rep.k = k;
  rep.field = fs;
  rep.hyp_decomposition_chordal = is_decomposition_chordal(fs, c, k).holds;

  SimplicialComplex elk = extended_link(c, sigma);

  // (b): the (k-1)-faces of eLk_sigma must separate some pair of k-faces of
  // Sk_k with both homology flags true
  rep.hyp_b_pair = two_sided_elk_pair(fs, c, sigma, k, mode);
  rep.hyp_homology_cut = rep.hyp_b_pair.has_value();

  // (c): the k-faces of eLk_sigma must be a (k+1)-cut of Sk_{k+1}, vacuous
  // when the complex has no (k+1)-faces at all
  if (c.dim() <= k) {
    rep.hyp_upper_cut = true;
    rep.hyp_upper_vacuous = true;
  } else {
    SimplicialComplex skk1 = skeleton(c, k + 1);
    std::vector<Face> cutc = elk.dim() >= k ? elk.faces_of_dim(k) : std::vector<Face>{};
    if (!cutc.empty()) {
      std::sort(cutc.begin(), cutc.end(), FaceLexLess{});
      Partition p = partition_by_cut(skk1, cutc, k + 1, mode);
      Face first;
      int first_comp = -1;
      for (std::size_t i = 0; i < p.g.nodes.size() && !rep.hyp_upper_cut; ++i) {
        if (!p.alive[i]) continue;
        if (first_comp < 0) {
          first = p.g.nodes[i];
          first_comp = p.comp[i];
        } else if (p.comp[i] != first_comp) {
          // any node in a different component from the first gives a pair
          CutReport cr = is_cut(skk1, cutc, first, p.g.nodes[i], k + 1, mode);
          if (cr.is_cut) {
            rep.hyp_upper_cut = true;
            rep.hyp_c_pair = {first, p.g.nodes[i]};
          }
        }
      }
    }
  }

  rep.conclusion = is_decomposition_chordal(fs, elk, k - 1).holds;
  return rep;
}

}  // namespace chordal
