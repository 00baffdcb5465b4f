#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chordal/chain.hpp"
#include "chordal/chordality.hpp"
#include "chordal/complex.hpp"
#include "chordal/corpus.hpp"
#include "chordal/dirac.hpp"
#include "chordal/field.hpp"
#include "chordal/homology.hpp"
#include "chordal/io.hpp"
#include "chordal/scan.hpp"

using nlohmann::json;
using namespace chordal;

namespace {

struct Ctx {
  std::string complex_file;
  std::string json_out;
  int threads = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string field_text = "q";
  std::string command_line;
  json report;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

FieldSpec field_of(const Ctx& ctx) { return FieldSpec::parse(ctx.field_text); }

std::string field_name(const FieldSpec& fs) {
  if (fs.kind == FieldSpec::Kind::rational) return "q";
  return "f" + std::to_string(fs.p);
}

SimplicialComplex need_complex(Ctx& ctx) {
  if (ctx.complex_file.empty())
    throw std::runtime_error("this command needs --complex FILE");
  std::string text = load_text_file(ctx.complex_file);
  ctx.report["input"] = ctx.complex_file;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(text)));
  ctx.report["input_hash"] = std::string(buf);
  return parse_complex_text(text);
}

Face parse_face_arg(const SimplicialComplex& c, std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream ss(text);
  std::string tok;
  Face f;
  bool any = false;
  while (ss >> tok) {
    any = true;
    auto idx = c.index_of_label(tok);
    if (!idx) throw std::runtime_error("unknown vertex label '" + tok + "'");
    if (f.has_vertex(*idx)) throw std::runtime_error("repeated vertex label '" + tok + "'");
    f = f.with(*idx);
  }
  if (!any) throw std::runtime_error("empty face argument");
  return f;
}

std::vector<std::string> face_labels(const SimplicialComplex& c, Face f) {
  std::vector<std::string> out;
  for (int v : f.vertices()) out.push_back(c.label_of(v));
  return out;
}

int finish(Ctx& ctx, int code) {
  if (!ctx.json_out.empty()) {
    ctx.report["schema"] = 1;
    ctx.report["command"] = ctx.command_line;
    ctx.report["exit"] = code;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - ctx.t0)
                  .count();
    ctx.report["timing_ms"] = static_cast<long long>(ms);
    std::ofstream out(ctx.json_out);
    out << ctx.report.dump(2) << "\n";
  }
  return code;
}

json witness_json(const ChordalityVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["kind"] = v.kind;
  j["k"] = v.k;
  j["field"] = field_name(v.field);
  j["fast_path"] = v.fast_path;
  if (v.witness) {
    j["witness"]["vertices"] = v.witness->vertices;
    j["witness"]["cycle"] = v.witness->cycle;
  }
  return j;
}

void print_verdict(const ChordalityVerdict& v) {
  std::cout << v.kind << " " << v.k << "-chordal over " << field_name(v.field) << ": "
            << (v.holds ? "true" : "false");
  if (v.fast_path) std::cout << "  (no global cycles, no scan needed)";
  std::cout << "\n";
  if (v.witness) {
    std::cout << "witness vertex set:";
    for (const auto& s : v.witness->vertices) std::cout << ' ' << s;
    std::cout << "\nwitness cycle:\n" << v.witness->cycle;
  }
}

json cut_json(const SimplicialComplex& c, const CutReport& r) {
  json j;
  j["k"] = r.k;
  j["mode"] = cut_mode_name(r.mode);
  j["sigma"] = face_labels(c, r.source);
  j["tau"] = face_labels(c, r.target);
  json cut = json::array();
  for (Face m : r.cut) cut.push_back(face_labels(c, m));
  j["cut"] = cut;
  j["is_cut"] = r.is_cut;
  if (r.minimality_checked) j["is_minimal"] = r.is_minimal;
  if (r.homology_checked) {
    j["homology_sigma_side"] = r.hom_source;
    j["homology_tau_side"] = r.hom_target;
    j["two_sided"] = r.two_sided();
  }
  auto side_faces = [&](const SimplicialComplex& comp) {
    json arr = json::array();
    for (Face f : comp.facets()) arr.push_back(face_labels(c, f));
    return arr;
  };
  if (r.comp_source) j["component_sigma"] = side_faces(*r.comp_source);
  if (r.comp_target) j["component_tau"] = side_faces(*r.comp_target);
  return j;
}

void print_cut(const SimplicialComplex& c, const CutReport& r) {
  std::cout << "cut (" << cut_mode_name(r.mode) << ", k=" << r.k << "):";
  for (Face m : r.cut) std::cout << " {" << c.face_to_string(m) << "}";
  std::cout << "\nseparates {" << c.face_to_string(r.source) << "} from {"
            << c.face_to_string(r.target) << "}: " << (r.is_cut ? "yes" : "no") << "\n";
  if (r.minimality_checked)
    std::cout << "inclusion-minimal: " << (r.is_minimal ? "yes" : "no") << "\n";
  if (r.homology_checked)
    std::cout << "homology flags: sigma side " << (r.hom_source ? "true" : "false")
              << ", tau side " << (r.hom_target ? "true" : "false") << ", two-sided "
              << (r.two_sided() ? "true" : "false") << "\n";
}

json dirac_cert_json(const SimplicialComplex& c, const DiracCertificate& cert) {
  json j;
  j["k"] = cert.k;
  if (cert.base) {
    j["base"] = true;
    return j;
  }
  j["sigma"] = face_labels(c, cert.sigma);
  j["link"] = dirac_cert_json(c, *cert.elk);
  j["rest"] = dirac_cert_json(c, *cert.rest);
  return j;
}

void print_dirac_cert(const SimplicialComplex& c, const DiracCertificate& cert, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (cert.base) {
    std::cout << pad << "base: complete " << cert.k << "-skeleton\n";
    return;
  }
  std::cout << pad << "eliminate {" << c.face_to_string(cert.sigma) << "} at k=" << cert.k
            << "\n";
  print_dirac_cert(c, *cert.elk, depth + 1);
  print_dirac_cert(c, *cert.rest, depth + 1);
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  {
    std::ostringstream cl;
    for (int i = 0; i < argc; ++i) {
      if (i) cl << ' ';
      cl << argv[i];
    }
    ctx.command_line = cl.str();
  }

  CLI::App app{"exact chordality, Dirac and cut computations on simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--complex", ctx.complex_file, "facet file of the input complex");
  app.add_option("--json", ctx.json_out, "write a JSON report here");
  app.add_option("--threads", ctx.threads, "OpenMP thread count (0 = library default)");
  auto* seed_opt = app.add_option("--seed", ctx.seed, "seed for random corpus models");
  app.add_option("--field", ctx.field_text, "coefficient field: q, f2, f3, fp:P")
      ->default_val("q");

  std::string kind = "resolution";
  int k = 1;
  std::uint64_t budget = 1000000;
  std::string cycle_file, sigma_text, tau_text, cut_text, cut_mode_text = "edge";
  bool want_minimal = false, want_homology = false, want_table = false;
  std::string ground_text = "declared", corpus_name, corpus_params, out_file;

  CLI::App* cmd_check = app.add_subcommand("check", "decide resolution/decomposition chordality");
  cmd_check->add_option("--kind", kind, "resolution or decomposition")
      ->check(CLI::IsMember({"resolution", "decomposition"}));
  cmd_check->add_option("--k", k, "degree")->required();

  CLI::App* cmd_resolve = app.add_subcommand("resolve", "resolve a cycle within its support");
  cmd_resolve->add_option("--cycle", cycle_file, "chain file")->required();

  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "write a cycle as a sum of complete cycles");
  cmd_decompose->add_option("--cycle", cycle_file, "chain file")->required();

  app.add_subcommand("leray", "Leray number");

  CLI::App* cmd_reg = app.add_subcommand("regularity", "Castelnuovo-Mumford regularity");
  cmd_reg->add_flag("--table", want_table, "print the graded Betti table");

  app.add_subcommand("linear-resolution", "does the Stanley-Reisner ideal have one?");
  app.add_subcommand("cm", "Reisner Cohen-Macaulay test");

  CLI::App* cmd_dual = app.add_subcommand("dual", "Alexander dual");
  cmd_dual->add_option("--ground", ground_text, "declared or support")
      ->check(CLI::IsMember({"declared", "support"}));

  CLI::App* cmd_dirac = app.add_subcommand("dirac", "search for a k-Dirac certificate");
  cmd_dirac->add_option("--k", k, "degree")->required();
  cmd_dirac->add_option("--budget", budget, "candidate budget for the search");

  CLI::App* cmd_cut = app.add_subcommand("cut", "cut verification between sigma and tau");
  cmd_cut->add_option("--sigma", sigma_text, "face, labels separated by commas")->required();
  cmd_cut->add_option("--tau", tau_text, "face")->required();
  cmd_cut->add_option("--k", k, "degree")->required();
  cmd_cut->add_option("--cut", cut_text,
                      "semicolon-separated (k-1)-faces; defaults to the minimal cut search");
  cmd_cut->add_flag("--minimal", want_minimal, "compute the greedy minimal cut");
  cmd_cut->add_flag("--homology", want_homology, "check the homology flags on both sides");
  cmd_cut->add_option("--cut-mode", cut_mode_text, "edge or face")
      ->check(CLI::IsMember({"edge", "face", "edge-label", "face-containment"}));

  CLI::App* cmd_elk = app.add_subcommand("elkcut", "find a minimal extended-link cut");
  cmd_elk->add_option("--k", k, "degree")->required();
  cmd_elk->add_option("--cut-mode", cut_mode_text, "edge or face")
      ->check(CLI::IsMember({"edge", "face", "edge-label", "face-containment"}));

  CLI::App* cmd_rev = app.add_subcommand("reverse-prop", "reverse propagation hypotheses check");
  cmd_rev->add_option("--sigma", sigma_text, "k-face")->required();
  cmd_rev->add_option("--k", k, "degree")->required();

  CLI::App* cmd_prop = app.add_subcommand("propagation", "chordality propagation check");
  cmd_prop->add_option("--k", k, "degree")->required();

  CLI::App* cmd_corpus = app.add_subcommand("corpus", "emit a named or random complex");
  cmd_corpus->add_option("--name", corpus_name, "catalog or model name")->required();
  cmd_corpus->add_option("--params", corpus_params, "comma-separated integers");
  cmd_corpus->add_option("--out", out_file, "write the facet file here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  ctx.seed_set = seed_opt->count() > 0;
  if (ctx.threads > 0) omp_set_num_threads(ctx.threads);

  try {
    FieldSpec fs = field_of(ctx);
    ctx.report["field"] = field_name(fs);

    if (cmd_check->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      ChordalityVerdict v = kind == "resolution" ? is_resolution_chordal(fs, c, k)
                                                 : is_decomposition_chordal(fs, c, k);
      print_verdict(v);
      ctx.report["check"] = witness_json(v);
      return finish(ctx, v.holds ? 0 : 1);
    }

    if (cmd_resolve->parsed() || cmd_decompose->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      std::string cycle_text = load_text_file(cycle_file);
      if (cmd_resolve->parsed()) {
        ResolveOutcome out = resolve_cycle_text(fs, c, cycle_text);
        if (out.found) {
          std::cout << "resolved by:\n" << out.chain;
          ctx.report["resolve"] = {{"found", true}, {"chain", out.chain}};
          return finish(ctx, 0);
        }
        std::cout << "no resolution within the cycle's support\n";
        ctx.report["resolve"] = {{"found", false}};
        return finish(ctx, 1);
      }
      DecomposeOutcome out = decompose_cycle_text(fs, c, cycle_text);
      if (!out.found) {
        std::cout << "no decomposition into complete cycles\n";
        ctx.report["decompose"] = {{"found", false}};
        return finish(ctx, 1);
      }
      std::cout << "decomposition into complete cycles:\n";
      json terms = json::array();
      for (const auto& [labels, coeff] : out.terms) {
        std::cout << "  " << coeff << " : complete cycle on";
        for (const auto& s : labels) std::cout << ' ' << s;
        std::cout << "\n";
        terms.push_back({{"support", labels}, {"coeff", coeff}});
      }
      ctx.report["decompose"] = {{"found", true}, {"terms", terms}};
      return finish(ctx, 0);
    }

    if (app.get_subcommand("leray")->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      int l = leray_number(fs, c);
      std::cout << "leray number over " << field_name(fs) << ": " << l << "\n";
      ctx.report["leray"] = l;
      return finish(ctx, 0);
    }

    if (cmd_reg->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      BettiTable t = betti_table(fs, c);
      std::cout << "regularity over " << field_name(fs) << ": " << t.reg() << "\n";
      ctx.report["regularity"] = t.reg();
      if (want_table) {
        json rows = json::array();
        for (int a = 0; a < static_cast<int>(t.beta.size()); ++a)
          for (int j = 0; j < static_cast<int>(t.beta[static_cast<std::size_t>(a)].size()); ++j)
            if (t.at(a, j) != 0) {
              std::cout << "beta[" << a << "][" << j << "] = " << t.at(a, j) << "\n";
              rows.push_back({{"a", a}, {"j", j}, {"value", t.at(a, j)}});
            }
        ctx.report["betti_table"] = rows;
        ctx.report["pdim"] = t.pdim();
      }
      return finish(ctx, 0);
    }

    if (app.get_subcommand("linear-resolution")->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      LinearResolutionReport r = has_linear_resolution(fs, c);
      ctx.report["linear_resolution"] = {{"reason", r.reason}};
      if (r.verdict == LinearResolution::not_applicable) {
        std::cout << "not applicable: " << r.reason << "\n";
        ctx.report["linear_resolution"]["verdict"] = "not-applicable";
        return finish(ctx, 2);
      }
      bool yes = r.verdict == LinearResolution::yes;
      std::cout << "linear resolution over " << field_name(fs) << ": " << (yes ? "yes" : "no")
                << "  (generators in degree " << r.generator_dim + 2 << ", regularity " << r.reg
                << ")\n";
      ctx.report["linear_resolution"]["verdict"] = yes ? "yes" : "no";
      ctx.report["linear_resolution"]["regularity"] = r.reg;
      return finish(ctx, yes ? 0 : 1);
    }

    if (app.get_subcommand("cm")->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      bool cm = is_cohen_macaulay(fs, c);
      std::cout << "Cohen-Macaulay over " << field_name(fs) << ": " << (cm ? "yes" : "no")
                << "\n";
      ctx.report["cohen_macaulay"] = cm;
      return finish(ctx, cm ? 0 : 1);
    }

    if (cmd_dual->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      DualGround g = ground_text == "support" ? DualGround::support : DualGround::declared;
      SimplicialComplex d = alexander_dual(c, g);
      std::string text = dump_complex(d);
      std::cout << text;
      ctx.report["dual"] = text;
      return finish(ctx, 0);
    }

    if (cmd_dirac->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      DiracResult r = is_k_dirac(c, k, budget);
      ctx.report["dirac"] = {{"k", k}, {"checks", r.checks}};
      if (r.status == DiracStatus::certified) {
        bool replay_ok = replay_certificate(c, *r.cert);
        std::cout << k << "-Dirac: certified (replay " << (replay_ok ? "ok" : "FAILED")
                  << ", " << r.checks << " candidate checks)\n";
        print_dirac_cert(c, *r.cert, 0);
        ctx.report["dirac"]["status"] = "certified";
        ctx.report["dirac"]["replay"] = replay_ok;
        ctx.report["dirac"]["certificate"] = dirac_cert_json(c, *r.cert);
        return finish(ctx, replay_ok ? 0 : 2);
      }
      if (r.status == DiracStatus::none) {
        std::cout << k << "-Dirac: no elimination order exists (search exhausted after "
                  << r.checks << " candidate checks)\n";
        ctx.report["dirac"]["status"] = "none";
        return finish(ctx, 1);
      }
      std::cout << k << "-Dirac: unknown, candidate budget exhausted\n";
      ctx.report["dirac"]["status"] = "unknown";
      return finish(ctx, 2);
    }

    if (cmd_cut->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      CutMode mode = parse_cut_mode(cut_mode_text);
      Face sigma = parse_face_arg(c, sigma_text);
      Face tau = parse_face_arg(c, tau_text);
      CutReport r;
      if (!cut_text.empty()) {
        std::vector<Face> cut;
        std::istringstream ss(cut_text);
        std::string part;
        while (std::getline(ss, part, ';'))
          if (!part.empty()) cut.push_back(parse_face_arg(c, part));
        r = is_cut(c, cut, sigma, tau, k, mode);
        if (want_minimal) {
          r.minimality_checked = true;
          r.is_minimal = r.is_cut;
          for (std::size_t i = 0; i < r.cut.size() && r.is_minimal; ++i) {
            std::vector<Face> smaller = r.cut;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            if (is_cut(c, smaller, sigma, tau, k, mode).is_cut) r.is_minimal = false;
          }
        }
      } else {
        r = minimal_cut(c, sigma, tau, k, mode);
      }
      if (want_homology && r.is_cut) {
        CutReport h = is_homology_cut(fs, c, r.cut, sigma, tau, k, mode);
        h.minimality_checked = r.minimality_checked;
        h.is_minimal = r.is_minimal;
        r = std::move(h);
      }
      print_cut(c, r);
      ctx.report["cut"] = cut_json(c, r);
      bool ok = r.is_cut && (!want_minimal || r.is_minimal) &&
                (!want_homology || r.two_sided());
      return finish(ctx, ok ? 0 : 1);
    }

    if (cmd_elk->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      CutMode mode = parse_cut_mode(cut_mode_text);
      ExtendedLinkCut r = find_extended_link_minimal_cut(c, k, mode);
      std::cout << "sigma = {" << c.face_to_string(r.sigma) << "}"
                << (r.constructive ? "  (refinement branch)" : "  (exhaustive branch)") << "\n";
      print_cut(c, r.report);
      ctx.report["elkcut"] = cut_json(c, r.report);
      ctx.report["elkcut"]["sigma_face"] = face_labels(c, r.sigma);
      ctx.report["elkcut"]["constructive"] = r.constructive;
      return finish(ctx, 0);
    }

    if (cmd_rev->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      Face sigma = parse_face_arg(c, sigma_text);
      ReversePropagationReport r = check_reverse_propagation(fs, c, sigma, k);
      std::cout << "hypotheses: decomposition " << k << "-chordal "
                << (r.hyp_decomposition_chordal ? "yes" : "no") << ", two-sided homology cut "
                << (r.hyp_homology_cut ? "yes" : "no") << ", upper cut "
                << (r.hyp_upper_cut ? (r.hyp_upper_vacuous ? "vacuous" : "yes") : "no") << "\n";
      std::cout << "conclusion: extended link decomposition " << (k - 1) << "-chordal "
                << (r.conclusion ? "yes" : "no") << "\n";
      std::cout << "implication respected: " << (r.respected() ? "yes" : "NO") << "\n";
      ctx.report["reverse_propagation"] = {
          {"k", k},
          {"hyp_decomposition_chordal", r.hyp_decomposition_chordal},
          {"hyp_homology_cut", r.hyp_homology_cut},
          {"hyp_upper_cut", r.hyp_upper_cut},
          {"hyp_upper_vacuous", r.hyp_upper_vacuous},
          {"conclusion", r.conclusion},
          {"respected", r.respected()}};
      if (r.hyp_b_pair)
        ctx.report["reverse_propagation"]["pair"] = {face_labels(c, r.hyp_b_pair->first),
                                                     face_labels(c, r.hyp_b_pair->second)};
      return finish(ctx, r.respected() ? 0 : 1);
    }

    if (cmd_prop->parsed()) {
      SimplicialComplex c = need_complex(ctx);
      PropagationReport r = check_propagation(fs, c, k);
      std::cout << "hypotheses (missing faces <= " << k << ", chordal in [" << k << ","
                << 2 * k - 1 << "]): " << (r.hypotheses() ? "hold" : "fail") << "\n";
      if (!r.hyp_chordal && r.hyp_fail_level >= 0)
        std::cout << "  first failing level: " << r.hyp_fail_level << "\n";
      std::cout << "conclusions (chordal up to dim, leray <= " << k
                << "): " << (r.conclusions() ? "hold" : "fail") << "\n";
      std::cout << "implication respected: " << (r.respected() ? "yes" : "NO") << "\n";
      if (r.hs_checked)
        std::cout << "Herzog-Srinivasan t_a <= t_(a-1) + t_1: " << (r.hs_ok ? "holds" : "FAILS")
                  << "\n";
      ctx.report["propagation"] = {{"k", r.k},
                                   {"hyp_no_big_missing", r.hyp_no_big_missing},
                                   {"hyp_chordal", r.hyp_chordal},
                                   {"concl_chordal", r.concl_chordal},
                                   {"concl_leray", r.concl_leray},
                                   {"leray_decided", r.leray_decided},
                                   {"respected", r.respected()},
                                   {"hs_checked", r.hs_checked},
                                   {"hs_ok", r.hs_ok}};
      return finish(ctx, r.respected() ? 0 : 1);
    }

    if (cmd_corpus->parsed()) {
      CorpusSpec spec = parse_corpus_spec(
          corpus_name, corpus_params,
          ctx.seed_set ? std::optional<std::uint64_t>(ctx.seed) : std::nullopt);
      SimplicialComplex c = named_complex(spec);
      std::string text = dump_complex(c);
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << text;
      } else {
        std::cout << text;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
      ctx.report["corpus"] = {{"name", corpus_name}, {"hash", std::string(buf)}};
      return finish(ctx, 0);
    }

    throw std::runtime_error("no subcommand selected");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    ctx.report["error"] = e.what();
    return finish(ctx, 2);
  }
}
