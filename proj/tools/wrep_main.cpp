#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wrep/json_io.hpp"
#include "wrep/numeric.hpp"

namespace {

using namespace wrep;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

Representation load_rep(const std::string& path) { return rep_from_json(load_json(path)); }

ParamValue parse_param(const std::string& s) { return ParamValue::parse(s); }

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

GenSelect parse_select(const std::string& s) {
  if (s == "all") return GenSelect::All;
  if (s == "sigma" || s == "sigma-only") return GenSelect::SigmaOnly;
  if (s == "alpha" || s == "alpha-only") return GenSelect::AlphaOnly;
  throw BadParams("bad selector: " + s);
}

struct Options {
  Config cfg = Config::from_env();
  std::string output = "text";
  bool json() const { return output == "json"; }
};

int run(int argc, char** argv) {
  CLI::App app{"welded braid group representation workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--tolerance", opt.cfg.tolerance, "numeric-ring tolerance");
  app.add_option("--seed", opt.cfg.seed, "seed for randomized commands");
  app.add_option("--threads", opt.cfg.threads, "worker threads");
  app.add_option("--max-letters", opt.cfg.max_free_word_letters,
                 "free-word image size limit");
  app.add_option("--output", opt.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // gen
  auto* gen = app.add_subcommand("gen", "construct a representation family");
  std::string g_family, g_out;
  int g_n = 3;
  std::map<std::string, std::string> g_params;
  std::string g_t, g_q, g_y, g_k, g_z, g_lambda, g_x;
  int g_xroot = -1;
  gen->add_option("--family", g_family, "family name")->required();
  gen->add_option("--n", g_n, "strand count (default 3)");
  gen->add_option("--t", g_t, "parameter t ('sym' keeps it symbolic)");
  gen->add_option("--q", g_q, "parameter q");
  gen->add_option("--y", g_y, "parameter y");
  gen->add_option("--k", g_k, "parameter k (+1 or -1)");
  gen->add_option("--z", g_z, "parameter z");
  gen->add_option("--lambda", g_lambda, "parameter lambda");
  gen->add_option("--x", g_x, "parameter x");
  gen->add_option("--x-root", g_xroot, "cube-root index for psi3 (0..2)");
  gen->add_option("--out", g_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check the defining relations");
  std::string v_file;
  verify->add_option("file", v_file, "representation JSON")->required();

  // irreducible
  auto* irr = app.add_subcommand("irreducible", "generated-algebra irreducibility test");
  std::string i_file, i_restrict = "all";
  irr->add_option("file", i_file, "representation JSON")->required();
  irr->add_option("--restrict", i_restrict, "all | sigma | alpha");

  // equivalent
  auto* equiv = app.add_subcommand("equivalent", "decide equivalence of two representations");
  std::string e_a, e_b;
  equiv->add_option("a", e_a, "representation JSON")->required();
  equiv->add_option("b", e_b, "representation JSON")->required();

  // identify
  auto* ident = app.add_subcommand("identify", "classify an extension");
  std::string id_file;
  ident->add_option("file", id_file, "representation JSON")->required();

  // search
  auto* search = app.add_subcommand("search", "multi-start search for alpha images");
  std::string s_restriction = "tau", s_z = "2", s_json_out;
  int s_n = 3, s_starts = 500;
  search->add_option("--restriction", s_restriction, "tau or burau");
  search->add_option("--n", s_n, "strand count")->required();
  search->add_option("--z", s_z, "complex specialization, e.g. 2+0i");
  search->add_option("--starts", s_starts, "number of random starts");
  search->add_option("--json", s_json_out, "write the full report to this file");

  // distinct
  auto* distinct = app.add_subcommand("distinct", "pairwise equivalence table over a grid");
  std::string d_file;
  distinct->add_option("grid", d_file, "JSON array of family parameter sets")->required();

  // witness
  auto* wit = app.add_subcommand("witness", "non-faithfulness witness word");
  std::string w_file;
  wit->add_option("file", w_file, "representation JSON")->required();

  // specialize
  auto* spec = app.add_subcommand("specialize", "evaluate a symbolic representation");
  std::string sp_file, sp_out;
  std::vector<std::string> sp_sets;
  bool sp_exact = false;
  spec->add_option("file", sp_file, "representation JSON")->required();
  spec->add_option("--set", sp_sets, "assignment var=value (repeatable)");
  spec->add_flag("--exact", sp_exact, "use exact arithmetic for the values");
  spec->add_option("--out", sp_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean; usage errors exit 2
  }

  if (gen->parsed()) {
    FamilyParams p;
    p.family = family_from_name(g_family);
    p.n = g_n;
    auto put = [&](const char* key, const std::string& val) {
      if (!val.empty()) p.assign[key] = parse_param(val);
    };
    put("t", g_t);
    put("q", g_q);
    put("y", g_y);
    put("k", g_k);
    put("z", g_z);
    put("lambda", g_lambda);
    put("x", g_x);
    if (g_xroot >= 0) p.x_root = g_xroot;
    Representation rep = make_family(p);
    emit(rep_to_json(rep), g_out);
    return 0;
  }

  if (verify->parsed()) {
    Representation rep = load_rep(v_file);
    VerificationReport report = std::visit(
        [&](const auto& r) { return check_relations_extended(r, opt.cfg.tolerance); }, rep);
    if (opt.json()) {
      std::cout << report_to_json(report).dump(2) << "\n";
      return report.ok() ? 0 : 1;
    }
    bool symbolic = std::holds_alternative<LRep>(rep);
    if (report.ok()) {
      std::cout << "OK: " << report.total_relations << " relations hold"
                << (symbolic ? " symbolically" : "") << "\n";
      return 0;
    }
    std::cout << "FAIL: " << report.failures.size() << " of " << report.total_relations
              << " relations violated\n";
    for (const auto& f : report.failures)
      std::cout << "  " << f.id << "  deviation " << f.deviation << "\n";
    return 1;
  }

  if (irr->parsed()) {
    Representation rep = load_rep(i_file);
    GenSelect sel = parse_select(i_restrict);
    bool result = std::visit(
        [&](const auto& r) { return burnside_irreducible(r, sel, opt.cfg.tolerance); }, rep);
    int dim = rep_dim(rep);
    int adim = std::visit(
        [&](const auto& r) { return algebra_dimension(r, sel, opt.cfg.tolerance); }, rep);
    if (opt.json())
      std::cout << Json({{"irreducible", result}, {"algebra_dim", adim},
                         {"full_dim", dim * dim}})
                       .dump(2)
                << "\n";
    else
      std::cout << (result ? "IRREDUCIBLE" : "REDUCIBLE") << " (algebra dimension " << adim
                << " of " << dim * dim << ")\n";
    return 0;
  }

  if (equiv->parsed()) {
    Representation ra = load_rep(e_a), rb = load_rep(e_b);
    if (std::holds_alternative<LRep>(ra) != std::holds_alternative<LRep>(rb))
      throw BadParams("representations live in different rings; specialize first");
    Tristate got;
    int idim = 0;
    if (std::holds_alternative<LRep>(ra)) {
      auto res = are_equivalent(std::get<LRep>(ra), std::get<LRep>(rb), opt.cfg.tolerance,
                                opt.cfg.seed);
      got = res.equivalent;
      idim = res.intertwiner_dim;
    } else {
      auto res = are_equivalent(std::get<CRep>(ra), std::get<CRep>(rb), opt.cfg.tolerance,
                                opt.cfg.seed);
      got = res.equivalent;
      idim = res.intertwiner_dim;
    }
    if (opt.json()) {
      const char* s = got == Tristate::Yes ? "equivalent"
                      : got == Tristate::No ? "not-equivalent"
                                            : "indeterminate";
      std::cout << Json({{"result", s}, {"intertwiner_dim", idim}}).dump(2) << "\n";
    } else if (got == Tristate::Yes) {
      std::cout << "EQUIVALENT (intertwiner dim " << idim << ")\n";
    } else if (got == Tristate::No) {
      std::cout << "NOT EQUIVALENT (intertwiner dim " << idim << ")\n";
    } else {
      std::cout << "INDETERMINATE (intertwiner dim " << idim << ")\n";
    }
    return got == Tristate::Maybe ? 1 : 0;
  }

  if (ident->parsed()) {
    Representation rep = load_rep(id_file);
    Json out = std::visit(
        [&](const auto& r) {
          return classification_to_json(identify_extension(r, opt.cfg.tolerance));
        },
        rep);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (search->parsed()) {
    Family restriction =
        s_restriction == "tau" ? Family::Tau
        : (s_restriction == "burau" || s_restriction == "burau-w") ? Family::BurauW
                                                                   : Family::BurauV;
    CD z = parse_complex(s_z);
    std::cout << "seed " << opt.cfg.seed << "\n";
    SearchReport report =
        extension_search(s_n, restriction, z, s_starts, opt.cfg.seed, opt.cfg);
    if (!s_json_out.empty()) emit(search_report_to_json(report), s_json_out);
    if (opt.json() && s_json_out.empty()) {
      std::cout << search_report_to_json(report).dump(2) << "\n";
    } else {
      std::cout << report.converged << " of " << report.starts << " starts converged, "
                << report.clusters.size() << " clusters\n";
      for (std::size_t i = 0; i < report.clusters.size(); ++i) {
        const auto& c = report.clusters[i];
        std::cout << "  cluster " << i << ": size " << c.cluster_size << ", residual "
                  << c.residual << ", manifold dim " << c.manifold_dim << ", family ";
        if (c.family)
          std::cout << family_name(c.family->family) << " (k=" << c.family->k << ")";
        else
          std::cout << "unidentified";
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (distinct->parsed()) {
    Json grid_json = load_json(d_file);
    std::vector<FamilyParams> grid;
    for (const auto& j : grid_json) grid.push_back(family_params_from_json(j));
    std::cout << "seed " << opt.cfg.seed << "\n";
    DistinctnessReport report =
        verify_pairwise_distinctness(grid, opt.cfg.tolerance, opt.cfg.seed);
    if (opt.json()) {
      std::cout << distinctness_to_json(report).dump(2) << "\n";
    } else {
      for (const auto& e : report.entries) {
        const char* got = e.got == Tristate::Yes ? "equivalent"
                          : e.got == Tristate::No ? "not-equivalent"
                                                  : "indeterminate";
        std::cout << "  (" << e.i << "," << e.j << ") expected "
                  << (e.expected_equivalent ? "equivalent" : "not-equivalent") << ", got "
                  << got << (e.ok ? "" : "  <-- MISMATCH") << "\n";
      }
      std::cout << (report.ok ? "OK" : "FAIL") << ": " << report.entries.size()
                << " pairs checked\n";
    }
    return report.ok ? 0 : 1;
  }

  if (wit->parsed()) {
    Representation rep = load_rep(w_file);
    GroupWord w = std::visit(
        [&](const auto& r) {
          return nonfaithful_witness(r, opt.cfg.tolerance, opt.cfg.max_free_word_letters);
        },
        rep);
    if (opt.json()) {
      std::cout << Json({{"word", w.to_string()}, {"image_is_identity", true},
                         {"trivial_in_group", false}})
                       .dump(2)
                << "\n";
    } else {
      std::cout << w.to_string() << "\n";
      std::cout << "image is the identity matrix; the word is nontrivial in the group\n";
    }
    return 0;
  }

  if (spec->parsed()) {
    Representation rep = load_rep(sp_file);
    if (!std::holds_alternative<LRep>(rep))
      throw BadParams("specialize expects a symbolic (laurent) representation");
    const LRep& sym = std::get<LRep>(rep);
    Representation out;
    if (sp_exact) {
      std::map<std::string, CycRat> assign;
      for (const auto& kv : sp_sets) {
        auto pos = kv.find('=');
        if (pos == std::string::npos) throw BadParams("--set expects var=value");
        assign[kv.substr(0, pos)] = CycRat::from_string(kv.substr(pos + 1));
      }
      out = specialize_rep_exact(sym, assign);
    } else {
      std::map<std::string, CD> assign;
      for (const auto& kv : sp_sets) {
        auto pos = kv.find('=');
        if (pos == std::string::npos) throw BadParams("--set expects var=value");
        assign[kv.substr(0, pos)] = parse_complex(kv.substr(pos + 1));
      }
      out = specialize_rep_complex(sym, assign);
    }
    emit(rep_to_json(out), sp_out);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NotAnExtension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OutOfClassifiedRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Indeterminate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const wrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
