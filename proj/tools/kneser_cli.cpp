// kneser: construct, certify, bound and exactly solve k-tuple domination and
// 2-packing problems on Kneser graphs K(n,r).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "kneser/bounds.hpp"
#include "kneser/certify.hpp"
#include "kneser/constructions.hpp"
#include "kneser/core.hpp"
#include "kneser/solver.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  std::string format = "text";
  long long seed = 0;
  std::uint64_t budget_nodes = 50'000'000;
  double budget_seconds = 300.0;
  bool parallel = false;
};

std::string config_line(const std::string& cmd, const GlobalOpts& g,
                        const std::string& detail) {
  std::ostringstream oss;
  oss << "# kneser " << cmd << " " << detail << " --format " << g.format
      << " --seed " << g.seed;
  return oss.str();
}

json config_json(const std::string& cmd, const GlobalOpts& g, const json& detail) {
  json j = detail;
  j["command"] = cmd;
  j["format"] = g.format;
  j["seed"] = g.seed;
  return j;
}

json report_json(const kneser::ValueReport& rep) {
  json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  if (rep.k >= 1) j["k"] = rep.k;
  j["infeasible"] = rep.infeasible;
  if (!rep.infeasible) {
    j["lower"] = rep.lower;
    j["upper"] = rep.upper;
    j["exact"] = rep.exact;
  }
  j["provenance"] = rep.provenance;
  return j;
}

void print_report(const kneser::ValueReport& rep, const std::string& name,
                  const GlobalOpts& g, const std::string& cmd, const std::string& detail) {
  if (g.format == "json") {
    json j = report_json(rep);
    j["config"] = config_json(cmd, g, {});
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << config_line(cmd, g, detail) << "\n";
  std::cout << name << "(K(" << rep.n << "," << rep.r << ")) ";
  if (rep.infeasible) {
    std::cout << "is infeasible (k exceeds degree+1)\n";
  } else if (rep.exact) {
    std::cout << "= " << rep.lower << "  [exact]\n";
  } else {
    std::cout << "in [" << rep.lower << "," << rep.upper << "]\n";
  }
  std::cout << "provenance:";
  for (const auto& t : rep.provenance) std::cout << " " << t;
  std::cout << "\n";
}

json cert_json(const kneser::CertResult& res) {
  json j;
  j["holds"] = res.holds;
  if (!res.holds) j["witness"] = res.witness;
  if (!res.detail.empty()) {
    json counts = json::object();
    for (const auto& [v, c] : res.detail) counts[v.str()] = c;
    j["counts"] = counts;
  }
  return j;
}

int finish_cert(const kneser::CertResult& res, const GlobalOpts& g,
                const std::string& what) {
  if (g.format == "json") {
    std::cout << cert_json(res).dump() << "\n";
  } else if (res.holds) {
    std::cout << what << ": holds\n";
  } else {
    std::cout << what << ": FAILS, witness:";
    for (int x : res.witness) std::cout << " " << x;
    std::cout << "\n";
  }
  return res.holds ? 0 : 1;
}

kneser::VertexSet read_input_set(const std::string& path, std::optional<int> n,
                                 std::optional<int> r) {
  auto load = [&](std::istream& in) {
    // JSON input carries its own (n,r); text needs them supplied
    if (in.peek() == '{') return kneser::read_vertex_set_json(in);
    if (!n || !r) throw std::invalid_argument("text input needs --n and --r");
    return kneser::read_vertex_set_text(in, kneser::KneserParams(*n, *r));
  };
  if (path == "-") return load(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load(in);
}

void emit_set(const kneser::VertexSet& s, const std::string& out_path,
              const GlobalOpts& g, const std::string& comment) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path);
    out = &file;
  }
  if (g.format == "json") {
    kneser::write_vertex_set_json(*out, s);
  } else {
    kneser::write_vertex_set_text(*out, s, comment);
  }
}

void maybe_cache_witness(const kneser::SolveOutcome& res, const std::string& property,
                         long long k) {
  if (!res.exact) return;
  if (auto dir = kneser::witness_cache_dir()) {
    kneser::save_witness(*dir, res.witness, property, k);
  }
}

int print_solve(const kneser::SolveOutcome& res, const GlobalOpts& g,
                const std::string& cmd, const std::string& detail,
                const std::string& name) {
  if (g.format == "json") {
    json j;
    j["optimum"] = res.optimum;
    j["exact"] = res.exact;
    j["nodes"] = res.nodes;
    auto arr = json::array();
    for (kneser::Vertex v : res.witness) arr.push_back(v.elements());
    j["witness"] = arr;
    j["config"] = config_json(cmd, g, {});
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << config_line(cmd, g, detail) << "\n";
  std::cout << name << " = " << res.optimum
            << (res.exact ? "  [exact]" : "  [budget exhausted: best incumbent]")
            << "  nodes=" << res.nodes << "\n";
  for (kneser::Vertex v : res.witness) std::cout << v.str() << "\n";
  return 0;
}

// --- table -------------------------------------------------------------------

char table_letter(const kneser::ValueReport& rep) {
  auto has = [&](const std::string& t) {
    for (const auto& p : rep.provenance) {
      if (p == t) return true;
    }
    return false;
  };
  if (has("DOM_N2") || has("R1_COMPLETE")) return 'a';
  if (has("THM_B1") || has("THM_K_PLUS_R")) return 'b';
  if (has("THM_B2") || has("THM_N2_K3")) return 'c';
  if (has("THM_LARGE_K") || has("COR_LARGE_K") || has("ALL_VERTICES") || has("N_EQ_2R"))
    return 'd';
  if (has("PROP_N3_PLUS_1") || has("PROP_N4_PLUS_2")) return 'e';
  if (has("MONOTONE_LB") || has("MONOTONE_UB")) return 'g';
  return 'f';
}

const char* kLegend =
    "(a) domination number, k=1\n"
    "(b) exact k+2*alpha (alpha = ceil(2k/(n-3)); alpha = 1 gives k+2)\n"
    "(c) exact k+2*alpha+1 at n = ceil(2k/alpha)+3 (alpha = 1 gives k+3)\n"
    "(d) large-k values C(n,2)-(t+1) and endpoints\n"
    "(e) special cases k = C(n-4,2)+2 and k = C(n-3,2)+1\n"
    "(f) exact by solver or bound collapse\n"
    "(g) bound collapse or interval via monotonicity; intervals print as [lo,hi]\n";

int run_table(int n_max, long long k_max, const GlobalOpts& g, bool legend,
              double cell_budget) {
  if (n_max > 26 || k_max > 60) throw std::invalid_argument("table: n_max <= 26, k_max <= 60");
  std::cout << config_line("table", g,
                           "--n-max " + std::to_string(n_max) + " --k-max " +
                               std::to_string(k_max) + " --budget-seconds " +
                               std::to_string(static_cast<long long>(cell_budget)))
            << "\n";
  if (legend) std::cout << kLegend;
  const int n_min = 5;
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(k_max) + 1);
  std::vector<std::size_t> width(static_cast<std::size_t>(n_max - n_min + 1), 0);
  for (long long k = 1; k <= k_max; ++k) {
    auto& row = cells[static_cast<std::size_t>(k)];
    for (int n = n_min; n <= n_max; ++n) {
      kneser::ValueReport rep = kneser::gamma_value(n, 2, k);
      std::string cell;
      if (rep.infeasible) {
        cell = "-";
      } else if (rep.exact) {
        cell = std::to_string(rep.lower) + std::string(1, table_letter(rep));
      } else if (cell_budget > 0) {
        kneser::Budget budget{g.budget_nodes, cell_budget};
        auto res = kneser::min_ktuple_dominating(kneser::KneserParams(n, 2), k, budget);
        cell = res.exact ? std::to_string(res.optimum) + "f"
                         : "[" + std::to_string(rep.lower) + "," +
                               std::to_string(std::min(rep.upper, res.optimum)) + "]g";
      } else {
        cell = "[" + std::to_string(rep.lower) + "," + std::to_string(rep.upper) + "]g";
      }
      row.push_back(cell);
      width[static_cast<std::size_t>(n - n_min)] =
          std::max(width[static_cast<std::size_t>(n - n_min)], cell.size());
    }
  }
  std::size_t kw = std::max<std::size_t>(3, std::to_string(k_max).size());
  std::cout << std::string(kw - 3, ' ') << "k\\n";
  for (int n = n_min; n <= n_max; ++n) {
    std::size_t w = std::max(width[static_cast<std::size_t>(n - n_min)],
                             std::to_string(n).size());
    std::cout << "  " << std::string(w - std::to_string(n).size(), ' ') << n;
    width[static_cast<std::size_t>(n - n_min)] = w;
  }
  std::cout << "\n";
  for (long long k = 1; k <= k_max; ++k) {
    std::string ks = std::to_string(k);
    std::cout << std::string(kw - ks.size(), ' ') << ks;
    const auto& row = cells[static_cast<std::size_t>(k)];
    for (int n = n_min; n <= n_max; ++n) {
      const std::string& cell = row[static_cast<std::size_t>(n - n_min)];
      std::size_t w = width[static_cast<std::size_t>(n - n_min)];
      std::cout << "  " << std::string(w - cell.size(), ' ') << cell;
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-tuple domination and 2-packings on Kneser graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed echoed into the config header");
  app.add_option("--budget-nodes", g.budget_nodes, "search node limit");
  app.add_option("--budget-seconds", g.budget_seconds, "search wall-clock limit");
  app.add_flag("--parallel", g.parallel, "split the solver search across threads");

  int n = 0, r = 0, m = 0, i = 0, t = -1, alpha = 0, height = 0, n_max = 14;
  long long k = 0, k_max = 8;
  bool second = false, legend = false, r2 = false, packing = false, code = false;
  long long tight_k = 0;
  std::vector<int> steiner;
  std::string in_path = "-", out_path = "-", family;

  auto* value = app.add_subcommand("value", "gamma_xk(n,r) value or interval");
  value->add_option("-n", n)->required();
  value->add_option("-r", r)->required();
  value->add_option("-k", k)->required();

  auto* pack_v = app.add_subcommand("packing", "2-packing number value or interval");
  pack_v->add_option("-n", n)->required();
  pack_v->add_option("-r", r)->required();

  auto* table = app.add_subcommand("table", "value table for K(n,2)");
  table->add_option("--n-max", n_max);
  table->add_option("--k-max", k_max);
  table->add_flag("--legend", legend, "print the provenance legend");

  auto* construct = app.add_subcommand("construct", "build a named set family");
  construct->add_option("family", family,
                        "one of: disjoint dhat circulant d-m-alpha d-of-h k-plus-2alpha "
                        "k-plus-2alpha-plus1 large-k-complement boundary-s fano k73 "
                        "steiner-4-5-11 k115 complement")
      ->required();
  construct->add_option("-n", n);
  construct->add_option("-r", r);
  construct->add_option("-k", k);
  construct->add_option("-m", m);
  construct->add_option("-i", i);
  construct->add_option("-t", t);
  construct->add_option("--alpha", alpha);
  construct->add_option("--height", height, "h parameter of d-of-h");
  construct->add_flag("--second", second, "second Fano plane / Steiner system");
  construct->add_option("--input", in_path, "input set for complement");
  construct->add_option("-o,--output", out_path);

  auto* verify = app.add_subcommand("verify", "certify a property of a vertex set");
  verify->add_option("file", in_path, "vertex set file (- for stdin)");
  verify->add_option("--n", n);
  verify->add_option("--r", r);
  verify->add_option("--k", k, "check k-tuple domination");
  verify->add_flag("--r2", r2, "use the r=2 occurrence characterization");
  verify->add_flag("--packing", packing, "check 2-packing");
  verify->add_flag("--perfect-code", code, "check perfect 1-code");
  verify->add_option("--steiner", steiner, "check Steiner system: t r n")->expected(3);
  verify->add_option("--tight", tight_k, "check |N[v] cap D| == k for all v");

  auto* solve = app.add_subcommand("solve", "exact minimum k-tuple dominating set");
  solve->add_option("-n", n)->required();
  solve->add_option("-r", r)->required();
  solve->add_option("-k", k)->required();

  auto* pack = app.add_subcommand("pack", "exact maximum 2-packing");
  pack->add_option("-n", n)->required();
  pack->add_option("-r", r)->required();

  auto* lp = app.add_subcommand("export-lp", "write the ILP model in LP format");
  lp->add_option("-n", n)->required();
  lp->add_option("-r", r)->required();
  lp->add_option("-k", k)->required();
  lp->add_option("path", out_path, "output path (- for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (value->parsed()) {
      auto rep = kneser::gamma_value(n, r, k);
      print_report(rep, "gamma_x" + std::to_string(k), g, "value",
                   "-n " + std::to_string(n) + " -r " + std::to_string(r) + " -k " +
                       std::to_string(k));
      return 0;
    }
    if (pack_v->parsed()) {
      auto rep = kneser::packing_value(n, r);
      print_report(rep, "rho", g, "packing",
                   "-n " + std::to_string(n) + " -r " + std::to_string(r));
      return 0;
    }
    if (table->parsed()) {
      // the table solves open cells only when a budget is given explicitly
      double cell_budget =
          app.get_option("--budget-seconds")->count() > 0 ? g.budget_seconds : 0.0;
      return run_table(n_max, k_max, g, legend, cell_budget);
    }
    if (construct->parsed()) {
      kneser::VertexSet s = [&]() -> kneser::VertexSet {
        if (family == "disjoint") return kneser::disjoint_family(n, r, m);
        if (family == "dhat") return kneser::dhat_n2(k, n);
        if (family == "circulant") return kneser::circulant_layer(m, i, n);
        if (family == "d-m-alpha") return kneser::d_m_alpha(m, alpha, n);
        if (family == "d-of-h") return kneser::d_of_h(n, alpha, height);
        if (family == "k-plus-2alpha") return kneser::build_k_plus_2alpha(n, k, alpha);
        if (family == "k-plus-2alpha-plus1")
          return kneser::build_k_plus_2alpha_plus1(n, k, alpha);
        if (family == "large-k-complement") return kneser::large_k_complement(n, r, t);
        if (family == "boundary-s") return kneser::boundary_family_S(n, r, t);
        if (family == "fano") {
          auto [f1, f2] = kneser::fano_planes();
          return second ? f2 : f1;
        }
        if (family == "k73") return kneser::k73_gamma_sets(static_cast<int>(k));
        if (family == "steiner-4-5-11") {
          auto [s1, s2] = kneser::steiner_4_5_11_pair();
          return second ? s2 : s1;
        }
        if (family == "k115") return kneser::k115_gamma_sets(static_cast<int>(k));
        if (family == "complement") {
          auto d = read_input_set(in_path, n ? std::optional<int>(n) : std::nullopt,
                                  r ? std::optional<int>(r) : std::nullopt);
          return kneser::complement_set(d.params(), d);
        }
        throw std::invalid_argument("unknown family: " + family);
      }();
      emit_set(s, out_path, g,
               "kneser construct " + family + " (" + std::to_string(s.size()) +
                   " vertices over K(" + std::to_string(s.params().n) + "," +
                   std::to_string(s.params().r) + "))");
      return 0;
    }
    if (verify->parsed()) {
      auto s = read_input_set(in_path, n ? std::optional<int>(n) : std::nullopt,
                              r ? std::optional<int>(r) : std::nullopt);
      const auto& params = s.params();
      if (!steiner.empty()) {
        auto res = kneser::is_steiner_system(steiner[0], steiner[1], steiner[2], s);
        return finish_cert(res, g,
                           "S(" + std::to_string(steiner[0]) + "," +
                               std::to_string(steiner[1]) + "," +
                               std::to_string(steiner[2]) + ")");
      }
      if (packing) return finish_cert(kneser::is_2_packing(params, s), g, "2-packing");
      if (code) {
        return finish_cert(kneser::is_perfect_1_code(params, s), g, "perfect 1-code");
      }
      if (tight_k >= 1) {
        return finish_cert(kneser::certify_tight_domination(params, s, tight_k), g,
                           "tight " + std::to_string(tight_k) + "-tuple domination");
      }
      if (k >= 1) {
        auto res = r2 ? kneser::is_k_tuple_dominating_r2(params, s, k)
                      : kneser::is_k_tuple_dominating(params, s, k);
        return finish_cert(res, g, std::to_string(k) + "-tuple domination");
      }
      throw std::invalid_argument("verify: pick one of --k/--packing/--perfect-code/--steiner/--tight");
    }
    if (solve->parsed()) {
      kneser::Budget budget{g.budget_nodes, g.budget_seconds};
      kneser::SolverOptions opts;
      if (g.parallel) opts.threads = static_cast<int>(std::thread::hardware_concurrency());
      auto res = kneser::min_ktuple_dominating(kneser::KneserParams(n, r), k, budget, opts);
      maybe_cache_witness(res, "k-tuple-dominating", k);
      return print_solve(res, g, "solve",
                         "-n " + std::to_string(n) + " -r " + std::to_string(r) + " -k " +
                             std::to_string(k),
                         "gamma_x" + std::to_string(k) + "(K(" + std::to_string(n) + "," +
                             std::to_string(r) + "))");
    }
    if (pack->parsed()) {
      kneser::Budget budget{g.budget_nodes, g.budget_seconds};
      auto res = kneser::max_2_packing(kneser::KneserParams(n, r), budget);
      maybe_cache_witness(res, "2-packing", 0);
      return print_solve(res, g, "pack",
                         "-n " + std::to_string(n) + " -r " + std::to_string(r),
                         "rho(K(" + std::to_string(n) + "," + std::to_string(r) + "))");
    }
    if (lp->parsed()) {
      if (out_path.empty() || out_path == "-") {
        kneser::export_lp(kneser::KneserParams(n, r), k, std::cout);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open " + out_path);
        kneser::export_lp(kneser::KneserParams(n, r), k, out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
