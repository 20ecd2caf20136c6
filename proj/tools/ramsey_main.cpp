// Command-line front end: compute closed-form Ramsey / star-critical values,
// build and verify extremal witness colorings, and run the exhaustive
// arrowing oracle.
//
// Exit codes: 0 success (oracle: arrows), 1 negative verdict / failed
// verification, 2 parse or input error, 3 unknown classical value,
// 4 indeterminate (budget or capacity).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/calc.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/witness.hpp"

namespace {

using nlohmann::json;
using namespace ramsey;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitIndeterminate = 4;

struct GlobalOpts {
  bool json_output = false;
  std::string table_path;
};

const ClassicalTable& resolve_table(const GlobalOpts& g, ClassicalTable& storage) {
  std::string path = g.table_path;
  if (path.empty())
    if (const char* env = std::getenv("RAMSEY_TABLE")) path = env;
  if (path.empty()) return ClassicalTable::bundled();
  storage = ClassicalTable::load_file(path);
  return storage;
}

std::string cliques_str(const std::vector<int>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ",";
    s += "K" + std::to_string(ms[i]);
  }
  return s;
}

void emit(const GlobalOpts& g, const json& machine, const std::string& human) {
  if (g.json_output)
    std::cout << machine.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == '*') c = 'x';
    if (c == '+' || c == '(' || c == ')' || c == ',') c = '_';
  }
  return s;
}

SearchLimits limits_from(long long node_budget, double time_budget, int workers,
                         const std::string& symmetry) {
  SearchLimits lim;
  lim.node_budget = node_budget;
  lim.time_budget_seconds = time_budget;
  lim.workers = workers;
  if (symmetry == "on")
    lim.symmetry = SymmetryMode::on;
  else if (symmetry == "off")
    lim.symmetry = SymmetryMode::off;
  else
    lim.symmetry = SymmetryMode::automatic;
  return lim;
}

int run(int argc, char** argv) {
  CLI::App app{"Ramsey and star-critical Ramsey numbers of forests versus complete graphs"};
  app.require_subcommand(1);

  GlobalOpts gopts;
  app.add_flag("--json", gopts.json_output, "line-oriented JSON output");
  app.add_option("--table", gopts.table_path,
                 "classical table file (default: $RAMSEY_TABLE, then the bundled table)");

  // ---- compute ----------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "evaluate the closed formulas");
  std::string cmp_forest;
  std::vector<int> cmp_cliques;
  bool cmp_star = false, cmp_size_bound = false;
  compute->add_option("forest", cmp_forest, "forest spec, e.g. \"2*K2\" or \"P3+K2\"")->required();
  compute->add_option("cliques", cmp_cliques, "clique orders m1 m2 ...")->required();
  compute->add_flag("--star", cmp_star, "star-critical value instead of the Ramsey number");
  compute->add_flag("--size-bound", cmp_size_bound, "also print the size-Ramsey upper bound");

  // ---- witness ----------------------------------------------------------
  auto* witness = app.add_subcommand("witness", "construct extremal colorings");
  std::string wit_kind, wit_forest, wit_out = ".";
  std::vector<int> wit_cliques;
  int wit_n = 0, wit_m = 0, wit_k = 0;
  bool wit_indexed = false;
  std::vector<int> wit_edge;
  witness->add_option("--kind", wit_kind,
                      "critical-family | star-lower | ramsey-lower | ramsey-full")
      ->required();
  witness->add_option("forest", wit_forest, "forest spec (star-lower / ramsey-lower)");
  witness->add_option("cliques", wit_cliques, "clique orders");
  witness->add_option("--n", wit_n, "tree order (critical-family)");
  witness->add_option("--m", wit_m, "clique order (critical-family)");
  witness->add_option("--k", wit_k, "number of tree copies (critical-family)");
  witness->add_flag("--indexed", wit_indexed, "one file per (i, composition) index");
  witness->add_option("--edge", wit_edge, "missing edge u v (ramsey-full)")->expected(2);
  witness->add_option("--out", wit_out, "output file or directory (default .)");

  // ---- verify -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "re-check a witness file");
  std::string ver_path;
  verify->add_option("path", ver_path, "witness JSON file")->required();

  // ---- oracle -----------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "exhaustive arrowing search");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  long long node_budget = SearchLimits{}.node_budget;
  double time_budget = 0.0;
  int workers = 1;
  std::string symmetry = "auto";
  oracle->add_option("--node-budget", node_budget, "search node budget");
  oracle->add_option("--time-budget", time_budget, "wall clock budget in seconds");
  oracle->add_option("--workers", workers, "parallel workers");
  oracle->add_option("--symmetry", symmetry, "auto | on | off");

  auto add_host_opts = [](CLI::App* cmd, int& complete, std::vector<int>& pendant,
                          std::string& host_file) {
    cmd->add_option("--complete", complete, "host K_n");
    cmd->add_option("--pendant", pendant, "host K_n plus a pendant vertex of degree k")
        ->expected(2);
    cmd->add_option("--host", host_file, "host graph JSON file");
  };
  auto add_targets = [](CLI::App* cmd, std::string& forest, std::vector<int>& cliques) {
    cmd->add_option("forest", forest, "forest spec, or \"none\"")->required();
    cmd->add_option("cliques", cliques, "clique orders");
  };

  auto* oarrows = oracle->add_subcommand("arrows", "does the host arrow the targets?");
  int oa_complete = -1;
  std::vector<int> oa_pendant;
  std::string oa_host, oa_forest, oa_cert;
  std::vector<int> oa_cliques;
  add_host_opts(oarrows, oa_complete, oa_pendant, oa_host);
  add_targets(oarrows, oa_forest, oa_cliques);
  oarrows->add_option("--cert", oa_cert, "write the free coloring here when one exists");

  auto* omin = oracle->add_subcommand("min-ramsey", "least order that arrows");
  std::string om_forest;
  std::vector<int> om_cliques;
  int om_cap = 12;
  add_targets(omin, om_forest, om_cliques);
  omin->add_option("--cap", om_cap, "largest order to try");

  auto* ostar = oracle->add_subcommand("min-star", "least pendant degree that arrows");
  std::string os_forest, os_cert;
  std::vector<int> os_cliques;
  add_targets(ostar, os_forest, os_cliques);
  ostar->add_option("--cert", os_cert, "write the free coloring at degree k-1 here");

  auto* oenum = oracle->add_subcommand("enumerate", "all free colorings of the host");
  int oe_complete = -1;
  std::vector<int> oe_pendant;
  std::string oe_host, oe_forest, oe_out;
  std::vector<int> oe_cliques;
  bool oe_no_dedup = false;
  add_host_opts(oenum, oe_complete, oe_pendant, oe_host);
  add_targets(oenum, oe_forest, oe_cliques);
  oenum->add_flag("--no-dedup", oe_no_dedup, "list raw colorings instead of isomorphism classes");
  oenum->add_option("--out", oe_out, "directory for one coloring file per class");

  // ---- table ------------------------------------------------------------
  auto* table_cmd = app.add_subcommand("table", "print the classical table");

  CLI11_PARSE(app, argc, argv);

  ClassicalTable table_storage;
  const ClassicalTable& table = resolve_table(gopts, table_storage);

  auto make_host = [&](int complete, const std::vector<int>& pendant,
                       const std::string& host_file) -> Graph {
    int sources = (complete >= 0) + !pendant.empty() + !host_file.empty();
    if (sources != 1)
      throw std::invalid_argument("give exactly one of --complete, --pendant, --host");
    if (complete >= 0) return build_complete(complete);
    if (!pendant.empty()) return build_pendant_star(pendant[0], pendant[1]);
    return load_graph(host_file);
  };
  auto make_forest = [&](const std::string& spec) -> std::optional<Forest> {
    if (spec == "none" || spec == "-") return std::nullopt;
    return parse_forest(spec);
  };

  if (*compute) {
    Forest f = parse_forest(cmp_forest);
    RamseyResult res = cmp_star ? star_forest(f, cmp_cliques, table)
                                : ramsey_forest(f, cmp_cliques, table);
    std::string name = cmp_star ? "R*" : "R";
    json out{{"op", "compute"},       {"forest", f.to_string()},
             {"cliques", cmp_cliques}, {"star", cmp_star},
             {"value", res.value},     {"j0", res.j0},
             {"base_r", res.base_r},   {"provenance", to_string(res.provenance)}};
    emit(gopts, out,
         name + "(" + f.to_string() + " | " + cliques_str(cmp_cliques) + ") = " +
             std::to_string(res.value) + "  [j0=" + std::to_string(res.j0) +
             ", base_r=" + std::to_string(res.base_r) + ", " + to_string(res.provenance) + "]");
    if (cmp_size_bound) {
      if (cmp_cliques.size() == 1) {
        SizeRamseyBound b = size_ramsey_upper(f, cmp_cliques[0], table);
        emit(gopts, json{{"op", "size-bound"}, {"value", b.from_star}, {"tight_form", true}},
             "size-Ramsey upper bound = " + std::to_string(b.from_star));
      } else {
        long long b = size_ramsey_upper_multicolor(f, cmp_cliques, table);
        emit(gopts, json{{"op", "size-bound"}, {"value", b}, {"tight_form", false}},
             "size-Ramsey upper bound = " + std::to_string(b) + "  [multicolor form; tightness not claimed]");
      }
    }
    return kExitOk;
  }

  if (*witness) {
    namespace fs = std::filesystem;
    auto out_path = [&](const std::string& stem) -> std::string {
      fs::path p(wit_out);
      if (p.has_extension()) return p.string();  // explicit file
      return (p / (stem + ".json")).string();
    };
    std::vector<std::pair<WitnessColoring, std::string>> artifacts;
    if (wit_kind == "critical-family") {
      if (wit_n < 2 || wit_m < 3 || wit_k < 1)
        throw std::invalid_argument("critical-family needs --n >= 2, --m >= 3, --k >= 1");
      auto list = wit_indexed ? critical_family_indexed(wit_n, wit_m, wit_k)
                              : critical_family(wit_n, wit_m, wit_k);
      int idx = 0;
      for (auto& w : list) {
        std::string stem = "critical_n" + std::to_string(wit_n) + "_m" + std::to_string(wit_m) +
                           "_k" + std::to_string(wit_k) + "_" + std::to_string(idx++);
        artifacts.emplace_back(std::move(w), out_path(stem));
      }
    } else if (wit_kind == "star-lower" || wit_kind == "ramsey-lower") {
      if (wit_forest.empty()) throw std::invalid_argument("this kind needs a forest spec");
      Forest f = parse_forest(wit_forest);
      WitnessColoring w = wit_kind == "star-lower" ? star_lower_witness(f, wit_cliques, table)
                                                   : ramsey_lower_witness(f, wit_cliques, table);
      std::string stem = sanitize(wit_kind) + "_" + sanitize(f.to_string());
      for (int m : wit_cliques) stem += "_" + std::to_string(m);
      artifacts.emplace_back(std::move(w), out_path(stem));
    } else if (wit_kind == "ramsey-full") {
      // with no forest argument the positional cliques land in wit_forest
      std::vector<int> ms = wit_cliques;
      if (!wit_forest.empty()) ms.insert(ms.begin(), std::stoi(wit_forest));
      std::pair<int, int> edge{0, 1};
      if (!wit_edge.empty()) edge = {wit_edge[0], wit_edge[1]};
      WitnessColoring w = ramsey_full_witness(ms, edge, table);
      std::string stem = "ramsey_full";
      for (int m : ms) stem += "_" + std::to_string(m);
      artifacts.emplace_back(std::move(w), out_path(stem));
    } else {
      throw std::invalid_argument("unknown witness kind \"" + wit_kind + "\"");
    }
    for (auto& [w, path] : artifacts) {
      VerifyResult vr = verify_witness(w, table);
      if (!vr.ok) {
        std::cerr << "internal error: constructed witness failed verification: " << vr.detail
                  << "\n";
        return kExitFalse;
      }
      save_witness(w, path);
      emit(gopts,
           json{{"op", "witness"}, {"kind", to_string(w.kind)}, {"path", path},
                {"order", w.coloring.graph().order()}},
           std::string(to_string(w.kind)) + " witness on " +
               std::to_string(w.coloring.graph().order()) + " vertices -> " + path);
    }
    return kExitOk;
  }

  if (*verify) {
    WitnessColoring w = load_witness(ver_path);
    VerifyResult vr = verify_witness(w, table);
    emit(gopts,
         json{{"op", "verify"}, {"path", ver_path}, {"ok", vr.ok}, {"detail", vr.detail}},
         vr.ok ? "OK: witness verifies" : "FAIL: " + vr.detail);
    return vr.ok ? kExitOk : kExitFalse;
  }

  if (*oracle) {
    SearchLimits lim = limits_from(node_budget, time_budget, workers, symmetry);
    if (*oarrows) {
      ArrowQuery q{make_host(oa_complete, oa_pendant, oa_host), make_forest(oa_forest),
                   oa_cliques, lim};
      ArrowVerdict v = arrows(q);
      if (!v.arrows && !oa_cert.empty()) {
        std::ofstream out(oa_cert);
        out << to_json(*v.certificate).dump(2) << "\n";
      }
      emit(gopts,
           json{{"op", "arrows"}, {"arrows", v.arrows}, {"nodes", v.stats.nodes},
                {"provenance", "oracle"}},
           std::string("arrows: ") + (v.arrows ? "true" : "false") + "  [oracle]");
      return v.arrows ? kExitOk : kExitFalse;
    }
    if (*omin) {
      Forest f = parse_forest(om_forest);
      MinRamseyResult r = min_ramsey(f, om_cliques, om_cap, lim);
      emit(gopts,
           json{{"op", "min-ramsey"}, {"value", r.value}, {"provenance", "oracle"}},
           "min-ramsey(" + f.to_string() + " | " + cliques_str(om_cliques) + ") = " +
               std::to_string(r.value) + "  [oracle]");
      return kExitOk;
    }
    if (*ostar) {
      Forest f = parse_forest(os_forest);
      RamseyResult rr = ramsey_forest(f, os_cliques, table);
      MinStarResult r = min_star(f, os_cliques, static_cast<int>(rr.value), lim);
      if (!os_cert.empty() && r.certificate_below) {
        std::ofstream out(os_cert);
        out << to_json(*r.certificate_below).dump(2) << "\n";
      }
      emit(gopts,
           json{{"op", "min-star"}, {"value", r.value}, {"ramsey", rr.value},
                {"provenance", "oracle"}},
           "min-star(" + f.to_string() + " | " + cliques_str(os_cliques) + ") = " +
               std::to_string(r.value) + "  [oracle; R=" + std::to_string(rr.value) +
               " from formula]");
      return kExitOk;
    }
    if (*oenum) {
      Graph host = make_host(oe_complete, oe_pendant, oe_host);
      auto list = enumerate_free_colorings(host, make_forest(oe_forest), oe_cliques,
                                           !oe_no_dedup, lim);
      emit(gopts,
           json{{"op", "enumerate"}, {"count", list.size()}, {"dedup", !oe_no_dedup},
                {"provenance", "oracle"}},
           std::to_string(list.size()) + (oe_no_dedup ? " free colorings" : " isomorphism classes") +
               "  [oracle]");
      if (!oe_out.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(oe_out);
        int idx = 0;
        for (const auto& c : list) {
          std::ofstream out((fs::path(oe_out) / ("free_" + std::to_string(idx++) + ".json")).string());
          out << to_json(c).dump(2) << "\n";
        }
      }
      return kExitOk;
    }
  }

  if (*table_cmd) {
    for (const auto& [tuple, entry] : table.entries()) {
      std::string name = "R(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(tuple[i]);
      }
      name += ")";
      json out{{"op", "table"},
               {"tuple", tuple},
               {"value", entry.value},
               {"verified", entry.oracle_verified ? "oracle" : "table"},
               {"witness", !entry.witness_file.empty()}};
      std::string human = name + " = " + std::to_string(entry.value) +
                          (entry.oracle_verified ? "  [verified=oracle" : "  [table") +
                          (entry.witness_file.empty() ? "]" : ", witness=" + entry.witness_file + "]");
      emit(gopts, out, human);
    }
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownValueError& e) {
    std::cerr << "unknown value: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalse;
  }
}
