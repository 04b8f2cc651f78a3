// einf: command-line workbench for Barratt-Eccles / surjection chain computations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "einf/chains_e.hpp"
#include "einf/codec.hpp"
#include "einf/complex_x.hpp"
#include "einf/filtration.hpp"
#include "einf/homology.hpp"
#include "einf/prisms.hpp"
#include "einf/suites.hpp"
#include "einf/transfers.hpp"

namespace {

using nlohmann::json;
using namespace einf;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string format = "text";
  std::string surjection;
  std::optional<int> arity;
  std::string simplex;
  std::string space = "x";
  std::string input;
  std::string prism_view;
  int degree = 0;
  int max_degree = 2;
  std::optional<int> filtration;
  bool identity_map = false;

  std::string suite = "all";
  std::optional<int> max_arity;
  std::optional<int> verify_degree;
  std::optional<int> coverage_bound;
  std::optional<int> jobs;
  std::string config_path;
};

bool as_json(const Options& o) { return o.format == "json"; }

void print(const Options& o, const std::string& text, const json& j) {
  if (as_json(o)) std::cout << j.dump(2) << '\n';
  else std::cout << text << '\n';
}

std::string signed_int(int s) { return s > 0 ? "+1" : "-1"; }

int cmd_tc(const Options& o) {
  const XChain c = decode_xchain(o.surjection, o.arity);
  const EChain image = tc(c);
  print(o, encode(image), to_json(image));
  return kExitOk;
}

EChain read_echain(const std::string& text) { return decode_echain(text); }

int cmd_tr(const Options& o) {
  const XChain image = tr(read_echain(o.simplex));
  print(o, encode(image), to_json(image));
  return kExitOk;
}

int cmd_homotopy(const Options& o) {
  const ChainSelfMap t = o.identity_map ? ChainSelfMap([](const Simplex& s) { return EChain::of(s); })
                                        : ChainSelfMap(tc_after_tr);
  const EChain h = homotopy_h(read_echain(o.simplex), t);
  print(o, encode(h), to_json(h));
  return kExitOk;
}

int cmd_boundary(const Options& o) {
  if (o.space == "e") {
    const EChain b = boundary_e(read_echain(o.input));
    print(o, encode(b), to_json(b));
  } else {
    const XChain b = boundary_x(decode_xchain(o.input, o.arity));
    print(o, encode(b), to_json(b));
  }
  return kExitOk;
}

int cmd_prism(const Options& o) {
  const Surjection u = decode_surjection(o.surjection, o.arity);
  std::string text;
  json j;
  if (o.prism_view == "vertices") {
    j = json::array();
    for (const VertexCoord& x : prism_vertices(u)) {
      const Permutation p = vertex_permutation(u, x);
      text += "(" + encode(x) + ") -> " + encode(p) + "\n";
      j.push_back({{"coords", x.coords}, {"permutation", encode(p)}});
    }
  } else if (o.prism_view == "maximal") {
    j = json::array();
    const Simplex fundamental = fundamental_simplex(u);
    for (const LatticePath& p : enumerate_maximal_paths(u)) {
      const Simplex s = path_to_simplex(u, p);
      const int sign = orientation_sign(u) * path_sign(p);
      text += "path (" + encode(p) + ") " + signed_int(sign) + " " + encode(s);
      if (s.is_degenerate()) text += " [degenerate]";
      if (s == fundamental) text += " [fundamental]";
      text += "\n";
      j.push_back({{"path", p.steps},
                   {"sign", sign},
                   {"simplex", encode(s)},
                   {"degenerate", s.is_degenerate()},
                   {"fundamental", s == fundamental}});
    }
  } else {
    const Simplex s = fundamental_simplex(u);
    const Word caes = caesura_sequence(u);
    text = "caesuras: " + (caes.empty() ? std::string("()") : encode(caes)) + "\norientation: " +
           signed_int(orientation_sign(u)) + "\nsimplex: " + encode(s) + "\n";
    j = {{"caesuras", caes}, {"orientation", orientation_sign(u)}, {"simplex", encode(s)}};
  }
  if (!text.empty() && text.back() == '\n') text.pop_back();
  print(o, text, j);
  return kExitOk;
}

template <class Basis>
void print_cell(const Options& o, const Basis& b) {
  const CellDescriptor cell = cell_descriptor(b);
  std::string text;
  const int r = cell.arity();
  for (Letter i = 1; i <= r; ++i)
    for (Letter j = i + 1; j <= r; ++j) {
      const bool ij = cell.i_before_j[pair_index(r, i, j)];
      text += "c_" + std::to_string(i) + std::to_string(j) + " = " + std::to_string(cell.mu.at(i, j)) + "  last " +
              (ij ? std::to_string(i) + "-then-" + std::to_string(j) : std::to_string(j) + "-then-" + std::to_string(i)) +
              "\n";
    }
  text += "filtration: F_" + std::to_string(cell.mu.max_entry());
  json j = to_json(cell);
  j["filtration"] = cell.mu.max_entry();
  print(o, text, j);
}

int cmd_complexity(const Options& o) {
  const bool simplex = o.space == "e" || (o.space.empty() && o.input.find(';') != std::string::npos);
  if (simplex) {
    const Simplex s = decode_simplex(o.input);
    if (s.is_degenerate()) throw Error(ErrorCode::degenerate, "degenerate simplex " + o.input);
    print_cell(o, s);
  } else {
    print_cell(o, decode_surjection(o.input, o.arity));
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  std::string text;
  json j = json::array();
  auto emit = [&](const std::string& s) {
    text += s + "\n";
    j.push_back(s);
  };
  if (o.space == "e")
    for (const Simplex& s : enumerate_simplices(*o.arity, o.degree)) emit(encode(s));
  else
    for (const Surjection& u : enumerate_surjections(*o.arity, o.degree)) emit(encode(u));
  text += "count: " + std::to_string(j.size());
  print(o, text, json{{"count", j.size()}, {"basis", j}});
  return kExitOk;
}

int cmd_homology(const Options& o) {
  const Space space = o.space == "e" ? Space::e : Space::x;
  const auto groups = homology(space, *o.arity, o.max_degree, o.filtration);
  std::string text;
  json j = json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    text += (k ? "\n" : "") + std::string("H_") + std::to_string(k) + " = " + to_string(groups[k]);
    j.push_back({{"degree", k}, {"rank", groups[k].rank}, {"torsion", groups[k].torsion},
                 {"group", to_string(groups[k])}});
  }
  print(o, text, j);
  return kExitOk;
}

SweepConfig load_config(const Options& o) {
  SweepConfig cfg;
  std::string path = o.config_path;
  if (path.empty())
    if (const char* env = std::getenv("EINF_CONFIG")) path = env;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::out_of_range, "cannot open config file " + path);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw ParseError(e.byte, std::string("config file: ") + e.what());
    }
    cfg = config_from_json(j, cfg);
  }
  if (o.max_arity) cfg.max_arity = *o.max_arity;
  if (o.verify_degree) cfg.max_degree = *o.verify_degree;
  if (o.coverage_bound) cfg.coverage_bound = *o.coverage_bound;
  if (o.jobs) cfg.parallelism = *o.jobs;
  cfg.validate();
  return cfg;
}

int cmd_verify(const Options& o) {
  const SweepConfig cfg = load_config(o);
  std::vector<std::string> names;
  if (o.suite != "all") names = {o.suite};
  else if (!cfg.suites.empty() && cfg.suites != std::vector<std::string>{"all"}) names = cfg.suites;
  else names = suite_names();

  bool ok = true;
  json reports = json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, cfg);
    ok = ok && r.passed();
    if (as_json(o)) reports.push_back(report_to_json(r));
    else std::cout << report_to_text(r) << std::flush;
  }
  if (as_json(o)) std::cout << json{{"passed", ok}, {"suites", reports}}.dump(2) << '\n';
  else std::cout << (ok ? "all suites passed" : "verification FAILED") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"einf: Barratt-Eccles and surjection complexes, prisms, and the maps TC/TR"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* tc_cmd = app.add_subcommand("tc", "Twisted Eilenberg-Zilber map of a surjection (or X-chain)");
  tc_cmd->add_option("--surjection", o.surjection, "e.g. 1,2,3,1,2")->required();
  tc_cmd->add_option("--arity", o.arity, "Arity (default: largest letter)");

  auto* tr_cmd = app.add_subcommand("tr", "Table reduction of a simplex (or E-chain)");
  tr_cmd->add_option("--simplex", o.simplex, "e.g. 1,2,3;3,2,1")->required();

  auto* h_cmd = app.add_subcommand("homotopy", "Homotopy H for T = tc o tr");
  h_cmd->add_option("--simplex", o.simplex, "Simplex or E-chain")->required();
  h_cmd->add_flag("--identity-map", o.identity_map, "Use T = Id instead");

  auto* b_cmd = app.add_subcommand("boundary", "Differential of a chain");
  b_cmd->add_option("--space", o.space, "e or x")->required()->check(CLI::IsMember({"e", "x"}));
  b_cmd->add_option("--input", o.input, "Chain, e.g. \"1,2,1 - 2,1,2\"")->required();
  b_cmd->add_option("--arity", o.arity, "Arity of surjection terms");

  auto* p_cmd = app.add_subcommand("prism", "Prism of a surjection");
  p_cmd->add_option("view", o.prism_view, "vertices | maximal | fundamental")
      ->required()
      ->check(CLI::IsMember({"vertices", "maximal", "fundamental"}));
  p_cmd->add_option("--surjection", o.surjection, "Surjection word")->required();
  p_cmd->add_option("--arity", o.arity, "Arity (default: largest letter)");

  auto* c_cmd = app.add_subcommand("complexity", "Complexity matrix and cell of a surjection or simplex");
  c_cmd->add_option("--input", o.input, "Surjection or simplex")->required();
  c_cmd->add_option("--space", o.space, "e or x (default: guess from ';')")->check(CLI::IsMember({"e", "x"}));
  c_cmd->add_option("--arity", o.arity, "Arity of a surjection input");

  auto* e_cmd = app.add_subcommand("enumerate", "List a basis");
  e_cmd->add_option("--space", o.space, "e or x")->required()->check(CLI::IsMember({"e", "x"}));
  e_cmd->add_option("--arity", o.arity, "Arity")->required()->check(CLI::PositiveNumber);
  e_cmd->add_option("--degree", o.degree, "Degree")->required()->check(CLI::NonNegativeNumber);

  auto* hom_cmd = app.add_subcommand("homology", "Integer homology");
  hom_cmd->add_option("--space", o.space, "e or x")->required()->check(CLI::IsMember({"e", "x"}));
  hom_cmd->add_option("--arity", o.arity, "Arity")->required()->check(CLI::PositiveNumber);
  hom_cmd->add_option("--max-degree", o.max_degree, "Top degree")->required()->check(CLI::NonNegativeNumber);
  hom_cmd->add_option("--filtration", o.filtration, "Restrict to F_n")->check(CLI::PositiveNumber);

  auto* v_cmd = app.add_subcommand("verify", "Run verification suites");
  v_cmd->add_option("--suite", o.suite, "Suite name or all");
  v_cmd->add_option("--max-arity", o.max_arity, "Largest arity swept");
  v_cmd->add_option("--max-degree", o.verify_degree, "Largest degree swept");
  v_cmd->add_option("--coverage-bound", o.coverage_bound, "Multiplicity bound for coverage");
  v_cmd->add_option("--jobs", o.jobs, "Worker threads");
  v_cmd->add_option("--config", o.config_path, "JSON config (default: $EINF_CONFIG)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  if (c_cmd->parsed() && c_cmd->count("--space") == 0) o.space.clear();

  try {
    if (tc_cmd->parsed()) return cmd_tc(o);
    if (tr_cmd->parsed()) return cmd_tr(o);
    if (h_cmd->parsed()) return cmd_homotopy(o);
    if (b_cmd->parsed()) return cmd_boundary(o);
    if (p_cmd->parsed()) return cmd_prism(o);
    if (c_cmd->parsed()) return cmd_complexity(o);
    if (e_cmd->parsed()) return cmd_enumerate(o);
    if (hom_cmd->parsed()) return cmd_homology(o);
    if (v_cmd->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
