#include "einf/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "einf/codec.hpp"
#include "einf/filtration.hpp"
#include "einf/homology.hpp"
#include "einf/prisms.hpp"
#include "einf/transfers.hpp"

namespace einf {

namespace {

using Failures = std::vector<Failure>;

// Degree caps on the E side, where the basis grows like r! (r! - 1)^d.
int e_degree_cap(int r, int max_degree) {
  if (r <= 3) return max_degree;
  if (r == 4) return std::min(max_degree, 2);
  return std::min(max_degree, 1);
}

int homotopy_degree_cap(int r, int max_degree) {
  if (r <= 2) return max_degree + 1;
  if (r == 3) return std::max(max_degree - 1, 0);
  return std::max(max_degree - 2, 0);
}

std::vector<Surjection> surjections_upto(int max_arity, int max_degree) {
  std::vector<Surjection> out;
  for (int r = 1; r <= max_arity; ++r)
    for (int d = 0; d <= max_degree; ++d) {
      auto b = enumerate_surjections(r, d);
      out.insert(out.end(), b.begin(), b.end());
    }
  return out;
}

template <class Cap>
std::vector<Simplex> simplices_upto(int max_arity, Cap cap) {
  std::vector<Simplex> out;
  for (int r = 1; r <= max_arity; ++r)
    for (int d = 0; d <= cap(r); ++d) {
      auto b = enumerate_simplices(r, d);
      out.insert(out.end(), b.begin(), b.end());
    }
  return out;
}

std::string label(const Surjection& u) { return "u=" + encode(u); }
std::string label(const Simplex& s) { return "s=" + encode(s); }

template <class A, class B>
void expect_equal(Failures& f, const std::string& input, const A& expected, const B& actual) {
  if (!(expected == actual)) f.push_back({input, encode(expected), encode(actual)});
}

template <class Basis>
void expect_cells_below(Failures& f, const std::string& input, const std::string& what,
                        const LinearCombination<Basis>& image, const CellDescriptor& bound) {
  for (const auto& [b, c] : image.terms())
    if (!cell_leq(cell_descriptor(b), bound))
      f.push_back({input + " " + what, "cell <= input cell", "term " + encode(b) + " escapes"});
}

// One suite = an instance list plus a per-instance check. The kernel runs the
// checks serially or with OpenMP and merges results in instance order.
struct Plan {
  std::size_t size = 0;
  std::function<Failures(std::size_t)> check;
};

Failures guarded(const Plan& plan, std::size_t i) {
  try {
    return plan.check(i);
  } catch (const std::exception& e) {
    return {{"instance #" + std::to_string(i), "no exception", e.what()}};
  }
}

std::vector<Failures> sweep_serial(const Plan& plan) {
  std::vector<Failures> slots(plan.size);
  for (std::size_t i = 0; i < plan.size; ++i) slots[i] = guarded(plan, i);
  return slots;
}

std::vector<Failures> sweep_parallel(const Plan& plan, int jobs) {
  std::vector<Failures> slots(plan.size);
  const long n = static_cast<long>(plan.size);
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
  for (long i = 0; i < n; ++i) slots[i] = guarded(plan, static_cast<std::size_t>(i));
  return slots;
}

template <class T, class F>
Plan plan_over(std::vector<T> items, F check) {
  auto shared = std::make_shared<std::vector<T>>(std::move(items));
  Plan p;
  p.size = shared->size();
  p.check = [shared, check](std::size_t i) { return check((*shared)[i]); };
  return p;
}

Plan plan_d2_x(const SweepConfig& cfg) {
  const SignRule rule = cfg.x_sign_rule;
  return plan_over(surjections_upto(cfg.max_arity, cfg.max_degree), [rule](const Surjection& u) {
    Failures f;
    const XChain dd = boundary_x(boundary_x(u, rule), rule);
    if (!dd.is_zero()) f.push_back({label(u), "0", encode(dd)});
    return f;
  });
}

Plan plan_d2_e(const SweepConfig& cfg) {
  const int D = cfg.max_degree;
  return plan_over(simplices_upto(cfg.max_arity, [D](int r) { return e_degree_cap(r, D); }), [](const Simplex& s) {
    Failures f;
    const EChain dd = boundary_e(boundary_e(s));
    if (!dd.is_zero()) f.push_back({label(s), "0", encode(dd)});
    return f;
  });
}

Plan plan_chainmap_tc(const SweepConfig& cfg) {
  return plan_over(surjections_upto(cfg.max_arity, cfg.max_degree), [](const Surjection& u) {
    Failures f;
    expect_equal(f, label(u) + " tc(dx u) vs de tc(u)", boundary_e(tc(u)), tc(boundary_x(u)));
    return f;
  });
}

Plan plan_chainmap_tr(const SweepConfig& cfg) {
  const int D = cfg.max_degree;
  return plan_over(simplices_upto(cfg.max_arity, [D](int r) { return e_degree_cap(r, D); }), [](const Simplex& s) {
    Failures f;
    expect_equal(f, label(s) + " tr(de s) vs dx tr(s)", boundary_x(table_reduction(s)), tr(boundary_e(s)));
    return f;
  });
}

Plan plan_retraction(const SweepConfig& cfg) {
  return plan_over(surjections_upto(cfg.max_arity, cfg.max_degree), [](const Surjection& u) {
    Failures f;
    expect_equal(f, label(u) + " tr(tc(u))", XChain::of(u), tr(tc(u)));
    return f;
  });
}

Plan plan_homotopy(const SweepConfig& cfg) {
  const int D = cfg.max_degree;
  return plan_over(simplices_upto(cfg.max_arity, [D](int r) { return homotopy_degree_cap(r, D); }),
                   [](const Simplex& s) {
                     Failures f;
                     const ChainSelfMap t = tc_after_tr;
                     EChain rhs = EChain::of(s);
                     rhs += boundary_e(homotopy_h(s, t));
                     rhs += homotopy_h(boundary_e(s), t);
                     expect_equal(f, label(s) + " T(s) vs s + dH(s) + H(ds)", tc_after_tr(s), rhs);
                     return f;
                   });
}

Plan plan_characterization(const SweepConfig& cfg) {
  return plan_over(surjections_upto(std::min(cfg.max_arity, 3), cfg.max_degree), [](const Surjection& u) {
    Failures f;
    const Simplex fundamental = fundamental_simplex(u);
    for (const LatticePath& p : enumerate_maximal_paths(u)) {
      const Simplex s = path_to_simplex(u, p);
      if (s.is_degenerate()) continue;
      const XChain expected = (s == fundamental) ? XChain::of(u) : XChain(u.arity(), u.degree());
      expect_equal(f, label(u) + " path " + encode(p), expected, table_reduction(s));
    }
    if (fundamental.is_degenerate()) f.push_back({label(u), "nondegenerate fundamental simplex", encode(fundamental)});
    return f;
  });
}

using Element = std::variant<Surjection, Simplex, Permutation>;

Failures check_equivariance(const Element& e) {
  Failures f;
  if (const auto* w0 = std::get_if<Permutation>(&e)) {
    // Degree 0: both transfers are the identity of Z[Σ_r].
    const Surjection u = as_surjection(*w0);
    const Simplex v(std::vector<Permutation>{*w0});
    expect_equal(f, "w=" + encode(*w0) + " tc", EChain::of(v), tc(u));
    expect_equal(f, "w=" + encode(*w0) + " tr", XChain::of(u), table_reduction(v));
    return f;
  }
  if (const auto* u = std::get_if<Surjection>(&e)) {
    const auto coords = prism_vertices(*u);
    for (const Permutation& w : all_permutations(u->arity())) {
      const std::string in = label(*u) + " w=" + encode(w);
      const Surjection wu = relabel(w, *u);
      expect_equal(f, in + " dx", relabel(w, boundary_x(*u)), boundary_x(wu));
      expect_equal(f, in + " tc", relabel(w, tc(*u)), tc(wu));
      for (const VertexCoord& x : coords) {
        // Value w(k) of w·u carries the occurrences of k.
        VertexCoord y{std::vector<int>(u->arity())};
        for (Letter k = 1; k <= u->arity(); ++k) y.coords[w(k) - 1] = x[k];
        expect_equal(f, in + " vertex " + encode(x), relabel(w, vertex_permutation(*u, x)), vertex_permutation(wu, y));
      }
    }
    return f;
  }
  const Simplex& s = std::get<Simplex>(e);
  for (const Permutation& w : all_permutations(s.arity())) {
    const std::string in = label(s) + " w=" + encode(w);
    const Simplex ws = relabel(w, s);
    expect_equal(f, in + " de", relabel(w, boundary_e(s)), boundary_e(ws));
    expect_equal(f, in + " tr", relabel(w, table_reduction(s)), table_reduction(ws));
  }
  return f;
}

Plan plan_equivariance(const SweepConfig& cfg) {
  const int A = std::min(cfg.max_arity, 3);
  const int D = std::min(cfg.max_degree, 2);
  std::vector<Element> items;
  for (int r = 1; r <= std::max(cfg.max_arity, 5); ++r)
    for (const Permutation& w : all_permutations(r)) items.emplace_back(w);
  for (const Surjection& u : surjections_upto(A, D)) items.emplace_back(u);
  for (const Simplex& s : simplices_upto(A, [D](int) { return D; })) items.emplace_back(s);
  return plan_over(std::move(items), check_equivariance);
}

template <class Basis>
void check_nested(Failures& f, const std::string& in, const Basis& b) {
  const int top = complexity(b).max_entry();
  if (!in_filtration(b, top)) f.push_back({in, "in F_" + std::to_string(top), "not in F_" + std::to_string(top)});
  if (!in_filtration(b, top + 1)) f.push_back({in, "in F_" + std::to_string(top + 1), "missing"});
  if (top > 1 && in_filtration(b, top - 1)) f.push_back({in, "not in F_" + std::to_string(top - 1), "present"});
}

Plan plan_filtration(const SweepConfig& cfg) {
  const int A = std::min(cfg.max_arity, 3);
  const int D = cfg.max_degree;
  std::vector<Element> items;
  for (const Surjection& u : surjections_upto(A, D)) items.emplace_back(u);
  for (const Simplex& s : simplices_upto(A, [D](int r) { return e_degree_cap(r, D); })) items.emplace_back(s);
  return plan_over(std::move(items), [](const Element& e) {
    Failures f;
    if (const auto* u = std::get_if<Surjection>(&e)) {
      const std::string in = label(*u);
      const CellDescriptor cell = cell_descriptor(*u);
      check_nested(f, in, *u);
      expect_cells_below(f, in, "dx", boundary_x(*u), cell);
      expect_cells_below(f, in, "tc", tc(*u), cell);
      if (!(cell_descriptor(fundamental_simplex(*u)) == cell))
        f.push_back({in, "cell(fundamental) == cell(u)", "differs"});
      return f;
    }
    const Simplex& s = std::get<Simplex>(e);
    const std::string in = label(s);
    const CellDescriptor cell = cell_descriptor(s);
    check_nested(f, in, s);
    expect_cells_below(f, in, "de", boundary_e(s), cell);
    expect_cells_below(f, in, "tr", table_reduction(s), cell);
    expect_cells_below(f, in, "H", homotopy_h(s, tc_after_tr), cell);
    return f;
  });
}

Plan plan_coverage(const SweepConfig& cfg) {
  const int A = std::min(cfg.max_arity, 3);
  const int N = std::min(cfg.max_degree, 2);
  const int bound = cfg.coverage_bound;
  return plan_over(simplices_upto(A, [N](int) { return N; }), [bound](const Simplex& s) {
    Failures f;
    const auto u = covering_surjection(s, bound);
    if (!u) f.push_back({label(s), "covering surjection with d_k <= " + std::to_string(bound), "NotFound"});
    else if (!simplex_in_prism(s, *u)) f.push_back({label(s), "inside tau_" + encode(*u), "outside"});
    return f;
  });
}

struct HomologyCase {
  enum class Kind { counts, full, filtered } kind;
  int arity;
  int degree;  // counts: the degree; otherwise the max homology degree
  int level;   // filtered only
};

std::string describe(const std::vector<AbelianGroup>& h) {
  std::string out;
  for (std::size_t k = 0; k < h.size(); ++k) out += (k ? ", H_" : "H_") + std::to_string(k) + "=" + to_string(h[k]);
  return out;
}

Failures check_homology(const HomologyCase& c) {
  Failures f;
  const std::string in = "r=" + std::to_string(c.arity);
  if (c.kind == HomologyCase::Kind::counts) {
    const std::string at = in + " d=" + std::to_string(c.degree);
    const auto xs = enumerate_surjections(c.arity, c.degree);
    if (xs.size() != surjection_count(c.arity, c.degree))
      f.push_back({at + " |X|", std::to_string(surjection_count(c.arity, c.degree)), std::to_string(xs.size())});
    if (c.degree <= e_degree_cap(c.arity, c.degree)) {
      const auto es = enumerate_simplices(c.arity, c.degree);
      if (es.size() != simplex_count(c.arity, c.degree))
        f.push_back({at + " |E|", std::to_string(simplex_count(c.arity, c.degree)), std::to_string(es.size())});
    }
    return f;
  }
  const std::optional<int> level =
      c.kind == HomologyCase::Kind::filtered ? std::optional<int>(c.level) : std::nullopt;
  const std::string at = in + (level ? " F_" + std::to_string(*level) : std::string(" full")) + " D=" +
                         std::to_string(c.degree);
  const auto hx = homology(Space::x, c.arity, c.degree, level);
  const auto he = homology(Space::e, c.arity, c.degree, level);
  if (hx != he) f.push_back({at + " H(X) vs H(E)", describe(hx), describe(he)});
  for (const auto& [space, h] : {std::pair{Space::x, hx}, std::pair{Space::e, he}}) {
    const auto betti = betti_mod_prime(space, c.arity, c.degree, level);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (betti[k] != h[k].rank)
        f.push_back({at + (space == Space::x ? " X" : " E") + " rational rank H_" + std::to_string(k),
                     std::to_string(h[k].rank), std::to_string(betti[k])});
  }
  if (!level) {
    std::vector<AbelianGroup> point(c.degree + 1);
    point[0].rank = 1;
    if (hx != point) f.push_back({at + " X contractible", describe(point), describe(hx)});
  }
  return f;
}

Plan plan_homology(const SweepConfig& cfg) {
  std::vector<HomologyCase> items;
  for (int r = 1; r <= cfg.max_arity; ++r)
    for (int d = 0; d <= cfg.max_degree; ++d) items.push_back({HomologyCase::Kind::counts, r, d, 0});
  for (int r = 1; r <= std::min(cfg.max_arity, 3); ++r) {
    const int top = r <= 2 ? cfg.max_degree : std::min(cfg.max_degree, 2);
    items.push_back({HomologyCase::Kind::full, r, top, 0});
    for (int n = 1; n <= 3; ++n) items.push_back({HomologyCase::Kind::filtered, r, top, n});
  }
  return plan_over(std::move(items), check_homology);
}

Plan make_plan(std::string_view name, const SweepConfig& cfg) {
  static const std::vector<std::pair<std::string_view, Plan (*)(const SweepConfig&)>> table = {
      {"d2_e", plan_d2_e},
      {"d2_x", plan_d2_x},
      {"chainmap_tc", plan_chainmap_tc},
      {"chainmap_tr", plan_chainmap_tr},
      {"retraction", plan_retraction},
      {"homotopy", plan_homotopy},
      {"characterization", plan_characterization},
      {"equivariance", plan_equivariance},
      {"filtration", plan_filtration},
      {"coverage", plan_coverage},
      {"homology", plan_homology},
  };
  for (const auto& [n, make] : table)
    if (n == name) return make(cfg);
  throw Error(ErrorCode::unknown_suite, std::string(name));
}

SuiteReport run(std::string_view name, const SweepConfig& config, int jobs) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(name, config);
  const std::vector<Failures> slots = jobs <= 1 ? sweep_serial(plan) : sweep_parallel(plan, jobs);
  SuiteReport report;
  report.suite = std::string(name);
  report.instances_checked = plan.size;
  for (const auto& s : slots) report.failures.insert(report.failures.end(), s.begin(), s.end());
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

void SweepConfig::validate() const {
  if (max_arity < 1) throw Error(ErrorCode::out_of_range, "max_arity must be >= 1");
  if (max_degree < 0) throw Error(ErrorCode::out_of_range, "max_degree must be >= 0");
  if (coverage_bound < 1) throw Error(ErrorCode::out_of_range, "coverage_bound must be >= 1");
  if (parallelism < 1) throw Error(ErrorCode::out_of_range, "parallelism must be >= 1");
  for (const auto& s : suites)
    if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw Error(ErrorCode::unknown_suite, s);
}

SweepConfig config_from_json(const nlohmann::json& j, SweepConfig base) {
  if (!j.is_object()) throw ParseError(0, "config must be a JSON object");
  base.max_arity = j.value("max_arity", base.max_arity);
  base.max_degree = j.value("max_degree", base.max_degree);
  base.coverage_bound = j.value("coverage_bound", base.coverage_bound);
  base.parallelism = j.value("parallelism", base.parallelism);
  if (j.contains("suites")) base.suites = j["suites"].get<std::vector<std::string>>();
  base.validate();
  return base;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"d2_e",          "d2_x",        "chainmap_tc", "chainmap_tr",
                                                 "retraction",    "homotopy",    "characterization",
                                                 "equivariance",  "filtration",  "coverage",    "homology"};
  return names;
}

SuiteReport run_suite_serial(std::string_view name, const SweepConfig& config) { return run(name, config, 1); }

SuiteReport run_suite_parallel(std::string_view name, const SweepConfig& config, int jobs) {
  return run(name, config, std::max(jobs, 1) == 1 ? 2 : jobs);
}

SuiteReport run_suite(std::string_view name, const SweepConfig& config) {
  return run(name, config, config.parallelism);
}

std::string report_to_text(const SuiteReport& r, bool with_time) {
  constexpr std::size_t shown = 20;
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.instances_checked << " instances, "
      << r.failures.size() << " failures";
  if (with_time) out << " (" << r.wall_time_seconds << " s)";
  out << '\n';
  for (std::size_t i = 0; i < std::min(shown, r.failures.size()); ++i) {
    const Failure& f = r.failures[i];
    out << "  " << f.input << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << '\n';
  }
  if (r.failures.size() > shown) out << "  ... " << r.failures.size() - shown << " more\n";
  return out.str();
}

nlohmann::json report_to_json(const SuiteReport& r, bool with_time) {
  constexpr std::size_t shown = 100;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < std::min(shown, r.failures.size()); ++i)
    failures.push_back(
        {{"input", r.failures[i].input}, {"expected", r.failures[i].expected}, {"actual", r.failures[i].actual}});
  nlohmann::json j = {{"suite", r.suite},
                      {"passed", r.passed()},
                      {"instances_checked", r.instances_checked},
                      {"failure_count", r.failures.size()},
                      {"failures", failures}};
  if (with_time) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

}  // namespace einf
