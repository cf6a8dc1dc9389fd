#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "constellation/betti.hpp"
#include "constellation/buchstaber.hpp"
#include "constellation/complex.hpp"
#include "constellation/corpus.hpp"
#include "constellation/error.hpp"
#include "constellation/gale.hpp"
#include "constellation/homology.hpp"
#include "constellation/io.hpp"
#include "constellation/polytope.hpp"
#include "constellation/verify.hpp"
#include "constellation/z2.hpp"

using namespace constellation;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  int threads = 0;
  std::string field = "gf2";
  std::string output;
};

// A file holds a bare complex, polytope or configuration, or a corpus entry
// wrapping one of them.
struct Input {
  std::optional<SimplicialComplex> complex;
  std::optional<Polytope> polytope;
  std::optional<PointConfiguration> configuration;
};

Input load_input(const std::string& path) {
  const Json j = read_json_file(path);
  Input in;
  auto wrap = [&](const std::string& what, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(path + ": " + what + ": " + e.what());
    }
  };
  if (j.is_object() && (j.contains("complex") || j.contains("polytope") || j.contains("configuration"))) {
    if (j.contains("complex")) wrap("complex", [&] { in.complex = complex_from_json(j["complex"]); });
    if (j.contains("polytope")) wrap("polytope", [&] { in.polytope = polytope_from_json(j["polytope"]); });
    if (j.contains("configuration")) wrap("configuration", [&] { in.configuration = configuration_from_json(j["configuration"]); });
  } else if (j.is_object() && j.contains("m")) {
    wrap("complex", [&] { in.complex = complex_from_json(j); });
  } else if (j.is_object() && j.contains("vertices")) {
    wrap("polytope", [&] { in.polytope = polytope_from_json(j); });
  } else if (j.is_object() && j.contains("points")) {
    wrap("configuration", [&] { in.configuration = configuration_from_json(j); });
  } else {
    throw Error(path + ": not a complex, polytope or configuration");
  }
  return in;
}

SimplicialComplex need_complex(const Input& in, const std::string& path) {
  if (in.complex) return *in.complex;
  throw Error(path + ": expected a simplicial complex");
}

const Polytope& need_polytope(const Input& in, const std::string& path) {
  if (in.polytope) return *in.polytope;
  throw Error(path + ": expected a polytope");
}

// The complex a command acts on: a complex as given, K(P) (or K_P with
// facets) for a polytope, the constellation complex for a configuration.
SimplicialComplex complex_of(const Input& in, bool facets, int threads) {
  if (in.complex) return *in.complex;
  if (in.polytope) return facets ? facet_nerve(*in.polytope) : nerve_complex(*in.polytope);
  return constellation_complex(*in.configuration, threads);
}

void emit(const Globals& g, const Json& j) {
  if (g.output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(g.output, j);
  }
}

std::string bits_row(const GF2Matrix& m, std::size_t r) {
  std::string s;
  for (std::size_t c = 0; c < m.cols(); ++c) s += m.get(r, c) ? '1' : '0';
  return s;
}

Json bound_json(const Bound& b) { return {{"value", b.value}, {"tag", b.tag}}; }

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}};
}

void print_suite(const SuiteReport& r) {
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "  PASS  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
  }
  std::printf("%s %s  [%zu checks, %.2f s]\n", r.passed() ? "PASS" : "FAIL", r.suite.c_str(), r.checks.size(), r.seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polytopes, Gale diagrams, constellation complexes and Buchstaber invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--threads", g.threads, "OpenMP threads (0: default)")->check(CLI::NonNegativeNumber);
  app.add_option("--field", g.field, "Coefficient field")->check(CLI::IsMember({"gf2", "q"}));
  app.add_option("-o,--output", g.output, "Write JSON to a file instead of stdout");

  std::string file;
  std::string set_text;
  bool facets = false;

  auto* dual = app.add_subcommand("dual", "Alexander dual of a complex");
  dual->add_option("file", file, "Complex file")->required();

  auto* lk = app.add_subcommand("link", "Link of a face");
  lk->add_option("file", file, "Complex file")->required();
  lk->add_option("--face", set_text, "Face as comma-separated 0-based vertices")->required();

  auto* sub = app.add_subcommand("sub", "Full subcomplex on a vertex set");
  sub->add_option("file", file, "Complex file")->required();
  sub->add_option("--set", set_text, "Comma-separated 0-based vertices")->required();

  auto* nerve = app.add_subcommand("nerve", "Nerve complex K(P) of a polytope");
  nerve->add_option("file", file, "Polytope file")->required();
  nerve->add_flag("--facets", facets, "Complex on facets instead (K_P)");

  auto* gale = app.add_subcommand("gale", "Gale diagram of a polytope");
  gale->add_option("file", file, "Polytope file")->required();

  auto* cons = app.add_subcommand("constellation", "Constellation complex of a configuration");
  cons->add_option("file", file, "Configuration file")->required();

  bool via_links = false;
  auto* betti = app.add_subcommand("betti", "Bigraded Betti numbers");
  betti->add_option("file", file, "Complex, polytope (K(P)) or configuration file")->required();
  betti->add_flag("--facets", facets, "For a polytope, use K_P");
  betti->add_flag("--via-links", via_links, "Table of the dual through links of the given complex");
  std::optional<int> linear_r;
  betti->add_option("--linear", linear_r, "Also test for a linear resolution with this r");

  auto* fvec = app.add_subcommand("fvector", "f-vector of a polytope or complex");
  fvec->add_option("file", file, "Polytope or complex file")->required();

  auto* fnl = app.add_subcommand("fnl", "Face counts f_{n,l} of a polytope");
  fnl->add_option("file", file, "Polytope file")->required();

  auto* flag = app.add_subcommand("flag", "Flagness of a complex");
  flag->add_option("file", file, "Complex, polytope (K(P)) or configuration file")->required();
  flag->add_flag("--facets", facets, "For a polytope, use K_P");

  std::optional<int> nk;
  auto* neigh = app.add_subcommand("neighborly", "k-neighborliness of a polytope");
  neigh->add_option("file", file, "Polytope file")->required();
  neigh->add_option("--k", nk, "Test this k; without it the largest k is reported");

  bool real = false, bounds = false;
  std::optional<int> xi_k;
  std::uint64_t budget = 50'000'000;
  int r_max = 64;
  auto* buch = app.add_subcommand("buchstaber", "Real Buchstaber invariant and bounds");
  buch->add_option("file", file, "Complex, polytope (K(P)) or configuration file")->required();
  buch->add_flag("--facets", facets, "For a polytope, use K_P");
  buch->add_flag("--real", real, "Exact s_R with a witness");
  buch->add_option("--xi", xi_k, "Search for a xi map with this k")->check(CLI::Range(1, 6));
  buch->add_flag("--bounds", bounds, "Bounds for s and s_R");
  buch->add_option("--budget", budget, "Search node budget per rank");
  buch->add_option("--r-max", r_max, "Largest rank searched");

  int ck = 3, colors = 2;
  auto* col = app.add_subcommand("coloring", "Proper colorings of the nonzero vectors of Z_2^k");
  col->add_option("--k", ck, "Dimension k")->check(CLI::Range(1, 5));
  col->add_option("--colors", colors, "Number of colors")->check(CLI::NonNegativeNumber);

  bool two = false;
  auto* fano = app.add_subcommand("fano", "Fano plane checks");
  fano->add_flag("--check-two-colorings", two, "Check all 128 two-colorings")->required();

  std::uint64_t trials = 100'000, seed = 20240917;
  auto* circle = app.add_subcommand("fano-circle", "Random direction experiment on the Fano plane");
  circle->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  circle->add_option("--seed", seed, "Seed");

  std::string suite;
  bool regen = false;
  std::string corpus;
  auto* ver = app.add_subcommand("verify", "Run a verification suite or all of them");
  ver->add_option("suite", suite, "Suite name or all")->required();
  ver->add_flag("--regen-oracles", regen, "Recompute derived expected values in the corpus first");
  ver->add_option("--corpus", corpus, "Corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const Field field = parse_field(g.field);
    if (*dual) {
      emit(g, complex_to_json(alexander_dual(need_complex(load_input(file), file))));
    } else if (*lk) {
      emit(g, complex_to_json(link(need_complex(load_input(file), file), parse_vertex_list(set_text))));
    } else if (*sub) {
      emit(g, complex_to_json(full_subcomplex(need_complex(load_input(file), file), parse_vertex_list(set_text))));
    } else if (*nerve) {
      const Input in = load_input(file);
      const Polytope& p = need_polytope(in, file);
      emit(g, complex_to_json(facets ? facet_nerve(p) : nerve_complex(p)));
    } else if (*gale) {
      emit(g, configuration_to_json(gale_diagram(need_polytope(load_input(file), file))));
    } else if (*cons) {
      const Input in = load_input(file);
      if (!in.configuration) throw Error(file + ": expected a configuration");
      emit(g, complex_to_json(constellation_complex(*in.configuration, g.threads)));
    } else if (*betti) {
      const SimplicialComplex k = complex_of(load_input(file), facets, g.threads);
      HochsterOptions opt;
      opt.threads = g.threads;
      const BettiTable t = via_links ? betti_via_links(k, field) : hochster_betti(k, field, opt);
      Json j = betti_to_json(t);
      if (linear_r) j["linear_resolution"] = has_linear_resolution(t, *linear_r);
      if (g.json || !g.output.empty()) {
        emit(g, j);
      } else {
        std::cout << format_betti_table(t);
        if (linear_r) std::cout << "linear resolution (r = " << *linear_r << "): " << (has_linear_resolution(t, *linear_r) ? "yes" : "no") << '\n';
      }
    } else if (*fvec) {
      const Input in = load_input(file);
      emit(g, Json{{"f_vector", in.polytope ? f_vector(*in.polytope) : f_vector(complex_of(in, false, g.threads))}});
    } else if (*fnl) {
      Json entries = Json::array();
      for (const auto& [key, v] : f_nl(need_polytope(load_input(file), file)))
        entries.push_back({{"n", key.first}, {"l", key.second}, {"value", v}});
      emit(g, Json{{"f_nl", entries}});
    } else if (*flag) {
      const SimplicialComplex k = complex_of(load_input(file), facets, g.threads);
      emit(g, Json{{"flag", is_flag(k)}});
    } else if (*neigh) {
      const Input in = load_input(file);
      const Polytope& p = need_polytope(in, file);
      if (nk) {
        emit(g, Json{{"k", *nk}, {"neighborly", is_k_neighborly(p, *nk)}});
      } else {
        int k = 0;
        while (k < p.num_vertices() && is_k_neighborly(p, k + 1)) ++k;
        emit(g, Json{{"max_k", k}});
      }
    } else if (*buch) {
      const SimplicialComplex k = complex_of(load_input(file), facets, g.threads);
      RealSearchOptions opt;
      opt.threads = g.threads;
      opt.node_budget = budget;
      opt.r_max = r_max;
      if (!real && !xi_k && !bounds) real = true;
      Json out;
      if (real) {
        const RealBuchstaberResult r = s_real_exact(k, opt);
        Json rows = Json::array();
        if (r.witness)
          for (std::size_t i = 0; i < r.witness->generators.rows(); ++i) rows.push_back(bits_row(r.witness->generators, i));
        Json refuted = Json::array();
        for (const auto& [rank, nodes] : r.refutations) refuted.push_back({{"rank", rank}, {"nodes", nodes}});
        out["real"] = {{"status", r.status == RealBuchstaberResult::Status::Exact ? "exact" : "bounded"},
                       {"value", r.value()},
                       {"lower", r.lower},
                       {"upper", r.upper},
                       {"witness", rows},
                       {"refutations", refuted},
                       {"note", r.note}};
        if (!g.json && g.output.empty()) {
          std::cout << "s_R = " << r.value();
          if (r.status == RealBuchstaberResult::Status::Bounded) std::cout << " (bounded: " << r.lower << " <= s_R <= " << r.upper << ", " << r.note << ")";
          std::cout << "\nwitness (" << k.num_vertices() << " x " << r.lower << "):\n";
          for (const auto& row : rows) std::cout << "  " << row.get<std::string>() << '\n';
        }
      }
      if (xi_k) {
        const XiSearchResult x = s_real_lower_via_xi(k, *xi_k);
        Json assignment = nullptr;
        if (x.map) {
          assignment = Json::array();
          for (int a = 1; a <= static_cast<int>(x.map->assignment.size()); ++a)
            assignment.push_back({{"a", a}, {"nonface", k.minimal_nonfaces()[static_cast<std::size_t>(x.map->assignment[static_cast<std::size_t>(a - 1)])].indices()}});
        }
        out["xi"] = {{"k", *xi_k}, {"found", x.map.has_value()}, {"nodes", x.nodes}, {"assignment", assignment}};
        if (!g.json && g.output.empty()) {
          if (x.map) {
            std::cout << "xi map for k = " << *xi_k << " (certifies s_R >= " << *xi_k << "):\n";
            for (const auto& a : assignment) std::cout << "  " << a["a"].get<int>() << " -> " << a["nonface"].dump() << '\n';
          } else {
            std::cout << "no xi map for k = " << *xi_k << " (search exhausted after " << x.nodes << " nodes)\n";
          }
        }
      }
      if (bounds) {
        const SBoundsReport b = s_bounds(k, opt);
        out["bounds"] = {{"s_lower", bound_json(b.s_lower)},       {"s_upper", bound_json(b.s_upper)},
                         {"s_real_lower", bound_json(b.s_real_lower)}, {"s_real_upper", bound_json(b.s_real_upper)},
                         {"s_real_exact", b.s_real_exact},         {"s_exact", b.s_exact}};
        if (!g.json && g.output.empty()) std::cout << out["bounds"].dump(2) << '\n';
      }
      if (g.json || !g.output.empty()) emit(g, out);
    } else if (*col) {
      const ColoringSearchResult r = proper_coloring_search(ck, colors);
      Json out = {{"k", ck}, {"colors", colors}, {"found", r.coloring.has_value()}, {"nodes", r.nodes}};
      out["coloring"] = r.coloring ? Json(r.coloring->colors) : Json(nullptr);
      emit(g, out);
    } else if (*fano) {
      const FanoTwoColoringReport r = check_fano_two_colorings();
      emit(g, Json{{"two_colorings", r.total}, {"with_single_colored_line", r.with_single_colored_line}});
      if (r.with_single_colored_line != r.total) return kVerificationFailed;
    } else if (*circle) {
      const FanoCircleReport r = fano_circle_experiment(trials, seed, g.threads);
      Json out = {{"trials", r.trials}, {"seed", r.seed}, {"counterexamples", r.counterexamples}};
      out["first_counterexample_trial"] = r.first_counterexample_trial ? Json(*r.first_counterexample_trial) : Json(nullptr);
      if (r.first_counterexample) out["first_counterexample"] = *r.first_counterexample;
      emit(g, out);
      if (r.counterexamples != 0) return kVerificationFailed;
    } else if (*ver) {
      VerifyOptions opt;
      opt.corpus_dir = corpus;
      opt.threads = g.threads;
      if (regen) std::cerr << "regenerated " << regenerate_oracles(opt) << " corpus files\n";
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      OperationLog log;
      bool ok = true;
      Json reports = Json::array();
      for (const auto& n : names) {
        const SuiteReport r = run_suite(n, opt, &log);
        ok = ok && r.passed();
        if (g.json) {
          reports.push_back(suite_json(r));
        } else {
          print_suite(r);
        }
      }
      if (suite == "all") {
        std::vector<std::string> missing;
        for (const auto& op : public_operations())
          if (!log.count(op)) missing.push_back(op);
        ok = ok && missing.empty();
        if (g.json) {
          emit(g, Json{{"passed", ok}, {"suites", reports}, {"operations_not_reached", missing}});
        } else {
          std::cout << "operations reached: " << public_operations().size() - missing.size() << " of " << public_operations().size() << '\n';
          for (const auto& op : missing) std::cout << "  not reached: " << op << '\n';
          std::cout << (ok ? "PASS" : "FAIL") << " all\n";
        }
      } else if (g.json) {
        emit(g, reports.front());
      }
      return ok ? 0 : kVerificationFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
