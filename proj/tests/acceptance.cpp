// One PASS/FAIL line per acceptance criterion. Each criterion has a pinned
// wall-clock limit; a correct result that misses its limit fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "constellation/betti.hpp"
#include "constellation/buchstaber.hpp"
#include "constellation/corpus.hpp"
#include "constellation/gale.hpp"
#include "constellation/polytope.hpp"
#include "constellation/verify.hpp"
#include "constellation/z2.hpp"

using namespace constellation;

namespace {

using Clock = std::chrono::steady_clock;
using Table = std::map<std::pair<int, int>, long long>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Timed {
  double limit;  // seconds
  std::string label;
};

int failures = 0;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Runs body; every (limit, label) pair in limits is checked against the
// duration recorded under that label by the body.
void criterion(int id, const std::string& title, double limit,
               const std::function<void(Outcome&, std::map<std::string, double>&)>& body,
               std::vector<Timed> extra_limits = {}) {
  Outcome out;
  std::map<std::string, double> times;
  const auto start = Clock::now();
  try {
    body(out, times);
  } catch (const std::exception& e) {
    out.require(false, std::string("error: ") + e.what());
  }
  const double total = seconds_since(start);
  std::string timing = fmt(total) + " < " + fmt(limit);
  if (total >= limit) out.require(false, "over time limit");
  for (const auto& t : extra_limits) {
    const double v = times.count(t.label) ? times[t.label] : 0.0;
    timing += ", " + t.label + " " + fmt(v) + " < " + fmt(t.limit);
    if (v >= t.limit) out.require(false, t.label + " over time limit");
  }
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << "  [" << timing << "]";
  if (!out.detail.empty()) std::cout << "  " << out.detail;
  std::cout << std::endl;
}

std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries = load_corpus(default_corpus_dir());
  return entries;
}

const CorpusEntry& entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::runtime_error("corpus entry " + name + " missing");
}

std::string show(const Table& t) {
  std::ostringstream s;
  for (const auto& [k, v] : t) s << "(" << k.first << "," << k.second << "):" << v << " ";
  return s.str();
}

// 1-dimensional configuration scaled so the first nonzero point is +-1.
std::vector<Rational> normalized_line(const PointConfiguration& g) {
  std::vector<Rational> v;
  Rational scale = 0;
  for (const auto& p : g.points)
    if (p[0] != 0 && scale == 0) scale = p[0] < 0 ? Rational(-p[0]) : p[0];
  for (const auto& p : g.points) v.push_back(scale == 0 ? p[0] : Rational(p[0] / scale));
  std::sort(v.begin(), v.end());
  return v;
}

void suite_into(Outcome& out, const std::string& name, const VerifyOptions& opt = {}) {
  const auto r = run_suite(name, opt);
  out.require(r.passed(), name + " failed");
  for (const auto& c : r.checks)
    if (!c.passed) out.require(false, c.name + " " + c.detail);
}

}  // namespace

int main() {
  criterion(1, "Gale diagram constellation equals the dual of K(P) on the corpus", 10, [](Outcome& out, auto&) {
    int polytopes = 0;
    for (const auto& e : corpus()) {
      if (!e.polytope) continue;
      ++polytopes;
      out.require(check_gale_alexander(*e.polytope).equal, e.name);
    }
    out.require(polytopes >= 10, "fewer than 10 polytopes");
    suite_into(out, "gale-alexander");
    out.detail = out.ok ? std::to_string(polytopes) + " polytopes" : out.detail;
  });

  criterion(2, "square and square pyramid Gale diagrams", 1, [](Outcome& out, auto&) {
    const auto sq = normalized_line(gale_diagram(*entry("square").polytope));
    const auto py = normalized_line(gale_diagram(*entry("pyramid").polytope));
    out.require(sq == std::vector<Rational>{-1, -1, 1, 1}, "square");
    out.require(py == std::vector<Rational>{-1, -1, 0, 1, 1}, "pyramid");
  });

  criterion(3, "pentagon: Betti table of the constellation complex, GF(2) and Q, linear with r = 1", 1,
            [](Outcome& out, auto&) {
              const Table want{{{0, 0}, 1}, {{1, 6}, 5}, {{2, 8}, 5}, {{3, 10}, 1}};
              const auto from_config = constellation_complex(*entry("pentagon-config").configuration);
              const auto from_polytope = constellation_complex(gale_diagram(*entry("pentagon").polytope));
              for (const auto& k : {from_config, from_polytope})
                for (Field f : {Field::GF2, Field::Q}) {
                  const auto t = hochster_betti(k, f);
                  out.require(t.entries == want, to_string(f) + " got " + show(t.entries));
                  out.require(has_linear_resolution(t, 1), "not linear with r = 1");
                }
            });

  criterion(4, "hexagon/prism: Betti table equals f_{3-i,6-j} of the prism, not linear", 1, [](Outcome& out, auto&) {
    const auto& prism = *entry("prism").polytope;
    const auto k = constellation_complex(*entry("hexagon-config").configuration);
    const auto t = hochster_betti(k);
    const Table want{{{0, 0}, 1}, {{1, 4}, 3}, {{1, 6}, 2}, {{2, 8}, 9}, {{3, 10}, 6}, {{4, 12}, 1}};
    out.require(t.entries == want, "got " + show(t.entries));
    Table from_f;
    for (const auto& [nl, v] : f_nl(prism)) {
      const int i = 3 - nl.first, j = 6 - nl.second;
      if (i > 0 && v != 0) from_f[{i, 2 * j}] = v;
    }
    Table positive;
    for (const auto& [key, v] : t.entries)
      if (key.first > 0) positive[key] = v;
    out.require(positive == from_f, "f_nl gives " + show(from_f));
    for (int r = 0; r <= 6; ++r) out.require(!has_linear_resolution(t, r), "linear with r = " + std::to_string(r));
  });

  criterion(5, "9-gon: Betti table of K(P) from its Gale diagram", 5, [](Outcome& out, auto&) {
    const auto delta = constellation_complex(*entry("nonagon-config").configuration);
    const Table want{{{1, 8}, 9}, {{2, 10}, 9}, {{3, 18}, 1}};
    for (Field f : {Field::GF2, Field::Q}) {
      Table positive;
      for (const auto& [key, v] : hochster_betti(alexander_dual(delta), f).entries)
        if (key.first > 0) positive[key] = v;
      out.require(positive == want, to_string(f) + " got " + show(positive));
    }
  });

  criterion(6, "Alexander duality for homology and the link/subcomplex identity, exhaustive m <= 6, sampled m = 7",
            120, [](Outcome& out, auto&) {
              for (const char* s : {"duality-involution", "alexander-homology", "link-sub"}) suite_into(out, s);
            });

  criterion(7, "constellation sphere property and the degenerate S^2 example", 30,
            [](Outcome& out, auto&) { suite_into(out, "constellation-spheres"); });

  criterion(8, "real Buchstaber number: octahedron 3, simplex boundary 1, xi criterion for k <= 3", 300,
            [](Outcome& out, auto&) {
              const auto octa = s_real_exact(*entry("octahedron-boundary").complex);
              out.require(octa.status == RealBuchstaberResult::Status::Exact && octa.value() == 3,
                          "octahedron s_R = " + std::to_string(octa.value()));
              out.require(octa.witness && validate_witness(*entry("octahedron-boundary").complex, *octa.witness),
                          "octahedron witness rejected");
              for (int m = 2; m <= 10; ++m) {
                const auto r = s_real_exact(SimplicialComplex::simplex_boundary(m));
                out.require(r.value() == 1 && r.upper == 1, "boundary of the simplex on " + std::to_string(m));
              }
              suite_into(out, "xi-criterion");
              if (out.ok) out.detail = "xi: exhaustive m <= 5, sampled m = 6..8";
            });

  criterion(9, "s = 1 exactly for pyramids, with disjoint minimal nonfaces otherwise", 10, [](Outcome& out, auto&) {
    int n = 0;
    for (const auto& e : corpus()) {
      if (!e.polytope) continue;
      ++n;
      const auto r = s_equals_one(*e.polytope);
      out.require(r.equals_one == is_pyramid(*e.polytope).has_value(), e.name);
      if (!r.equals_one) {
        out.require(r.disjoint_nonfaces.has_value(), e.name + " without witness");
        if (r.disjoint_nonfaces) {
          const auto [a, b] = *r.disjoint_nonfaces;
          const auto kp = facet_nerve(*e.polytope);
          const auto& nf = kp.minimal_nonfaces();
          out.require(!a.intersects(b), e.name + " witness not disjoint");
          out.require(std::find(nf.begin(), nf.end(), a) != nf.end() && std::find(nf.begin(), nf.end(), b) != nf.end(),
                      e.name + " witness not minimal nonfaces");
        }
      }
    }
    suite_into(out, "pyramid-theorem");
    if (out.ok) out.detail = std::to_string(n) + " polytopes";
  });

  criterion(
      10, "colorings: k = 3 and k = 4 need k colors; Fano two-colorings", 600,
      [](Outcome& out, std::map<std::string, double>& times) {
        int refuted = 0;
        for (int code = 0; code < 128; ++code) {
          Coloring c{3, {}};
          for (int a = 0; a < 7; ++a) c.colors.push_back(1 + (code >> a & 1));
          refuted += is_proper(c) ? 0 : 1;
        }
        out.require(refuted == 128, std::to_string(refuted) + " of 128 two-colorings refuted");
        const auto three = proper_coloring_search(3, 3);
        out.require(three.coloring && is_proper(*three.coloring), "no proper 3-coloring for k = 3");
        auto t = Clock::now();
        const auto four_three = proper_coloring_search(4, 3);
        times["k=4 refutation"] = seconds_since(t);
        out.require(!four_three.coloring, "a proper 3-coloring for k = 4");
        const auto four = proper_coloring_search(4, 4);
        out.require(four.coloring && is_proper(*four.coloring), "no proper 4-coloring for k = 4");
        t = Clock::now();
        const auto fano = check_fano_two_colorings();
        times["Fano"] = seconds_since(t);
        out.require(fano.total == 128 && fano.with_single_colored_line == 128, "Fano");
        if (out.ok) out.detail = "k = 4 search tree " + std::to_string(four_three.nodes) + " nodes";
      },
      {{600, "k=4 refutation"}, {1, "Fano"}});

  criterion(11, "Fano plane directions: 100000 seeded trials without a counterexample", 60, [](Outcome& out, auto&) {
    const auto r = fano_circle_experiment(100'000, 20240917);
    out.require(r.trials == 100'000 && r.counterexamples == 0,
                std::to_string(r.counterexamples) + " counterexamples");
  });

  criterion(
      12, "Hochster sweep on a random 16-vertex complex, 8 threads, same table for 1, 3, 8 threads", 900,
      [](Outcome& out, std::map<std::string, double>& times) {
        std::mt19937_64 rng(16);
        const auto k = random_complex(16, 200, 0.35, rng);
        out.require(k.maximal_faces().size() <= 200, "too many maximal faces");
        HochsterOptions o;
        o.threads = 8;
        auto t = Clock::now();
        const auto eight = hochster_betti(k, Field::GF2, o);
        times["8 threads"] = seconds_since(t);
        o.threads = 1;
        const auto one = hochster_betti(k, Field::GF2, o);
        o.threads = 3;
        const auto three = hochster_betti(k, Field::GF2, o);
        out.require(eight == one && eight == three, "tables differ across thread counts");
        if (out.ok)
          out.detail = std::to_string(k.maximal_faces().size()) + " maximal faces, " +
                       std::to_string(eight.entries.size()) + " nonzero entries";
      },
      {{300, "8 threads"}});

  std::cout << (failures == 0 ? "PASS" : "FAIL") << "  acceptance: " << 12 - failures << " of 12" << std::endl;
  return failures == 0 ? 0 : 1;
}
