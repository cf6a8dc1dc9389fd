#include "constellation/z2.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "constellation/convexity.hpp"
#include "constellation/error.hpp"

namespace constellation {

bool is_proper(const Coloring& coloring) {
  const std::size_t n = (std::size_t{1} << coloring.k) - 1;
  if (coloring.colors.size() != n) return false;
  for (Z2Set d : minimal_odd_dependences(coloring.k)) {
    const int first = coloring.colors[static_cast<std::size_t>(std::countr_zero(d) - 1)];
    bool single = true;
    for (Z2Set r = d; r != 0 && single; r &= r - 1)
      single = coloring.colors[static_cast<std::size_t>(std::countr_zero(r) - 1)] == first;
    if (single) return false;
  }
  return true;
}

ColoringSearchResult proper_coloring_search(int k, int colors) {
  if (k < 1 || k > 5) throw Error("proper_coloring_search: k must be in [1, 5]");
  if (colors < 0) throw Error("proper_coloring_search: negative color count");
  const int n = (1 << k) - 1;
  // Dependences grouped by their largest member, checked once that member is colored.
  std::vector<std::vector<Z2Set>> closing(static_cast<std::size_t>(n + 1));
  for (Z2Set d : minimal_odd_dependences(k)) closing[static_cast<std::size_t>(63 - std::countl_zero(d))].push_back(d);

  ColoringSearchResult res;
  std::vector<int> color(static_cast<std::size_t>(n + 1), 0);
  std::vector<Z2Set> mask(static_cast<std::size_t>(colors + 1), 0);

  auto search = [&](auto&& self, int a, int used) -> bool {
    ++res.nodes;
    if (a > n) return true;
    const int limit = std::min(colors, used + 1);
    for (int c = 1; c <= limit; ++c) {
      mask[static_cast<std::size_t>(c)] |= Z2Set{1} << a;
      bool ok = true;
      for (Z2Set d : closing[static_cast<std::size_t>(a)])
        if ((d & ~mask[static_cast<std::size_t>(c)]) == 0) {
          ok = false;
          break;
        }
      if (ok) {
        color[static_cast<std::size_t>(a)] = c;
        if (self(self, a + 1, std::max(used, c))) return true;
      }
      mask[static_cast<std::size_t>(c)] &= ~(Z2Set{1} << a);
    }
    return false;
  };

  if (search(search, 1, 0)) {
    Coloring c;
    c.k = k;
    c.colors.assign(color.begin() + 1, color.end());
    if (!is_proper(c)) throw Error("proper_coloring_search: internal error, coloring failed validation");
    res.coloring = std::move(c);
  }
  return res;
}

std::vector<Z2Set> fano_lines() {
  std::vector<Z2Set> lines;
  for (Z2Set d : minimal_odd_dependences(3))
    if (std::popcount(d) == 3) lines.push_back(d);
  return lines;
}

FanoTwoColoringReport check_fano_two_colorings() {
  const auto lines = fano_lines();
  FanoTwoColoringReport rep;
  for (Z2Set black = 0; black < (Z2Set{1} << 7); ++black) {
    const Z2Set ones = black << 1;  // point a is black iff bit a is set
    const Z2Set zeros = (~ones) & 0xFE;
    ++rep.total;
    for (Z2Set l : lines)
      if ((l & ~ones) == 0 || (l & ~zeros) == 0) {
        ++rep.with_single_colored_line;
        break;
      }
  }
  return rep;
}

std::optional<int> first_line_avoiding_zero(const FanoDirections& eta) {
  const auto lines = fano_lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<RationalVector> pts;
    for (Z2Set r = lines[i]; r != 0; r &= r - 1) {
      const auto& e = eta[static_cast<std::size_t>(std::countr_zero(r) - 1)];
      pts.push_back({Rational(e[0]), Rational(e[1])});
    }
    if (!zero_in_convex_hull(pts)) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

FanoDirections fano_trial_directions(std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 gen(splitmix64(seed + trial));
  std::uniform_int_distribution<std::int64_t> coord(-100, 100);
  FanoDirections eta{};
  for (auto& e : eta) {
    do {
      e[0] = coord(gen);
      e[1] = coord(gen);
    } while (e[0] == 0 && e[1] == 0);
  }
  return eta;
}

FanoCircleReport fano_circle_experiment(std::uint64_t trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw Error("fano_circle_experiment: trials must be >= 1");
  FanoCircleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  std::uint64_t bad = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const auto count = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(nt) reduction(+ : bad) reduction(min : first)
#endif
  for (std::int64_t t = 0; t < count; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    if (!first_line_avoiding_zero(fano_trial_directions(seed, trial))) {
      ++bad;
      first = std::min(first, trial);
    }
  }
  (void)threads;
  rep.counterexamples = bad;
  if (bad > 0) {
    rep.first_counterexample_trial = first;
    rep.first_counterexample = fano_trial_directions(seed, first);
  }
  return rep;
}

}  // namespace constellation
