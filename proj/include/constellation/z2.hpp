#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "constellation/buchstaber.hpp"

namespace constellation {

// colors[a - 1] in 1..c is the color of the nonzero vector a of Z_2^k.
struct Coloring {
  int k = 0;
  std::vector<int> colors;
};

// No odd minimal dependence is single-colored.
bool is_proper(const Coloring& coloring);

struct ColoringSearchResult {
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;  // size of the explored tree, the exhaustion certificate
};

// Backtracking over vectors in increasing order; colors are used in order of
// first appearance, which removes the color permutations. Requires k <= 5.
ColoringSearchResult proper_coloring_search(int k, int colors);

// The 7 lines {a, b, a + b} of the Fano plane.
std::vector<Z2Set> fano_lines();

struct FanoTwoColoringReport {
  int total = 0;
  int with_single_colored_line = 0;
};

// Runs over all 2^7 two-colorings of the Fano plane.
FanoTwoColoringReport check_fano_two_colorings();

// eta[a - 1] is a direction in the plane for each point a of the Fano plane.
using FanoDirections = std::array<std::array<std::int64_t, 2>, 7>;

// First line whose three directions do not capture 0 in their convex hull.
std::optional<int> first_line_avoiding_zero(const FanoDirections& eta);

struct FanoCircleReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::uint64_t> first_counterexample_trial;
  std::optional<FanoDirections> first_counterexample;
};

// Random directions with integer coordinates in [-100, 100]^2 \ {0}; trial t
// draws from a generator seeded by splitmix64(seed + t), so the outcome does
// not depend on the thread count.
FanoDirections fano_trial_directions(std::uint64_t seed, std::uint64_t trial);
FanoCircleReport fano_circle_experiment(std::uint64_t trials, std::uint64_t seed, int threads = 0);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace constellation
