#include <gtest/gtest.h>

#include <random>

#include "constellation/buchstaber.hpp"
#include "constellation/error.hpp"
#include "constellation/z2.hpp"
#include "oracles.hpp"

using namespace constellation;

TEST(OddDependences, MatchBruteForceCircuits) {
  for (int k = 1; k <= 4; ++k) {
    auto got = minimal_odd_dependences(k);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::odd_circuits(k)) << k;
  }
  EXPECT_EQ(minimal_odd_dependences(4).size(), 203U);
}

TEST(RealBuchstaber, MatchesExhaustiveMatrixSearch) {
  // every complex on at most 4 vertices other than the full simplex
  for (int m = 1; m <= 4; ++m)
    for (const auto& f : oracle::all_complexes(m)) {
      const auto k = oracle::to_complex(m, f);
      if (k.is_simplex()) continue;
      const auto r = s_real_exact(k);
      ASSERT_EQ(r.status, RealBuchstaberResult::Status::Exact);
      ASSERT_EQ(r.value(), oracle::s_real(m, f)) << m;
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_TRUE(validate_witness(k, *r.witness));
    }
}

TEST(RealBuchstaber, SampledOnFiveVertices) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 25; ++t) {
    const auto f = oracle::random_faces(5, 2 + static_cast<int>(rng() % 4), 0.5, rng);
    const auto k = oracle::to_complex(5, f);
    if (k.is_simplex()) continue;
    EXPECT_EQ(s_real_exact(k).value(), oracle::s_real(5, f));
  }
}

TEST(RealBuchstaber, KnownValues) {
  const auto octahedron = SimplicialComplex::from_minimal_nonfaces(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto r = s_real_exact(octahedron);
  EXPECT_EQ(r.value(), 3);
  EXPECT_EQ(r.upper, 3);
  EXPECT_EQ(s_real_exact(SimplicialComplex::simplex_boundary(5)).value(), 1);
  EXPECT_EQ(s_real_exact(SimplicialComplex::empty(3)).value(), 3);
  EXPECT_THROW(s_bounds(SimplicialComplex::simplex(3)), Error);
  const auto b = s_bounds(octahedron);
  EXPECT_LE(b.s_lower.value, b.s_upper.value);
  EXPECT_LE(b.s_real_lower.value, b.s_real_upper.value);
  EXPECT_EQ(b.s_real_lower.value, 3);
}

TEST(RealBuchstaber, BudgetGivesBoundsNotGuesses) {
  std::mt19937_64 rng(67);
  const auto f = oracle::random_faces(9, 6, 0.5, rng);
  const auto k = oracle::to_complex(9, f);
  RealSearchOptions o;
  o.node_budget = 10;
  const auto r = s_real_exact(k, o);
  EXPECT_LE(r.lower, r.upper);
  if (r.status == RealBuchstaberResult::Status::Bounded) EXPECT_FALSE(r.note.empty());
}

TEST(XiCriterion, MapExistsExactlyWhenRankIsReached) {
  for (int m = 2; m <= 4; ++m)
    for (const auto& f : oracle::all_complexes(m)) {
      const auto k = oracle::to_complex(m, f);
      if (k.is_simplex()) continue;
      const int s = oracle::s_real(m, f);
      for (int d = 1; d <= 3; ++d) {
        const auto xi = s_real_lower_via_xi(k, d);
        ASSERT_EQ(xi.map.has_value(), s >= d) << m << " " << d;
        if (xi.map) EXPECT_TRUE(validate_xi(k, *xi.map));
      }
    }
}

TEST(Coloring, SmallCases) {
  for (int k = 1; k <= 4; ++k) {
    const auto found = proper_coloring_search(k, k);
    ASSERT_TRUE(found.coloring.has_value()) << k;
    EXPECT_TRUE(is_proper(*found.coloring));
    if (k > 1) EXPECT_FALSE(proper_coloring_search(k, k - 1).coloring.has_value()) << k;
  }
  // k = 3 by brute force: all 2^7 two-colorings have a single-colored line
  for (int code = 0; code < 128; ++code) {
    Coloring c{3, {}};
    for (int a = 0; a < 7; ++a) c.colors.push_back(1 + (code >> a & 1));
    EXPECT_FALSE(is_proper(c));
  }
}

TEST(Fano, LinesAndTwoColorings) {
  auto lines = fano_lines();
  std::sort(lines.begin(), lines.end());
  EXPECT_EQ(lines, oracle::odd_circuits(3));
  const auto r = check_fano_two_colorings();
  EXPECT_EQ(r.total, 128);
  EXPECT_EQ(r.with_single_colored_line, 128);
}

TEST(FanoCircle, LineAvoidingZeroMatchesOracle) {
  const auto lines = fano_lines();
  for (std::uint64_t t = 0; t < 3000; ++t) {
    const auto eta = fano_trial_directions(7, t);
    bool some = false;
    for (auto line : lines) {
      std::vector<oracle::Point2> pts;
      for (int a = 1; a <= 7; ++a)
        if (line >> a & 1) pts.push_back({eta[a - 1][0], eta[a - 1][1]});
      some = some || !oracle::zero_in_hull_2d(pts);
    }
    EXPECT_EQ(first_line_avoiding_zero(eta).has_value(), some);
    for (const auto& d : eta) EXPECT_TRUE(d[0] != 0 || d[1] != 0);
  }
}

TEST(FanoCircle, DeterministicAcrossThreads) {
  const auto a = fano_circle_experiment(5000, 99, 1);
  const auto b = fano_circle_experiment(5000, 99, 4);
  EXPECT_EQ(a.counterexamples, 0U);
  EXPECT_EQ(a.counterexamples, b.counterexamples);
  EXPECT_EQ(fano_trial_directions(99, 17), fano_trial_directions(99, 17));
  EXPECT_NE(splitmix64(1), splitmix64(2));
}
