#include <gtest/gtest.h>

#include <random>

#include "constellation/betti.hpp"
#include "constellation/homology.hpp"
#include "oracles.hpp"

using namespace constellation;

namespace {

std::vector<long long> library_betti(const SimplicialComplex& k, Field f) {
  const auto b = reduced_betti(k, f);
  std::vector<long long> out(static_cast<std::size_t>(k.num_vertices()) + 1, 0);
  for (int p = -1; p < k.num_vertices(); ++p) out[p + 1] = b.at(p);
  return out;
}

std::map<std::pair<int, int>, long long> entries_of(const BettiTable& t) { return t.entries; }

}  // namespace

TEST(Homology, ReducedBettiMatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 8; ++m)
    for (int t = 0; t < 25; ++t) {
      const auto f = oracle::random_faces(m, 1 + static_cast<int>(rng() % (m + 3)), 0.55, rng);
      const auto k = oracle::to_complex(m, f);
      EXPECT_EQ(library_betti(k, Field::GF2), oracle::reduced_betti(m, f, 2));
      EXPECT_EQ(library_betti(k, Field::Q), oracle::reduced_betti(m, f, oracle::kLargePrime));
    }
}

TEST(Homology, SpheresAndSimplices) {
  for (int m = 1; m <= 7; ++m) {
    const auto s = SimplicialComplex::simplex_boundary(m);
    EXPECT_TRUE(is_homology_sphere_like(s, Field::GF2, m - 2));
    EXPECT_TRUE(is_homology_sphere_like(s, Field::Q, m - 2));
    EXPECT_EQ(reduced_betti(SimplicialComplex::simplex(m)), (BettiVector{Field::GF2, {}}));
  }
  // the empty complex {emptyset} is the (-1)-sphere
  EXPECT_EQ(reduced_betti(SimplicialComplex::empty(3)).at(-1), 1);
}

TEST(Homology, ProjectivePlaneSeparatesTheFields) {
  // six-vertex triangulation of RP^2
  const auto rp2 = SimplicialComplex::from_maximal_faces(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  const auto gf2 = reduced_betti(rp2, Field::GF2);
  const auto q = reduced_betti(rp2, Field::Q);
  EXPECT_EQ(gf2.at(1), 1);
  EXPECT_EQ(gf2.at(2), 1);
  EXPECT_EQ(q.at(1), 0);
  EXPECT_EQ(q.at(2), 0);
}

TEST(Homology, BoundaryMatrixSigns) {
  const auto tri = SimplicialComplex::simplex(3);
  const auto d2 = boundary_matrix(tri, 2).dense();
  const auto d1 = boundary_matrix(tri, 1).dense();
  ASSERT_EQ(d1[0].size(), d2.size());
  for (std::size_t r = 0; r < d1.size(); ++r) {
    int sum = 0;
    for (std::size_t t = 0; t < d2.size(); ++t) sum += d1[r][t] * d2[t][0];
    EXPECT_EQ(sum, 0);
  }
  EXPECT_EQ(boundary_matrix(tri, 2).rank(Field::Q), 1U);
}

TEST(Homology, SparseRankMatchesDense) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    std::vector<std::vector<std::pair<std::size_t, int>>> sparse(rows);
    std::vector<std::vector<std::int64_t>> dense(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const int v = static_cast<int>(rng() % 5) - 2;
        if (v == 0 || rng() % 2) continue;
        sparse[r].emplace_back(c, v);
        dense[r][c] = v;
      }
    EXPECT_EQ(sparse_rank(sparse, cols, Field::GF2), static_cast<std::size_t>(oracle::rank_mod(dense, 2)));
    EXPECT_EQ(sparse_rank(sparse, cols, Field::Q), static_cast<std::size_t>(oracle::rank_mod(dense, oracle::kLargePrime)));
  }
}

TEST(Betti, HochsterMatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int m = 1; m <= 7; ++m)
    for (int t = 0; t < 8; ++t) {
      const auto f = oracle::random_faces(m, 1 + static_cast<int>(rng() % (m + 2)), 0.6, rng);
      const auto k = oracle::to_complex(m, f);
      EXPECT_EQ(entries_of(hochster_betti(k, Field::GF2)), oracle::hochster(m, f, 2));
      EXPECT_EQ(entries_of(hochster_betti(k, Field::Q)), oracle::hochster(m, f, oracle::kLargePrime));
    }
}

TEST(Betti, ParallelMatchesSerialForAnyThreadCount) {
  std::mt19937_64 rng(23);
  for (int m : {6, 9, 11}) {
    const auto f = oracle::random_faces(m, m + 4, 0.5, rng);
    const auto k = oracle::to_complex(m, f);
    const auto ref = hochster_betti_serial(k, Field::Q);
    for (int threads : {1, 2, 3, 8}) {
      HochsterOptions o;
      o.threads = threads;
      EXPECT_EQ(hochster_betti(k, Field::Q, o), ref) << m << " " << threads;
    }
  }
}

TEST(Betti, LinksGiveTheDualTable) {
  std::mt19937_64 rng(29);
  for (int m = 2; m <= 7; ++m)
    for (int t = 0; t < 6; ++t) {
      const auto f = oracle::random_faces(m, 1 + static_cast<int>(rng() % (m + 2)), 0.5, rng);
      const auto k = oracle::to_complex(m, f);
      if (k.is_simplex()) continue;
      EXPECT_EQ(entries_of(betti_via_links(k)), oracle::hochster(m, oracle::alexander_dual(m, f), 2));
    }
}

TEST(Betti, LinearResolution) {
  // boundary of the pentagon: beta^{-1,4} = 5, beta^{-2,6} = 5, beta^{-3,10} = 1
  const auto pentagon =
      SimplicialComplex::from_maximal_faces(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto t = hochster_betti(pentagon);
  EXPECT_EQ(t.at(1, 4), 5);
  EXPECT_EQ(t.at(2, 6), 5);
  EXPECT_EQ(t.at(3, 10), 1);
  EXPECT_EQ(t.row_total(1), 5);
  EXPECT_FALSE(has_linear_resolution(t, 1));
  // its dual is linear with r = 1
  EXPECT_TRUE(has_linear_resolution(hochster_betti(alexander_dual(pentagon)), 1));
  EXPECT_TRUE(has_linear_resolution(hochster_betti(SimplicialComplex::simplex(3)), 0));
  EXPECT_FALSE(format_betti_table(t).empty());
}
