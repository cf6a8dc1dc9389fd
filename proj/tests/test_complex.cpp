#include <gtest/gtest.h>

#include <random>

#include "constellation/complex.hpp"
#include "constellation/error.hpp"
#include "constellation/face_table.hpp"
#include "oracles.hpp"

using namespace constellation;

namespace {

std::vector<std::pair<int, oracle::Faces>> sample(std::uint64_t seed, int count, int m_lo, int m_hi) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, oracle::Faces>> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int t = 0; t < count; ++t) {
      std::uniform_int_distribution<int> gens(1, m + 2);
      std::uniform_real_distribution<double> dens(0.2, 0.8);
      out.emplace_back(m, oracle::random_faces(m, gens(rng), dens(rng), rng));
    }
  return out;
}

oracle::Faces library_faces(const SimplicialComplex& k, VertexSet universe = VertexSet()) {
  oracle::Faces out;
  for (auto f : k.faces()) out.push_back(universe.empty() ? f.bits() : expand(f, universe).bits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Complex, FacesMatchDownwardClosure) {
  for (const auto& [m, f] : sample(1, 20, 1, 8)) {
    const auto k = oracle::to_complex(m, f);
    EXPECT_EQ(library_faces(k), f);
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << m); ++s) ASSERT_EQ(k.is_face(VertexSet(s)), oracle::contains(f, s));
  }
}

TEST(Complex, MinimalNonfacesMatchBruteForce) {
  for (const auto& [m, f] : sample(2, 20, 1, 8)) {
    const auto k = oracle::to_complex(m, f);
    oracle::Faces got;
    for (auto n : k.minimal_nonfaces()) got.push_back(n.bits());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::minimal_nonfaces(m, f));
    const auto back = SimplicialComplex::from_minimal_nonfaces(m, k.minimal_nonfaces());
    EXPECT_EQ(back, k);
  }
}

TEST(Complex, AlexanderDualMatchesDefinition) {
  for (const auto& [m, f] : sample(3, 25, 1, 8)) {
    const auto k = oracle::to_complex(m, f);
    if (k.is_simplex()) continue;
    const auto d = alexander_dual(k);
    EXPECT_EQ(library_faces(d), oracle::alexander_dual(m, f));
    EXPECT_EQ(alexander_dual(d), k);
  }
}

TEST(Complex, DualSwapsMaximalFacesAndComplementsOfNonfaces) {
  for (const auto& [m, f] : sample(4, 15, 2, 8)) {
    const auto k = oracle::to_complex(m, f);
    if (k.is_simplex()) continue;
    const auto d = alexander_dual(k);
    std::vector<VertexSet> complements;
    for (auto n : k.minimal_nonfaces()) complements.push_back(k.universe() - n);
    std::sort(complements.begin(), complements.end());
    auto maximal = d.maximal_faces();
    std::sort(maximal.begin(), maximal.end());
    EXPECT_EQ(maximal, complements);
  }
}

TEST(Complex, DualOfFullSimplexIsAnError) {
  EXPECT_THROW(alexander_dual(SimplicialComplex::simplex(4)), Error);
  try {
    alexander_dual(SimplicialComplex::simplex(3));
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "dual undefined for the full simplex");
  }
}

TEST(Complex, SmallCases) {
  // boundary of the simplex and the empty complex are dual to each other
  EXPECT_EQ(alexander_dual(SimplicialComplex::simplex_boundary(4)), SimplicialComplex::empty(4));
  EXPECT_EQ(alexander_dual(SimplicialComplex::empty(3)), SimplicialComplex::simplex_boundary(3));
  const auto cycle = SimplicialComplex::from_maximal_faces(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(alexander_dual(cycle), SimplicialComplex::from_maximal_faces(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(f_vector(cycle), (std::vector<long long>{1, 4, 4}));
  EXPECT_EQ(cycle.dimension(), 1);
  EXPECT_EQ(SimplicialComplex::empty(3).ghost_vertices(), VertexSet({0, 1, 2}));
}

TEST(Complex, LinkAndFullSubcomplexMatchDefinitions) {
  std::mt19937_64 rng(5);
  for (const auto& [m, f] : sample(5, 15, 2, 8)) {
    const auto k = oracle::to_complex(m, f);
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    const oracle::Mask sigma = f[pick(rng)];
    // results are re-indexed onto the remaining vertices
    const auto lk = link(k, VertexSet(sigma));
    EXPECT_EQ(library_faces(lk, k.universe() - VertexSet(sigma)), oracle::link(f, sigma)) << to_string(VertexSet(sigma));
    EXPECT_EQ(lk.num_vertices(), m - std::popcount(sigma));
    const oracle::Mask j = rng() & ((oracle::Mask{1} << m) - 1);
    if (j == 0) continue;
    const auto sub = full_subcomplex(k, VertexSet(j));
    EXPECT_EQ(library_faces(sub, VertexSet(j)), oracle::restrict_to(f, j));
    EXPECT_EQ(sub.labels(), VertexSet(j).indices());
  }
  const auto k = SimplicialComplex::from_maximal_faces(3, {{0, 1}});
  EXPECT_THROW(link(k, VertexSet({0, 2})), Error);
}

TEST(Complex, SkeletonJoinAndFlag) {
  const auto tri = SimplicialComplex::simplex(3);
  EXPECT_EQ(skeleton(tri, 1), SimplicialComplex::simplex_boundary(3));
  const auto two_points = SimplicialComplex::from_maximal_faces(2, {{0}, {1}});
  const auto square = join(two_points, two_points);
  EXPECT_EQ(square.num_vertices(), 4);
  EXPECT_EQ(f_vector(square), (std::vector<long long>{1, 4, 4}));
  EXPECT_TRUE(is_flag(square));
  EXPECT_FALSE(is_flag(SimplicialComplex::simplex_boundary(3)));
  // brute force: flag iff every minimal nonface has two elements
  for (const auto& [m, f] : sample(6, 20, 2, 7)) {
    bool pairs = true;
    for (auto n : oracle::minimal_nonfaces(m, f)) pairs = pairs && std::popcount(n) == 2;
    EXPECT_EQ(is_flag(oracle::to_complex(m, f)), pairs);
  }
}

TEST(Complex, WedgeDoublesAVertex) {
  // wedge over a vertex of the 4-cycle: boundary of the triangular bipyramid
  const auto cycle = SimplicialComplex::from_maximal_faces(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const std::vector<int> mult{2, 1, 1, 1};
  const auto w = wedge_multiply(cycle, mult);
  EXPECT_EQ(w.num_vertices(), 5);
  EXPECT_EQ(w.dimension(), 2);
  EXPECT_EQ(f_vector(w), (std::vector<long long>{1, 5, 9, 6}));
  const std::vector<int> twice{2, 2};
  EXPECT_EQ(wedge_multiply(SimplicialComplex::simplex_boundary(2), twice), SimplicialComplex::simplex_boundary(4));
}

TEST(FaceTable, AgreesWithComplexOperations) {
  for (const auto& [m, f] : sample(7, 15, 1, 10)) {
    const auto k = oracle::to_complex(m, f);
    const auto t = FaceTable::from_complex(k);
    EXPECT_EQ(t.count(), f.size());
    EXPECT_EQ(t.to_complex(), k);
    if (!k.is_simplex()) EXPECT_EQ(t.dual().to_complex(), alexander_dual(k));
    const VertexSet j(f.back() | 1);
    EXPECT_EQ(t.restrict_to(j).to_complex(), full_subcomplex(k, j));
    EXPECT_EQ(t.link(VertexSet(f.back())).to_complex(), link(k, VertexSet(f.back())));
  }
}

TEST(WordTable, AgreesWithFaceTable) {
  for (int m = 1; m <= 4; ++m) {
    const auto all = word_table::all_complexes(m);
    EXPECT_EQ(all.size(), oracle::all_complexes(m).size()) << m;
  }
  for (const auto& [m, f] : sample(8, 30, 1, 6)) {
    std::uint64_t word = 0;
    for (auto s : f) word |= std::uint64_t{1} << s;
    const auto k = oracle::to_complex(m, f);
    if (!k.is_simplex()) EXPECT_EQ(word_table::dual(word, m), FaceTable::from_complex(k).dual().words()[0]);
    int b[word_table::kMaxVertices + 1] = {};
    word_table::reduced_betti_gf2(word, m, b);
    const auto ref = oracle::reduced_betti(m, f, 2);
    for (int p = -1; p < m; ++p) EXPECT_EQ(b[p + 1], ref[p + 1]);
  }
}

TEST(VertexSetOps, CompressExpandAndTransversals) {
  const VertexSet u{1, 3, 4, 6};
  EXPECT_EQ(compress(VertexSet{3, 6}, u), VertexSet({1, 3}));
  EXPECT_EQ(expand(VertexSet{1, 3}, u), VertexSet({3, 6}));
  EXPECT_EQ(to_string(VertexSet{0, 2}), "{0,2}");
  const auto t = minimal_transversals({VertexSet{0, 1}, VertexSet{1, 2}});
  EXPECT_EQ(t, (std::vector<VertexSet>{VertexSet{1}, VertexSet{0, 2}}));
}
