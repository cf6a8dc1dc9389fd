#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library except for the final conversion to its types.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "constellation/complex.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Faces = std::vector<Mask>;  // sorted list of all faces, empty face included

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Faces faces_from_generators(int m, const std::vector<Mask>& gens) {
  Faces out;
  for (Mask s = 0; s < (Mask{1} << m); ++s)
    for (Mask g : gens)
      if (subset(s, g)) {
        out.push_back(s);
        break;
      }
  if (out.empty() || out.front() != 0) out.insert(out.begin(), 0);
  return out;
}

inline Faces faces_of(const constellation::SimplicialComplex& k) {
  std::vector<Mask> gens;
  for (auto f : k.maximal_faces()) gens.push_back(f.bits());
  return faces_from_generators(k.num_vertices(), gens);
}

inline bool contains(const Faces& f, Mask s) { return std::binary_search(f.begin(), f.end(), s); }

inline constellation::SimplicialComplex to_complex(int m, const Faces& faces) {
  std::vector<constellation::VertexSet> maximal;
  for (Mask s : faces) {
    bool is_max = true;
    for (int v = 0; v < m && is_max; ++v)
      if (!(s >> v & 1) && contains(faces, s | Mask{1} << v)) is_max = false;
    if (is_max) maximal.push_back(constellation::VertexSet(s));
  }
  return constellation::SimplicialComplex::from_maximal_faces(m, maximal);
}

inline Faces alexander_dual(int m, const Faces& k) {
  const Mask full = (Mask{1} << m) - 1;
  Faces out;
  for (Mask s = 0; s <= full; ++s)
    if (!contains(k, full & ~s)) out.push_back(s);
  return out;
}

inline Faces minimal_nonfaces(int m, const Faces& k) {
  Faces out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (contains(k, s)) continue;
    bool minimal = true;
    for (int v = 0; v < m && minimal; ++v)
      if ((s >> v & 1) && !contains(k, s & ~(Mask{1} << v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

inline Faces link(const Faces& k, Mask sigma) {
  Faces out;
  for (Mask s : k)
    if ((s & sigma) == 0 && contains(k, s | sigma)) out.push_back(s);
  return out;
}

inline Faces restrict_to(const Faces& k, Mask j) {
  Faces out;
  for (Mask s : k)
    if (subset(s, j)) out.push_back(s);
  return out;
}

// Rank over Z/p by dense elimination; p = 2 or a large prime.
inline int rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e > 0) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * x % p);
      x = static_cast<std::int64_t>((__int128)x * x % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = p == 2 ? 1 : inv(a[rank][c]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)a[r][c] * iv % p);
      for (std::size_t t = c; t < cols; ++t)
        a[r][t] = ((a[r][t] - static_cast<std::int64_t>((__int128)f * a[rank][t] % p)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

constexpr std::int64_t kLargePrime = 1'000'000'007;

// Reduced Betti numbers b_{-1} .. b_{m-1} of the complex, over Z/p. The
// augmented chain complex includes the empty face in degree -1.
inline std::vector<long long> reduced_betti(int m, const Faces& k, std::int64_t p) {
  std::vector<std::vector<Mask>> by_dim(m + 2);
  for (Mask s : k) by_dim[std::popcount(s)].push_back(s);
  auto rank_of_boundary = [&](int size) {
    if (size == 0 || by_dim[size].empty() || by_dim[size - 1].empty()) return 0;
    const auto& rows = by_dim[size - 1];
    std::vector<std::vector<std::int64_t>> a(rows.size(), std::vector<std::int64_t>(by_dim[size].size(), 0));
    for (std::size_t c = 0; c < by_dim[size].size(); ++c) {
      const Mask s = by_dim[size][c];
      int t = 0;
      for (int v = 0; v < m; ++v) {
        if (!(s >> v & 1)) continue;
        const Mask face = s & ~(Mask{1} << v);
        const auto r = std::lower_bound(rows.begin(), rows.end(), face) - rows.begin();
        a[static_cast<std::size_t>(r)][c] = (t % 2 == 0) ? 1 : -1;
        ++t;
      }
    }
    return rank_mod(a, p);
  };
  std::vector<int> ranks(m + 2, 0);
  for (int size = 1; size <= m; ++size) ranks[size] = rank_of_boundary(size);
  std::vector<long long> b(m + 1, 0);
  for (int size = 0; size <= m; ++size) {
    const long long cycles = static_cast<long long>(by_dim[size].size()) - ranks[size];
    const long long bounds = size + 1 <= m ? ranks[size + 1] : 0;
    b[size] = cycles - bounds;
  }
  return b;  // b[p + 1] is the p-th reduced Betti number
}

// beta^{-i,2j} = sum over |J| = j of b_{j-i-1}(K_J).
inline std::map<std::pair<int, int>, long long> hochster(int m, const Faces& k, std::int64_t p) {
  std::map<std::pair<int, int>, long long> out;
  for (Mask j = 0; j < (Mask{1} << m); ++j) {
    const int size = std::popcount(j);
    const auto b = reduced_betti(m, restrict_to(k, j), p);
    for (int q = -1; q < size; ++q) {
      const long long v = b[q + 1];
      const int i = size - q - 1;
      if (v != 0) out[{i, 2 * size}] += v;
    }
  }
  return out;
}

// Every downward-closed family on m <= 4 vertices that contains the empty set.
inline std::vector<Faces> all_complexes(int m) {
  const int n = 1 << m;
  std::vector<Faces> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << n); ++fam) {
    if (!(fam & 1)) continue;
    bool closed = true;
    for (int s = 0; s < n && closed; ++s) {
      if (!(fam >> s & 1)) continue;
      for (int v = 0; v < m && closed; ++v)
        if ((s >> v & 1) && !(fam >> (s & ~(1 << v)) & 1)) closed = false;
    }
    if (!closed) continue;
    Faces f;
    for (int s = 0; s < n; ++s)
      if (fam >> s & 1) f.push_back(static_cast<Mask>(s));
    out.push_back(f);
  }
  return out;
}

inline Faces random_faces(int m, int generators, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<Mask> gens;
  for (int g = 0; g < generators; ++g) {
    Mask s = 0;
    for (int v = 0; v < m; ++v)
      if (keep(rng)) s |= Mask{1} << v;
    gens.push_back(s);
  }
  return faces_from_generators(m, gens);
}

// Rank over GF(2) of rows given as bit masks.
inline int rank_gf2(std::vector<Mask> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [bit](Mask r) { return r >> bit & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] >> bit & 1)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

// Largest r such that some m x r matrix over GF(2) has full column rank on
// the rows outside every face. Exhaustive over all matrices; tiny m only.
inline int s_real(int m, const Faces& k) {
  std::vector<Mask> maximal;
  for (Mask s : k) {
    bool is_max = true;
    for (int v = 0; v < m && is_max; ++v)
      if (!(s >> v & 1) && contains(k, s | Mask{1} << v)) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  int largest = 0;
  for (Mask f : maximal) largest = std::max(largest, std::popcount(f));
  int best = 0;
  // r rows outside a face of size |f| cannot have rank above m - |f|
  for (int r = 1; r <= m - largest; ++r) {
    bool found = false;
    const std::uint64_t total = std::uint64_t{1} << (m * r);
    for (std::uint64_t code = 0; code < total && !found; ++code) {
      std::vector<Mask> rows(m);
      for (int i = 0; i < m; ++i) rows[i] = (code >> (i * r)) & ((Mask{1} << r) - 1);
      bool ok = true;
      for (Mask f : maximal) {
        std::vector<Mask> outside;
        for (int i = 0; i < m; ++i)
          if (!(f >> i & 1)) outside.push_back(rows[i]);
        if (rank_gf2(outside) < r) {
          ok = false;
          break;
        }
      }
      found = ok;
    }
    if (!found) break;
    best = r;
  }
  return best;
}

// Odd circuits of the nonzero vectors of Z_2^k: sets with zero sum and no
// proper nonempty zero-sum subset.
inline std::vector<std::uint64_t> odd_circuits(int k) {
  const int n = (1 << k) - 1;
  std::vector<std::uint64_t> out;
  auto sum_of = [](std::uint64_t set) {
    int x = 0;
    for (int a = 1; a < 64; ++a)
      if (set >> a & 1) x ^= a;
    return x;
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size % 2 == 0 || size > k + 1) continue;
    const std::uint64_t set = mask << 1;  // bit a for vector a
    if (sum_of(set) != 0) continue;
    bool circuit = true;
    for (std::uint64_t t = (set - 1) & set; t != 0 && circuit; t = (t - 1) & set)
      if (sum_of(t) == 0) circuit = false;
    if (circuit) out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Point2 = std::array<std::int64_t, 2>;

inline std::int64_t cross(Point2 a, Point2 b) { return a[0] * b[1] - a[1] * b[0]; }
inline std::int64_t dotp(Point2 a, Point2 b) { return a[0] * b[0] + a[1] * b[1]; }

// 0 in the convex hull of planar integer points.
inline bool zero_in_hull_2d(const std::vector<Point2>& pts) {
  for (auto p : pts)
    if (p[0] == 0 && p[1] == 0) return true;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (cross(pts[a], pts[b]) == 0 && dotp(pts[a], pts[b]) < 0) return true;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        const auto s1 = cross(pts[a], pts[b]), s2 = cross(pts[b], pts[c]), s3 = cross(pts[c], pts[a]);
        if (s1 == 0 && s2 == 0 && s3 == 0) continue;
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return true;
      }
  return false;
}

}  // namespace oracle
