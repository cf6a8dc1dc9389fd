#include "constellation/face_table.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

#include "constellation/error.hpp"

namespace constellation {

FaceTable::FaceTable(int m) : m_(m) {
  if (m < 0 || m > kMaxVertices)
    throw Error("face tables support at most " + std::to_string(kMaxVertices) + " vertices, got " + std::to_string(m));
  words_.assign(((std::size_t{1} << m) + 63) / 64, 0);
}

FaceTable FaceTable::from_maximal_faces(int m, std::span<const VertexSet> faces) {
  FaceTable t(m);
  for (VertexSet f : faces) t.insert(f.bits());
  t.close_downward();
  return t;
}

FaceTable FaceTable::from_complex(const SimplicialComplex& k) {
  return from_maximal_faces(k.num_vertices(), k.maximal_faces());
}

void FaceTable::close_downward() {
  static constexpr std::array<std::uint64_t, 6> kHasBit = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  for (int v = 0; v < m_ && v < 6; ++v)
    for (auto& w : words_) w |= (w & kHasBit[static_cast<std::size_t>(v)]) >> (1U << v);
  for (int v = 6; v < m_; ++v) {
    const std::size_t step = std::size_t{1} << (v - 6);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (i & step) words_[i ^ step] |= words_[i];
  }
}

std::uint64_t FaceTable::count() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::vector<VertexSet> FaceTable::maximal_faces() const {
  std::vector<VertexSet> out;
  const std::uint64_t n = std::uint64_t{1} << m_;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (!contains(s)) continue;
    bool maximal = true;
    for (int v = 0; v < m_ && maximal; ++v)
      if (!((s >> v) & 1U) && contains(s | (std::uint64_t{1} << v))) maximal = false;
    if (maximal) out.emplace_back(s);
  }
  return out;
}

std::vector<VertexSet> FaceTable::minimal_nonfaces() const {
  std::vector<VertexSet> out;
  const std::uint64_t n = std::uint64_t{1} << m_;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (contains(s)) continue;
    bool minimal = true;
    for (std::uint64_t r = s; r != 0 && minimal; r &= r - 1)
      if (!contains(s & ~(r & (~r + 1)))) minimal = false;
    if (minimal) out.emplace_back(s);
  }
  return out;
}

FaceTable FaceTable::restrict_to(VertexSet j) const {
  const std::uint64_t u = j.bits();
  if ((u >> m_) != 0) throw Error("restrict_to: vertex index >= m");
  FaceTable out(j.size());
  std::uint64_t t = 0;
  for (std::uint64_t s = 0;; s = (s - u) & u, ++t) {
    if (contains(s)) out.insert(t);
    if (s == u) break;
  }
  return out;
}

FaceTable FaceTable::link(VertexSet i) const {
  if (!contains(i.bits())) throw Error("link of a nonface " + to_string(i));
  const std::uint64_t u = (VertexSet::range(m_) - i).bits();
  FaceTable out(m_ - i.size());
  std::uint64_t t = 0;
  for (std::uint64_t s = 0;; s = (s - u) & u, ++t) {
    if (contains(s | i.bits())) out.insert(t);
    if (s == u) break;
  }
  return out;
}

FaceTable FaceTable::dual() const {
  const std::uint64_t full = (std::uint64_t{1} << m_) - 1;
  if (contains(full)) throw Error("dual undefined for the full simplex");
  FaceTable out(m_);
  for (std::uint64_t s = 0; s <= full; ++s)
    if (!contains(full ^ s)) out.insert(s);
  return out;
}

SimplicialComplex FaceTable::to_complex() const {
  return SimplicialComplex::from_maximal_faces(m_, maximal_faces());
}

namespace word_table {

namespace {

struct Masks {
  std::array<std::uint64_t, 64> subsets{};
  std::array<std::uint64_t, 64> supersets{};  // within [6]
  std::array<std::uint64_t, 64> boundary{};   // bits s \ {v}
  std::array<std::uint64_t, 7> by_size{};
  Masks() {
    for (std::uint64_t u = 0; u < 64; ++u)
      for (std::uint64_t s = 0; s < 64; ++s) {
        if ((s & ~u) == 0) subsets[u] |= std::uint64_t{1} << s;
        if ((u & ~s) == 0) supersets[u] |= std::uint64_t{1} << s;
      }
    for (std::uint64_t s = 0; s < 64; ++s) {
      for (std::uint64_t r = s; r != 0; r &= r - 1) boundary[s] |= std::uint64_t{1} << (s & ~(r & (~r + 1)));
      by_size[static_cast<std::size_t>(std::popcount(s))] |= std::uint64_t{1} << s;
    }
  }
};

const Masks& masks() {
  static const Masks m;
  return m;
}

std::uint64_t table_mask(int m) { return m >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << m)) - 1; }

std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(x);
}

void check_m(int m) {
  if (m < 0 || m > kMaxVertices) throw Error("word tables support at most 6 vertices");
}

}  // namespace

std::uint64_t pext(std::uint64_t x, std::uint64_t mask) {
#if defined(__BMI2__)
  return _pext_u64(x, mask);
#else
  std::uint64_t out = 0;
  int k = 0;
  for (; mask != 0; mask &= mask - 1, ++k)
    if (x & mask & (~mask + 1)) out |= std::uint64_t{1} << k;
  return out;
#endif
}

std::uint64_t subsets_mask(std::uint64_t u) { return masks().subsets[u & 63]; }

std::uint64_t supersets_mask(std::uint64_t i, int m) { return masks().supersets[i & 63] & table_mask(m); }

std::uint64_t dual(std::uint64_t table, int m) {
  check_m(m);
  const int n = 1 << m;
  return ~(reverse_bits(table) >> (64 - n)) & table_mask(m);
}

std::uint64_t restrict_to(std::uint64_t table, std::uint64_t j) { return pext(table, subsets_mask(j)); }

std::uint64_t link(std::uint64_t table, std::uint64_t i, int m) { return pext(table, supersets_mask(i, m)); }

void reduced_betti_gf2(std::uint64_t table, int m, int out[kMaxVertices + 1]) {
  check_m(m);
  const Masks& mk = masks();
  int ranks[kMaxVertices + 2] = {};  // ranks[p + 1] = rank of the boundary on p-faces
  for (int p = 0; p < m; ++p) {
    std::uint64_t faces = table & mk.by_size[static_cast<std::size_t>(p + 1)];
    std::uint64_t basis[64] = {};
    int r = 0;
    for (; faces != 0; faces &= faces - 1) {
      std::uint64_t v = mk.boundary[static_cast<std::size_t>(std::countr_zero(faces))];
      while (v != 0) {
        const int b = std::countr_zero(v);
        if (basis[b] == 0) {
          basis[b] = v;
          ++r;
          break;
        }
        v ^= basis[b];
      }
    }
    ranks[p + 1] = r;
  }
  for (int p = -1; p < m; ++p) {
    const int chains = std::popcount(table & mk.by_size[static_cast<std::size_t>(p + 1)]);
    out[p + 1] = chains - ranks[p + 1] - ranks[p + 2];
  }
}

std::vector<std::uint64_t> all_complexes(int m) {
  check_m(m);
  // Down-sets of the Boolean lattice on n elements: pairs D1 <= D0 of
  // down-sets on n - 1 elements, D = D0 + (D1 shifted by 2^(n-1)).
  std::vector<std::uint64_t> level{0, 1};
  for (int n = 1; n <= m; ++n) {
    const int shift = 1 << (n - 1);
    std::vector<std::uint64_t> next;
    for (std::uint64_t d0 : level)
      for (std::uint64_t d1 : level)
        if ((d1 & ~d0) == 0) next.push_back(d0 | (d1 << shift));
    level = std::move(next);
  }
  std::vector<std::uint64_t> out;
  out.reserve(level.size());
  for (std::uint64_t d : level)
    if (d & 1U) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace word_table

}  // namespace constellation
