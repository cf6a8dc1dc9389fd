#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "constellation/complex.hpp"
#include "constellation/vertex_set.hpp"

namespace constellation {

// Face-indicator bitmap over all 2^m subsets of [m]; bit s is set iff the
// subset with bitmask s is a face. Used where a complex is queried for many
// subsets (Hochster sweep, exhaustive small-case checks).
class FaceTable {
 public:
  static constexpr int kMaxVertices = 26;

  FaceTable() : FaceTable(0) {}
  explicit FaceTable(int m);  // no faces at all, not even the empty one
  static FaceTable from_complex(const SimplicialComplex& k);
  static FaceTable from_maximal_faces(int m, std::span<const VertexSet> faces);

  int num_vertices() const { return m_; }
  bool contains(std::uint64_t s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }
  bool contains(VertexSet s) const { return contains(s.bits()); }
  void insert(std::uint64_t s) { words_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  // Adds every subset of every member.
  void close_downward();

  std::uint64_t count() const;
  std::vector<VertexSet> maximal_faces() const;
  // Nonfaces whose every facet is a face. Requires a downward-closed table.
  std::vector<VertexSet> minimal_nonfaces() const;

  // Re-indexed onto J / onto [m] \ I, as in the complex operations.
  FaceTable restrict_to(VertexSet j) const;
  FaceTable link(VertexSet i) const;
  FaceTable dual() const;

  SimplicialComplex to_complex() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const FaceTable&, const FaceTable&) = default;

 private:
  int m_ = 0;
  std::vector<std::uint64_t> words_;
};

// Single-word tables for m <= 6: bit s of the word is the indicator of the
// subset s. These are the fast paths of the exhaustive small-case suites.
namespace word_table {

inline constexpr int kMaxVertices = 6;

std::uint64_t pext(std::uint64_t x, std::uint64_t mask);

// Positions s with s a subset of u / a superset of i, inside 2^m.
std::uint64_t subsets_mask(std::uint64_t u);
std::uint64_t supersets_mask(std::uint64_t i, int m);

std::uint64_t dual(std::uint64_t table, int m);
std::uint64_t restrict_to(std::uint64_t table, std::uint64_t j);
std::uint64_t link(std::uint64_t table, std::uint64_t i, int m);

// Reduced Betti numbers over GF(2); out[p + 1] = b_p for p = -1..m-1.
void reduced_betti_gf2(std::uint64_t table, int m, int out[kMaxVertices + 1]);

// Every downward-closed table on m vertices containing the empty face,
// ascending.
std::vector<std::uint64_t> all_complexes(int m);

}  // namespace word_table

}  // namespace constellation
