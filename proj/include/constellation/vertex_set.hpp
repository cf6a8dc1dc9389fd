#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace constellation {

// Hard cap on the vertex universe: a VertexSet is one machine word.
inline constexpr int kMaxVertices = 64;

// Subset of {0, ..., m-1} stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet range(int m) {
    return VertexSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet from_indices(std::span<const int> vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int min_vertex() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  constexpr int max_vertex() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> indices() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Position of each element of `s` inside `universe`, packed to the low bits:
// the k-th smallest element of the universe becomes bit k.
VertexSet compress(VertexSet s, VertexSet universe);
// Inverse of compress.
VertexSet expand(VertexSet local, VertexSet universe);

// "{0,2,5}" or, with one_based, "{1,3,6}".
std::string to_string(VertexSet s, bool one_based = false);

// Inclusion-maximal / inclusion-minimal members, sorted ascending by bits,
// duplicates removed.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> family);
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> family);

// Minimal sets meeting every member of `family` (Berge's incremental
// algorithm). An empty member makes the result empty; an empty family gives
// the single transversal {}.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& family);

}  // namespace constellation
