#include "constellation/vertex_set.hpp"

#include <algorithm>

#include "constellation/error.hpp"

namespace constellation {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex index out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << v;
  }
}

VertexSet VertexSet::from_indices(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex index out of range: " + std::to_string(v));
    bits |= std::uint64_t{1} << v;
  }
  return VertexSet(bits);
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

VertexSet compress(VertexSet s, VertexSet universe) {
  std::uint64_t out = 0;
  int k = 0;
  for (int v : universe) {
    if (s.contains(v)) out |= std::uint64_t{1} << k;
    ++k;
  }
  return VertexSet(out);
}

VertexSet expand(VertexSet local, VertexSet universe) {
  std::uint64_t out = 0;
  int k = 0;
  for (int v : universe) {
    if (local.contains(k)) out |= std::uint64_t{1} << v;
    ++k;
  }
  return VertexSet(out);
}

std::string to_string(VertexSet s, bool one_based) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(one_based ? v + 1 : v);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Larger sets first so that each candidate only needs checking against kept sets.
  std::vector<VertexSet> by_size = family;
  std::stable_sort(by_size.begin(), by_size.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> kept;
  for (VertexSet s : by_size) {
    bool dominated = false;
    for (VertexSet t : kept) {
      if (s.subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> by_size = family;
  std::stable_sort(by_size.begin(), by_size.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  std::vector<VertexSet> kept;
  for (VertexSet s : by_size) {
    bool dominated = false;
    for (VertexSet t : kept) {
      if (t.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& family) {
  std::vector<VertexSet> current{VertexSet()};
  for (VertexSet edge : minimal_elements(family)) {
    if (edge.empty()) return {};
    std::vector<VertexSet> next;
    next.reserve(current.size() * 2);
    for (VertexSet t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      for (int v : edge) next.push_back(t.with(v));
    }
    current = minimal_elements(std::move(next));
  }
  return current;
}

}  // namespace constellation
