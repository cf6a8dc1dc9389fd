#include "constellation/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "constellation/error.hpp"
#include "constellation/face_table.hpp"

namespace constellation {

struct SimplicialComplex::NonfaceCache {
  std::once_flag once;
  std::vector<VertexSet> nonfaces;
};

namespace {

void check_universe(int m) {
  if (m < 0 || m > kMaxVertices)
    throw Error("vertex universe size must be in [0, " + std::to_string(kMaxVertices) + "], got " +
                std::to_string(m));
}

void check_within(int m, std::span<const VertexSet> sets) {
  const VertexSet u = VertexSet::range(m);
  for (VertexSet s : sets)
    if (!s.subset_of(u)) throw Error("vertex index >= m in " + to_string(s));
}

std::vector<VertexSet> complements(std::span<const VertexSet> sets, VertexSet u) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) out.push_back(u - s);
  return out;
}

std::vector<VertexSet> compute_minimal_nonfaces(int m, const std::vector<VertexSet>& maximal) {
  if (m <= 20) return FaceTable::from_maximal_faces(m, maximal).minimal_nonfaces();
  // I is a nonface iff it meets the complement of every maximal face.
  return minimal_transversals(complements(maximal, VertexSet::range(m)));
}

std::vector<int> identity_labels(int m) {
  std::vector<int> l(static_cast<std::size_t>(m));
  std::iota(l.begin(), l.end(), 0);
  return l;
}

}  // namespace

SimplicialComplex::SimplicialComplex()
    : maximal_{VertexSet()}, cache_(std::make_shared<NonfaceCache>()) {}

SimplicialComplex SimplicialComplex::from_maximal_faces(int m, std::vector<VertexSet> faces) {
  check_universe(m);
  check_within(m, faces);
  if (faces.empty()) throw Error("a complex needs at least the empty face");
  SimplicialComplex k;
  k.m_ = m;
  k.maximal_ = maximal_elements(std::move(faces));
  k.labels_ = identity_labels(m);
  return k;
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(int m, std::vector<VertexSet> nonfaces) {
  check_universe(m);
  check_within(m, nonfaces);
  std::vector<VertexSet> n = minimal_elements(std::move(nonfaces));
  if (!n.empty() && n.front().empty()) throw Error("the empty set cannot be a nonface");
  // F is a face iff [m] \ F meets every nonface.
  SimplicialComplex k;
  k.m_ = m;
  k.maximal_ = complements(minimal_transversals(n), VertexSet::range(m));
  std::sort(k.maximal_.begin(), k.maximal_.end());
  k.labels_ = identity_labels(m);
  std::call_once(k.cache_->once, [&] { k.cache_->nonfaces = std::move(n); });
  return k;
}

SimplicialComplex SimplicialComplex::simplex(int m) {
  check_universe(m);
  return from_maximal_faces(m, {VertexSet::range(m)});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int m) {
  check_universe(m);
  if (m == 0) throw Error("the boundary of the simplex on 0 vertices has no faces");
  return from_minimal_nonfaces(m, {VertexSet::range(m)});
}

SimplicialComplex SimplicialComplex::empty(int m) {
  check_universe(m);
  return from_maximal_faces(m, {VertexSet()});
}

const std::vector<VertexSet>& SimplicialComplex::minimal_nonfaces() const {
  std::call_once(cache_->once, [this] { cache_->nonfaces = compute_minimal_nonfaces(m_, maximal_); });
  return cache_->nonfaces;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet f : maximal_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_face(VertexSet s) const {
  for (VertexSet f : maximal_)
    if (s.subset_of(f)) return true;
  return false;
}

bool SimplicialComplex::is_simplex() const { return maximal_.size() == 1 && maximal_.front() == universe(); }

VertexSet SimplicialComplex::ghost_vertices() const {
  VertexSet used;
  for (VertexSet f : maximal_) used = used | f;
  return universe() - used;
}

SimplicialComplex SimplicialComplex::with_labels(std::vector<int> labels) const {
  if (labels.size() != static_cast<std::size_t>(m_)) throw Error("label list has the wrong length");
  SimplicialComplex k = *this;
  k.labels_ = std::move(labels);
  return k;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : maximal_) {
    const std::uint64_t u = f.bits();
    for (std::uint64_t s = u;; s = (s - 1) & u) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (auto s : seen) out.emplace_back(s);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  if (k.is_simplex()) throw Error("dual undefined for the full simplex");
  const VertexSet u = k.universe();
  SimplicialComplex d = SimplicialComplex::from_maximal_faces(k.num_vertices(), complements(k.minimal_nonfaces(), u));
  return d.with_labels(k.labels());
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet face) {
  if (!face.subset_of(k.universe())) throw Error("link: vertex index >= m in " + to_string(face));
  if (!k.is_face(face)) throw Error("link of a nonface " + to_string(face));
  const VertexSet rest = k.universe() - face;
  std::vector<VertexSet> faces;
  for (VertexSet f : k.maximal_faces())
    if (face.subset_of(f)) faces.push_back(compress(f - face, rest));
  std::vector<int> labels;
  for (int v : rest) labels.push_back(k.labels()[static_cast<std::size_t>(v)]);
  return SimplicialComplex::from_maximal_faces(rest.size(), std::move(faces)).with_labels(std::move(labels));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j) {
  if (!j.subset_of(k.universe())) throw Error("full_subcomplex: vertex index >= m in " + to_string(j));
  std::vector<VertexSet> faces;
  faces.reserve(k.maximal_faces().size());
  for (VertexSet f : k.maximal_faces()) faces.push_back(compress(f & j, j));
  std::vector<int> labels;
  for (int v : j) labels.push_back(k.labels()[static_cast<std::size_t>(v)]);
  return SimplicialComplex::from_maximal_faces(j.size(), std::move(faces)).with_labels(std::move(labels));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int l) {
  if (l < -1) throw Error("skeleton dimension must be >= -1");
  const int size = l + 1;
  std::vector<VertexSet> faces;
  for (VertexSet f : k.maximal_faces()) {
    if (f.size() <= size) {
      faces.push_back(f);
      continue;
    }
    // All size-element subsets of f, by choosing positions inside f.
    const int n = f.size();
    if (size == 0) {
      faces.emplace_back();
      continue;
    }
    std::uint64_t c = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (c < limit) {
      faces.push_back(expand(VertexSet(c), f));
      const std::uint64_t t = c & (~c + 1);
      const std::uint64_t r = c + t;
      c = (((r ^ c) >> 2) / t) | r;
    }
  }
  return SimplicialComplex::from_maximal_faces(k.num_vertices(), std::move(faces)).with_labels(k.labels());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int m = a.num_vertices() + b.num_vertices();
  check_universe(m);
  std::vector<VertexSet> faces;
  for (VertexSet fa : a.maximal_faces())
    for (VertexSet fb : b.maximal_faces()) faces.push_back(fa | VertexSet(fb.bits() << a.num_vertices()));
  return SimplicialComplex::from_maximal_faces(m, std::move(faces));
}

SimplicialComplex wedge_multiply(const SimplicialComplex& k, std::span<const int> multiplicities) {
  const int m = k.num_vertices();
  if (multiplicities.size() != static_cast<std::size_t>(m)) throw Error("wedge_multiply: need one multiplicity per vertex");
  std::vector<VertexSet> blocks(static_cast<std::size_t>(m));
  std::vector<int> labels;
  int total = 0;
  for (int i = 0; i < m; ++i) {
    const int l = multiplicities[static_cast<std::size_t>(i)];
    if (l < 1) throw Error("wedge_multiply: multiplicities must be >= 1");
    if (total + l > kMaxVertices) throw Error("wedge_multiply: result exceeds the vertex cap");
    for (int c = 0; c < l; ++c) {
      blocks[static_cast<std::size_t>(i)] = blocks[static_cast<std::size_t>(i)].with(total + c);
      labels.push_back(i);
    }
    total += l;
  }
  std::vector<VertexSet> nonfaces;
  for (VertexSet n : k.minimal_nonfaces()) {
    VertexSet w;
    for (int v : n) w = w | blocks[static_cast<std::size_t>(v)];
    nonfaces.push_back(w);
  }
  return SimplicialComplex::from_minimal_nonfaces(total, std::move(nonfaces)).with_labels(std::move(labels));
}

bool is_flag(const SimplicialComplex& k) {
  for (VertexSet n : k.minimal_nonfaces())
    if (n.size() != 2) return false;
  return true;
}

std::vector<long long> f_vector(const SimplicialComplex& k) {
  std::vector<long long> f(static_cast<std::size_t>(k.dimension() + 2), 0);
  for (VertexSet s : k.faces()) ++f[static_cast<std::size_t>(s.size())];
  return f;
}

}  // namespace constellation
