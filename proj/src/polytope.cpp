#include "constellation/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "constellation/convexity.hpp"
#include "constellation/error.hpp"
#include "constellation/linalg.hpp"

namespace constellation {

namespace {

RationalVector minus(const RationalVector& a, const RationalVector& b) {
  RationalVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Coordinates of the points in their affine hull: differences from the first
// point, restricted to the pivot columns of the reduced difference matrix.
std::vector<RationalVector> project_to_affine_hull(const std::vector<RationalVector>& points, int& dim) {
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(minus(points[i], points[0]));
  std::vector<std::size_t> pivots;
  if (!diffs.empty()) pivots = reduced_row_echelon(RationalMatrix::from_rows(diffs)).pivots;
  dim = static_cast<int>(pivots.size());
  std::vector<RationalVector> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const RationalVector d = minus(p, points[0]);
    RationalVector q(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) q[k] = d[pivots[k]];
    out.push_back(std::move(q));
  }
  return out;
}

std::string describe_witness(std::size_t i, const std::vector<std::size_t>& others, const ConvexWitness& w) {
  std::string s = "point " + std::to_string(i) + " is not a vertex: it equals";
  for (std::size_t t = 0; t < w.indices.size(); ++t) {
    s += (t == 0 ? " " : " + ");
    s += format_rational(w.coefficients[t]) + "*p" + std::to_string(others[w.indices[t]]);
  }
  return s;
}

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  int d = 0;
  project_to_affine_hull(points, d);
  return d;
}

Polytope Polytope::from_vertices(std::vector<RationalVector> vertices) {
  if (vertices.empty()) throw Error("a polytope needs at least one vertex");
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  const std::size_t n = vertices.front().size();
  for (const auto& v : vertices)
    if (v.size() != n) throw Error("vertices have different dimensions");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j])
        throw Error("duplicate point: " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  Polytope p;
  p.ambient_ = static_cast<int>(n);
  int d = 0;
  const std::vector<RationalVector> y = project_to_affine_hull(vertices, d);
  p.dim_ = d;
  const std::size_t m = vertices.size();

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<RationalVector> rel;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      rel.push_back(minus(y[j], y[i]));
      others.push_back(j);
    }
    if (auto w = zero_in_convex_hull_witness(rel)) throw Error(describe_witness(i, others, *w));
  }
  p.vertices_ = std::move(vertices);

  std::set<VertexSet> facets;
  if (d == 0) {
    facets.insert(VertexSet());
  } else {
    const auto du = static_cast<std::size_t>(d);
    const std::uint64_t last = ((std::uint64_t{1} << du) - 1) << (m - du);
    for (std::uint64_t mask = (std::uint64_t{1} << du) - 1;; mask = next_combination(mask)) {
      const VertexSet s(mask);
      const int base = s.min_vertex();
      std::vector<RationalVector> rows;
      for (int v : s)
        if (v != base) rows.push_back(minus(y[static_cast<std::size_t>(v)], y[static_cast<std::size_t>(base)]));
      RationalMatrix normal_space = rows.empty() ? RationalMatrix::identity(du)
                                                 : kernel_basis(RationalMatrix::from_rows(rows));
      if (normal_space.cols() == 1) {
        const RationalVector a = normal_space.column(0);
        bool pos = false, neg = false;
        VertexSet on;
        for (std::size_t j = 0; j < m; ++j) {
          const Rational v = dot(a, minus(y[j], y[static_cast<std::size_t>(base)]));
          if (v > 0) pos = true;
          else if (v < 0) neg = true;
          else on = on.with(static_cast<int>(j));
        }
        if (!(pos && neg)) facets.insert(on);
      }
      if (mask == last) break;
    }
  }
  p.facets_.assign(facets.begin(), facets.end());

  std::set<VertexSet> lattice(facets.begin(), facets.end());
  std::vector<VertexSet> pending(facets.begin(), facets.end());
  while (!pending.empty()) {
    const VertexSet f = pending.back();
    pending.pop_back();
    for (VertexSet g : facets) {
      const VertexSet h = f & g;
      if (lattice.insert(h).second) pending.push_back(h);
    }
  }
  lattice.insert(VertexSet());
  lattice.insert(VertexSet::range(static_cast<int>(m)));
  for (VertexSet f : lattice) {
    std::vector<RationalVector> pts;
    for (int v : f) pts.push_back(p.vertices_[static_cast<std::size_t>(v)]);
    p.lattice_.push_back(Face{f, affine_dimension(pts)});
  }
  std::sort(p.lattice_.begin(), p.lattice_.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  return p;
}

SimplicialComplex nerve_complex(const Polytope& p) {
  return SimplicialComplex::from_maximal_faces(p.num_vertices(), p.facets());
}

SimplicialComplex facet_nerve(const Polytope& p) {
  const auto& facets = p.facets();
  const int f = static_cast<int>(facets.size());
  if (f > kMaxVertices) throw Error("facet_nerve: too many facets");
  std::vector<VertexSet> faces;
  for (int v = 0; v < p.num_vertices(); ++v) {
    VertexSet containing;
    for (int t = 0; t < f; ++t)
      if (facets[static_cast<std::size_t>(t)].contains(v)) containing = containing.with(t);
    faces.push_back(containing);
  }
  return SimplicialComplex::from_maximal_faces(f, std::move(faces));
}

std::map<std::pair<int, int>, long long> f_nl(const Polytope& p) {
  std::map<std::pair<int, int>, long long> out;
  for (const Face& f : p.face_lattice())
    if (f.dim < p.dimension()) ++out[{f.dim, f.vertices.size()}];
  return out;
}

std::vector<long long> f_vector(const Polytope& p) {
  std::vector<long long> out(static_cast<std::size_t>(p.dimension() + 1), 0);
  for (const Face& f : p.face_lattice())
    if (f.dim < p.dimension()) ++out[static_cast<std::size_t>(f.dim + 1)];
  return out;
}

std::vector<int> pyramid_apices(const Polytope& p) {
  std::vector<int> out;
  const VertexSet all = VertexSet::range(p.num_vertices());
  for (int i = 0; i < p.num_vertices(); ++i)
    if (std::binary_search(p.facets().begin(), p.facets().end(), all.without(i))) out.push_back(i);
  return out;
}

std::optional<int> is_pyramid(const Polytope& p) {
  const auto apices = pyramid_apices(p);
  if (apices.empty()) return std::nullopt;
  return apices.front();
}

bool is_k_neighborly(const Polytope& p, int k) {
  const SimplicialComplex kp = nerve_complex(p);
  for (VertexSet n : kp.minimal_nonfaces())
    if (n.size() <= k) return false;
  return true;
}

}  // namespace constellation
