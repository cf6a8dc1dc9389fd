#include "constellation/gale.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "constellation/convexity.hpp"
#include "constellation/error.hpp"
#include "constellation/face_table.hpp"
#include "constellation/linalg.hpp"

namespace constellation {

namespace {

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

void check_configuration(const PointConfiguration& x) {
  if (x.dim < 0) throw Error("configuration dimension must be >= 0");
  if (x.points.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error("at most " + std::to_string(kMaxVertices) + " points are supported");
  for (const auto& p : x.points)
    if (p.size() != static_cast<std::size_t>(x.dim)) throw Error("point has the wrong dimension");
}

std::vector<RationalVector> select(const PointConfiguration& x, VertexSet s) {
  std::vector<RationalVector> out;
  for (int v : s) out.push_back(x.points[static_cast<std::size_t>(v)]);
  return out;
}

// True iff the points admit a nonnegative dependence using all of them, given
// that no proper subset does. Such a set is affinely independent, so its
// barycentric solution is unique.
bool is_minimal_capture(const std::vector<RationalVector>& pts) {
  const auto lambda = barycentric_zero(pts);
  if (!lambda) return false;
  for (const auto& l : *lambda)
    if (l < 0) return false;
  return true;
}

}  // namespace

PointConfiguration gale_diagram(const Polytope& p) {
  const int m = p.num_vertices();
  const int n = p.ambient_dimension();
  RationalMatrix a(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& y = p.vertices()[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) a(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = y[static_cast<std::size_t>(k)];
    a(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) = 1;
  }
  const RationalMatrix basis = kernel_basis(a);
  const std::size_t r = basis.cols();
  if (r != static_cast<std::size_t>(m - p.dimension() - 1)) throw Error("gale_diagram: unexpected kernel dimension");
  PointConfiguration out;
  out.dim = static_cast<int>(r);
  out.points.assign(static_cast<std::size_t>(m), RationalVector(r));
  if (r == 0) return out;
  const RowEchelon e = reduced_row_echelon(basis.transposed());
  for (int i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) out.points[static_cast<std::size_t>(i)][k] = e.reduced(k, static_cast<std::size_t>(i));
  return out;
}

SimplicialComplex constellation_complex(const PointConfiguration& x, int threads) {
  check_configuration(x);
  const int m = x.size();
  std::vector<VertexSet> nonfaces;
  const int max_size = std::min(m, x.dim + 1);
  for (int size = 1; size <= max_size; ++size) {
    // Candidates: subsets containing no nonface found so far.
    std::vector<VertexSet> candidates;
    const std::uint64_t last = ((std::uint64_t{1} << size) - 1) << (m - size);
    for (std::uint64_t mask = (std::uint64_t{1} << size) - 1;; mask = next_combination(mask)) {
      const VertexSet s(mask);
      bool clean = true;
      for (VertexSet n : nonfaces)
        if (n.subset_of(s)) {
          clean = false;
          break;
        }
      if (clean) candidates.push_back(s);
      if (mask == last) break;
    }
    std::vector<char> hit(candidates.size(), 0);
    const auto count = static_cast<std::int64_t>(candidates.size());
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
#endif
    for (std::int64_t c = 0; c < count; ++c)
      hit[static_cast<std::size_t>(c)] = is_minimal_capture(select(x, candidates[static_cast<std::size_t>(c)])) ? 1 : 0;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (hit[c]) nonfaces.push_back(candidates[c]);
  }
  (void)threads;
  return SimplicialComplex::from_minimal_nonfaces(m, std::move(nonfaces));
}

bool covers_sphere(const PointConfiguration& x) {
  check_configuration(x);
  std::vector<RationalVector> nonzero;
  for (const auto& p : x.points)
    if (!is_zero_vector(p)) nonzero.push_back(p);
  return positively_spans(nonzero, static_cast<std::size_t>(x.dim));
}

bool is_good(const PointConfiguration& x) {
  for (int i = 0; i < x.size(); ++i) {
    PointConfiguration y = x;
    y.points.erase(y.points.begin() + i);
    if (!covers_sphere(y)) return false;
  }
  return true;
}

bool is_nondegenerate(const PointConfiguration& x) {
  const SimplicialComplex k = constellation_complex(x);
  for (VertexSet n : k.minimal_nonfaces())
    if (n.size() != x.dim + 1) return false;
  return true;
}

LabelledConfiguration with_multiplicities(const PointConfiguration& x, const std::vector<int>& multiplicities) {
  if (multiplicities.size() != x.points.size()) throw Error("with_multiplicities: need one multiplicity per point");
  LabelledConfiguration out;
  out.config.dim = x.dim;
  for (std::size_t i = 0; i < x.points.size(); ++i) {
    if (multiplicities[i] < 1) throw Error("with_multiplicities: multiplicities must be >= 1");
    for (int c = 0; c < multiplicities[i]; ++c) {
      out.config.points.push_back(x.points[i]);
      out.labels.push_back(static_cast<int>(i));
    }
  }
  return out;
}

PointConfiguration direct_sum(const PointConfiguration& a, const PointConfiguration& b) {
  check_configuration(a);
  check_configuration(b);
  PointConfiguration out;
  out.dim = a.dim + b.dim;
  for (const auto& p : a.points) {
    RationalVector q(static_cast<std::size_t>(out.dim));
    std::copy(p.begin(), p.end(), q.begin());
    out.points.push_back(std::move(q));
  }
  for (const auto& p : b.points) {
    RationalVector q(static_cast<std::size_t>(out.dim));
    std::copy(p.begin(), p.end(), q.begin() + a.dim);
    out.points.push_back(std::move(q));
  }
  return out;
}

GaleAlexanderCheck check_gale_alexander(const Polytope& p) {
  const SimplicialComplex kp = nerve_complex(p);
  if (kp.is_simplex()) throw Error("verify_gale_alexander: K(P) is the full simplex");
  GaleAlexanderCheck c{alexander_dual(kp), constellation_complex(gale_diagram(p)), false};
  c.equal = c.dual_of_nerve.maximal_faces() == c.constellation.maximal_faces() &&
            c.dual_of_nerve.num_vertices() == c.constellation.num_vertices();
  return c;
}

bool verify_gale_alexander(const Polytope& p) { return check_gale_alexander(p).equal; }

std::vector<SphereViolation> sphere_property_violations(const SimplicialComplex& k, int r, Field field) {
  const int m = k.num_vertices();
  if (m > FaceTable::kMaxVertices) throw Error("sphere property check: too many vertices");
  const FaceTable table = FaceTable::from_complex(k);
  SubcomplexHomology kernel(table);
  std::vector<SphereViolation> out;
  std::vector<long long> b;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (table.contains(s)) continue;  // full subcomplex is a simplex
    kernel.compute(s, field, b);
    bool sphere = r + 1 < static_cast<int>(b.size());
    for (std::size_t t = 0; t < b.size() && sphere; ++t)
      sphere = b[t] == (static_cast<int>(t) == r + 1 ? 1 : 0);
    if (!sphere) {
      BettiVector bv;
      bv.field = field;
      bv.values = b;
      out.push_back({VertexSet(s), bv, "neither a simplex nor a homology " + std::to_string(r) + "-sphere"});
    }
  }
  return out;
}

std::optional<std::string> construction_step_failure(const SimplicialComplex& k, int r, Field field) {
  const VertexSet all = k.universe();
  bool any_start = false;
  for (VertexSet j : k.minimal_nonfaces()) {
    if (j.size() != r + 2) continue;
    any_start = true;
    VertexSet current = j;
    for (int w : all - j) {
      const VertexSet next = current.with(w);
      const SimplicialComplex sub = full_subcomplex(k, next);
      const VertexSet local_w = compress(VertexSet::singleton(w), next);
      if (!sub.is_face(local_w)) return "start " + to_string(j) + ", vertex " + std::to_string(w) + " is a ghost";
      const BettiVector b = reduced_betti(link(sub, local_w), field);
      for (long long v : b.values)
        if (v != 0) return "start " + to_string(j) + ", vertex " + std::to_string(w) + " has a non-acyclic link";
      current = next;
    }
  }
  if (!any_start) return std::string("no minimal nonface of size ") + std::to_string(r + 2);
  return std::nullopt;
}

}  // namespace constellation
