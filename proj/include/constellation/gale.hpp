#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constellation/complex.hpp"
#include "constellation/homology.hpp"
#include "constellation/polytope.hpp"
#include "constellation/rational.hpp"

namespace constellation {

// Points in R^dim, each nonzero point standing for the ray through it (a
// point of the unit sphere); zero points are allowed.
struct PointConfiguration {
  int dim = 0;
  std::vector<RationalVector> points;

  int size() const { return static_cast<int>(points.size()); }
  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
};

// Affine dependences of the vertices, as points in R^{m-d-1}. The kernel
// basis is put in reduced row-echelon form, so the output is canonical; any
// other choice differs by a linear automorphism.
PointConfiguration gale_diagram(const Polytope& p);

// I is a face iff the points of I lie in a common open hemisphere (no
// nonnegative nonzero dependence). Minimal nonfaces are searched among
// subsets of size at most dim + 1.
SimplicialComplex constellation_complex(const PointConfiguration& x, int threads = 0);

// The open hemispheres of the nonzero points cover the sphere.
bool covers_sphere(const PointConfiguration& x);
// Still covers after removing any single point.
bool is_good(const PointConfiguration& x);
// Every minimal nonface of the constellation complex has dim + 1 elements.
bool is_nondegenerate(const PointConfiguration& x);

struct LabelledConfiguration {
  PointConfiguration config;
  std::vector<int> labels;  // source index of each point
};

LabelledConfiguration with_multiplicities(const PointConfiguration& x, const std::vector<int>& multiplicities);

// Block-diagonal union in R^{dim1 + dim2}.
PointConfiguration direct_sum(const PointConfiguration& a, const PointConfiguration& b);

struct GaleAlexanderCheck {
  SimplicialComplex dual_of_nerve;   // alexander_dual(K(P))
  SimplicialComplex constellation;   // constellation_complex(G(P))
  bool equal = false;
};

GaleAlexanderCheck check_gale_alexander(const Polytope& p);
bool verify_gale_alexander(const Polytope& p);

struct SphereViolation {
  VertexSet subset;
  BettiVector betti;
  std::string reason;
};

// Every full subcomplex is a simplex or has the reduced homology of S^{dim-1},
// and sphere-like subcomplexes stay sphere-like on supersets. Returns the
// violations (empty when the property holds).
std::vector<SphereViolation> sphere_property_violations(const SimplicialComplex& k, int r, Field field = Field::GF2);

// Starting from each minimal nonface of size r + 2 and adding the remaining
// vertices in index order, the link of every added vertex in the partial
// complex has vanishing reduced homology. Returns the first failing step, if
// any, as "start J, vertex w".
std::optional<std::string> construction_step_failure(const SimplicialComplex& k, int r, Field field = Field::GF2);

}  // namespace constellation
