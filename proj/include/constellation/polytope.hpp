#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "constellation/complex.hpp"
#include "constellation/rational.hpp"
#include "constellation/vertex_set.hpp"

namespace constellation {

struct Face {
  VertexSet vertices;
  int dim = -1;
  friend bool operator==(const Face&, const Face&) = default;
};

// Convex polytope given by its vertices. Construction validates that every
// point is a vertex and enumerates the facets by brute force over affinely
// independent d-subsets, which costs O(m^d * m) rational operations.
class Polytope {
 public:
  static Polytope from_vertices(std::vector<RationalVector> vertices);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int ambient_dimension() const { return ambient_; }
  int dimension() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  // Vertex sets of the facets, ascending.
  const std::vector<VertexSet>& facets() const { return facets_; }
  // Every face including the empty face and P itself, sorted by (dim, bits).
  const std::vector<Face>& face_lattice() const { return lattice_; }

 private:
  int ambient_ = 0;
  int dim_ = -1;
  std::vector<RationalVector> vertices_;
  std::vector<VertexSet> facets_;
  std::vector<Face> lattice_;
};

// Affine dimension of a point set (-1 when empty).
int affine_dimension(const std::vector<RationalVector>& points);

// K(P): I is a face iff the vertices in I lie on a common facet.
SimplicialComplex nerve_complex(const Polytope& p);

// K_P on facet labels: I is a face iff the facets in I share a vertex. This
// is the nerve complex of the polar polytope.
SimplicialComplex facet_nerve(const Polytope& p);

// f_{n,l}: proper faces of dimension n with l vertices, with f_{-1,0} = 1.
std::map<std::pair<int, int>, long long> f_nl(const Polytope& p);

// f[n + 1] = number of n-dimensional proper faces, n = -1 .. d-1.
std::vector<long long> f_vector(const Polytope& p);

// Smallest i such that the other vertices span a facet.
std::optional<int> is_pyramid(const Polytope& p);
std::vector<int> pyramid_apices(const Polytope& p);

bool is_k_neighborly(const Polytope& p, int k);

}  // namespace constellation
