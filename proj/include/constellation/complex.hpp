#pragma once

#include <memory>
#include <span>
#include <vector>

#include "constellation/vertex_set.hpp"

namespace constellation {

// Abstract simplicial complex on the vertex universe {0, ..., m-1}, stored as
// the antichain of its maximal faces. Vertices that are not faces are ghosts.
//
// Every complex also carries a label for each of its vertices. Complexes built
// directly get labels 0..m-1; links and full subcomplexes inherit the labels
// of the parent vertices they keep, so composed restrictions can always be
// traced back to the original universe.
class SimplicialComplex {
 public:
  SimplicialComplex();  // {} on zero vertices

  static SimplicialComplex from_maximal_faces(int m, std::vector<VertexSet> faces);
  static SimplicialComplex from_minimal_nonfaces(int m, std::vector<VertexSet> nonfaces);
  static SimplicialComplex simplex(int m);            // all subsets of [m]
  static SimplicialComplex simplex_boundary(int m);   // all proper subsets of [m]
  static SimplicialComplex empty(int m);              // only the empty face

  int num_vertices() const { return m_; }
  VertexSet universe() const { return VertexSet::range(m_); }
  const std::vector<VertexSet>& maximal_faces() const { return maximal_; }
  const std::vector<VertexSet>& minimal_nonfaces() const;

  // -1 for {}.
  int dimension() const;
  bool is_face(VertexSet s) const;
  bool is_simplex() const;  // every subset of [m] is a face
  VertexSet ghost_vertices() const;
  VertexSet vertices() const { return universe() - ghost_vertices(); }

  const std::vector<int>& labels() const { return labels_; }
  SimplicialComplex with_labels(std::vector<int> labels) const;

  // Faces sorted by (size, bits).
  std::vector<VertexSet> faces() const;

  // Compares the universe size and the face set; labels are ignored.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.maximal_ == b.maximal_;
  }

 private:
  struct NonfaceCache;

  int m_ = 0;
  std::vector<VertexSet> maximal_;
  std::vector<int> labels_;
  std::shared_ptr<NonfaceCache> cache_;
};

// {I : [m] \ I is not a face of K}. Throws for the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

// Link of a face, re-indexed onto the universe [m] \ I.
SimplicialComplex link(const SimplicialComplex& k, VertexSet face);

// Full subcomplex on J, re-indexed onto J.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j);

// Faces with at most l+1 vertices.
SimplicialComplex skeleton(const SimplicialComplex& k, int l);

// Vertices of `b` are shifted past those of `a`.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Vertex i is replaced by l_i copies laid out consecutively; every minimal
// nonface becomes the union of the copies of its vertices. Labels of the
// result map each copy to its original vertex.
SimplicialComplex wedge_multiply(const SimplicialComplex& k, std::span<const int> multiplicities);

bool is_flag(const SimplicialComplex& k);

// f[0] = f_{-1} = 1, f[p+1] = number of p-dimensional faces.
std::vector<long long> f_vector(const SimplicialComplex& k);

}  // namespace constellation
