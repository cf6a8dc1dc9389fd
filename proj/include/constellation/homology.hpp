#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "constellation/complex.hpp"
#include "constellation/face_table.hpp"

namespace constellation {

enum class Field { GF2, Q };

std::string to_string(Field f);
Field parse_field(const std::string& name);  // "gf2" or "q"

// Reduced Betti numbers b_p for p = -1 .. dim K; values[p + 1] = b_p.
struct BettiVector {
  Field field = Field::GF2;
  std::vector<long long> values;

  long long at(int p) const {
    const auto i = static_cast<std::size_t>(p + 1);
    return p >= -1 && i < values.size() ? values[i] : 0;
  }
  // Trailing zeros are not significant.
  friend bool operator==(const BettiVector& a, const BettiVector& b);
};

// Augmented boundary map from p-faces (columns) to (p-1)-faces (rows), with
// entries (-1)^t for removing the t-th smallest vertex.
struct BoundaryMatrix {
  int p = 0;
  std::vector<VertexSet> row_faces;
  std::vector<VertexSet> col_faces;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;

  std::size_t rank(Field field) const;
  std::vector<std::vector<int>> dense() const;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p);

BettiVector reduced_betti(const SimplicialComplex& k, Field field = Field::GF2);

// True iff the reduced Betti numbers are those of the r-sphere.
bool is_homology_sphere_like(const SimplicialComplex& k, Field field, int r);

// Rank of sparse rows over GF(2) or Q. Rows are lists of (column, entry).
std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::size_t, int>>>& rows, std::size_t cols,
                        Field field);

// Scratch space for repeated homology computations on full subcomplexes of
// one face table; one instance per thread.
class SubcomplexHomology {
 public:
  explicit SubcomplexHomology(const FaceTable& table);
  // Reduced Betti numbers of the full subcomplex on J; out[p + 1] = b_p,
  // sized |J| + 1.
  void compute(std::uint64_t j, Field field, std::vector<long long>& out);

 private:
  const FaceTable* table_;
  std::vector<std::uint32_t> index_;  // position of each face within its dimension
  std::vector<std::vector<std::uint64_t>> faces_by_size_;
  std::vector<std::uint64_t> row_words_;
};

}  // namespace constellation
