#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constellation/complex.hpp"
#include "constellation/gale.hpp"
#include "constellation/linalg.hpp"
#include "constellation/polytope.hpp"

namespace constellation {

// Nonzero vectors of Z_2^k are numbered 1 .. 2^k - 1 by their binary value; a
// set of them is a mask with bit a set for vector a.
using Z2Set = std::uint64_t;

// Odd-size sets {a_1..a_l} with a_1 + ... + a_l = 0 whose proper subsets are
// linearly independent, ascending. Requires k <= 6.
std::vector<Z2Set> minimal_odd_dependences(int k);

// Generator matrix of a subgroup of Z_2^m (m rows, r columns).
struct SubgroupWitness {
  int m = 0;
  int r = 0;
  GF2Matrix generators;
};

// Rows outside every maximal face have full column rank r.
bool validate_witness(const SimplicialComplex& k, const SubgroupWitness& w);

struct RealBuchstaberResult {
  enum class Status { Exact, Bounded };
  Status status = Status::Exact;
  int lower = 0;  // a witness of this rank exists
  int upper = 0;  // no subgroup of rank upper + 1 acts freely (exhausted)
  std::optional<SubgroupWitness> witness;
  // Search nodes spent on each refuted rank, as (rank, nodes).
  std::vector<std::pair<int, std::uint64_t>> refutations;
  std::string note;

  int value() const { return lower; }
};

struct RealSearchOptions {
  int r_max = 64;
  std::uint64_t node_budget = 50'000'000;
  int threads = 0;
};

// Largest rank of a subgroup of Z_2^m acting freely on the real moment-angle
// complex. The search runs over maps lambda: [m] -> Z_2^n that are injective
// on every maximal face up to GL(n); a feasible n gives rank m - n.
RealBuchstaberResult s_real_exact(const SimplicialComplex& k, const RealSearchOptions& options = {});

// xi[a - 1] is an index into k.minimal_nonfaces() for each nonzero a.
struct XiMap {
  int k = 0;
  std::vector<int> assignment;
};

struct XiSearchResult {
  std::optional<XiMap> map;
  std::uint64_t nodes = 0;
};

XiSearchResult s_real_lower_via_xi(const SimplicialComplex& k, int dim);
bool validate_xi(const SimplicialComplex& k, const XiMap& xi);

struct Bound {
  int value = 0;
  std::string tag;
};

struct SBoundsReport {
  Bound s_lower, s_upper, s_real_lower, s_real_upper;
  bool s_real_exact = false;
  bool s_exact = false;
};

SBoundsReport s_bounds(const SimplicialComplex& k, const RealSearchOptions& options = {});

struct SEqualsOneResult {
  bool equals_one = false;
  std::optional<int> apex;
  int facet_nerve_dimension = 0;
  // Two disjoint minimal nonfaces of K_P when P is not a pyramid.
  std::optional<std::pair<VertexSet, VertexSet>> disjoint_nonfaces;
};

SEqualsOneResult s_equals_one(const Polytope& p);

// Directions for each nonzero a: an open hemisphere containing the points
// outside the nonface xi(a). The nonfaces index nerve_complex-side minimal
// nonfaces of the polytope whose Gale diagram is x.
std::vector<RationalVector> eta_from_xi(const PointConfiguration& x, const SimplicialComplex& nerve, const XiMap& xi);

// For each odd minimal dependence, every point lies in the open hemisphere of
// at least one of its directions. eta[a - 1] is the direction of a.
bool eta_certificate_check(const PointConfiguration& x, int k, const std::vector<RationalVector>& eta);

}  // namespace constellation
