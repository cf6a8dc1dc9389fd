#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "constellation/complex.hpp"
#include "constellation/homology.hpp"

namespace constellation {

class Polytope;
struct PointConfiguration;

// Bigraded Betti numbers beta^{-i,2j}. Keys are (i, 2j); zero entries are
// not stored.
struct BettiTable {
  int m = 0;
  Field field = Field::GF2;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int degree) const;
  void add(int i, int degree, long long value);
  // Sum over all degrees of row i.
  long long row_total(int i) const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.m == b.m && a.entries == b.entries;
  }
};

struct HochsterOptions {
  int max_vertices = 20;
  int threads = 0;  // 0: OpenMP default
};

// Sum over J of the reduced homology of the full subcomplexes K_J. The sweep
// over J runs in parallel; per-thread partial tables are merged in a fixed
// order, so the result does not depend on the schedule.
BettiTable hochster_betti(const SimplicialComplex& k, Field field = Field::GF2, const HochsterOptions& options = {});

// Straightforward single-threaded evaluation through full_subcomplex and
// reduced_betti. Kept as the reference for the parallel kernel.
BettiTable hochster_betti_serial(const SimplicialComplex& k, Field field = Field::GF2);

// For i > 0, nonzero entries only at 2j = 2(r + i + 1).
bool has_linear_resolution(const BettiTable& table, int r);

// Table of the Alexander dual of K, assembled from the homology of links of
// K where [m] \ J is a face and from the subcomplexes of the dual otherwise.
BettiTable betti_via_links(const SimplicialComplex& k, Field field = Field::GF2);

struct GaleBettiReport {
  BettiTable table;
  // beta^{-i,2j} - f_{d-i,m-j} for i > 0, nonzero entries only; present when
  // a polytope was supplied.
  std::optional<std::map<std::pair<int, int>, long long>> residual;
};

GaleBettiReport polytope_betti_from_gale(const PointConfiguration& x, const Polytope* p = nullptr,
                                         Field field = Field::GF2);

// Aligned text table listing (i, 2j), (i, j) and the value.
std::string format_betti_table(const BettiTable& t);

}  // namespace constellation
