#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "constellation/linalg.hpp"
#include "constellation/rational.hpp"

namespace constellation {

// Witness for 0 in conv(points): indices into the input and their convex
// coefficients (positive, summing to 1).
struct ConvexWitness {
  std::vector<std::size_t> indices;
  std::vector<Rational> coefficients;
};

// Decides 0 in conv(points) by Caratheodory enumeration: every affinely
// independent subset of at most n+1 points is tried and its unique
// barycentric solution checked for nonnegativity.
//
// Because the coefficients can be rescaled, this is the same predicate as
// "the points admit a nonzero nonnegative linear dependence", which is
// invariant under independent positive rescaling of each point.
bool zero_in_convex_hull(std::span<const RationalVector> points);
std::optional<ConvexWitness> zero_in_convex_hull_witness(std::span<const RationalVector> points);

// Scale-invariant name for the same predicate, used where the points stand
// for rays.
inline bool has_nonnegative_dependence(std::span<const RationalVector> points) {
  return zero_in_convex_hull(points);
}

// Unique coefficients with sum 1 and sum lambda_i p_i = 0, when the points are
// affinely independent and such coefficients exist. Signs are not checked.
std::optional<std::vector<Rational>> barycentric_zero(std::span<const RationalVector> points);

// Phase-one simplex with Bland's rule: some x >= 0 with A x = b, or nothing.
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, std::span<const Rational> b);

// True iff some lambda with every lambda_i >= 1 gives sum lambda_i x_i = 0.
bool strictly_positive_dependence(std::span<const RationalVector> points);

// True iff the points positively span R^dim (full rank and a strictly
// positive dependence).
bool positively_spans(std::span<const RationalVector> points, std::size_t dim);

// A direction y with <x, y> > 0 for every given point, if one exists.
std::optional<RationalVector> open_hemisphere_direction(std::span<const RationalVector> points, std::size_t dim);

}  // namespace constellation
