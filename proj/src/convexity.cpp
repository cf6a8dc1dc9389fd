#include "constellation/convexity.hpp"

#include <bit>
#include <cstdint>

#include "constellation/error.hpp"

namespace constellation {

namespace {

std::size_t common_dimension(std::span<const RationalVector> points) {
  if (points.empty()) return 0;
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw Error("points have different dimensions");
  return n;
}

std::uint64_t low_mask(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Next bitmask with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::optional<std::vector<Rational>> barycentric_zero(std::span<const RationalVector> points) {
  const std::size_t n = common_dimension(points);
  const std::size_t q = points.size();
  if (q == 0) return std::nullopt;
  RationalMatrix aug(n + 1, q + 1);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = points[j][i];
    aug(n, j) = 1;
  }
  aug(n, q) = 1;
  const RowEchelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() != q) return std::nullopt;  // dependent, or rhs became a pivot
  for (std::size_t r = 0; r < q; ++r)
    if (e.pivots[r] != r) return std::nullopt;
  std::vector<Rational> lambda(q);
  for (std::size_t r = 0; r < q; ++r) lambda[r] = e.reduced(r, q);
  return lambda;
}

std::optional<ConvexWitness> zero_in_convex_hull_witness(std::span<const RationalVector> points) {
  const std::size_t n = common_dimension(points);
  const std::size_t q = points.size();
  if (q > 64) throw Error("zero_in_convex_hull supports at most 64 points");
  for (std::size_t i = 0; i < q; ++i)
    if (is_zero_vector(points[i])) return ConvexWitness{{i}, {Rational(1)}};

  const std::size_t max_size = std::min(q, n + 1);
  std::vector<RationalVector> subset;
  for (std::size_t k = 2; k <= max_size; ++k) {
    const std::uint64_t last = low_mask(k) << (q - k);
    for (std::uint64_t mask = low_mask(k);; mask = next_combination(mask)) {
      subset.clear();
      std::vector<std::size_t> idx;
      for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(m));
        idx.push_back(i);
        subset.push_back(points[i]);
      }
      if (auto lambda = barycentric_zero(subset)) {
        bool nonnegative = true;
        for (const auto& l : *lambda) nonnegative = nonnegative && l >= 0;
        if (nonnegative) return ConvexWitness{std::move(idx), std::move(*lambda)};
      }
      if (mask == last) break;
    }
  }
  return std::nullopt;
}

bool zero_in_convex_hull(std::span<const RationalVector> points) {
  return zero_in_convex_hull_witness(points).has_value();
}

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t p = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != p) throw Error("right-hand side has the wrong length");
  const std::size_t width = n + p + 1;
  const std::size_t rhs = n + p;

  std::vector<Rational> t(p * width);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return t[i * width + j]; };
  for (std::size_t i = 0; i < p; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) at(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    at(i, n + i) = 1;
    at(i, rhs) = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(p);
  for (std::size_t i = 0; i < p; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective (sum of artificials); the last
  // entry holds minus the current objective value.
  std::vector<Rational> d(width);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[j] -= at(i, j);
    d[rhs] -= at(i, rhs);
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + p; ++j) {
      if (d[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = p;
    Rational best;
    for (std::size_t i = 0; i < p; ++i) {
      if (at(i, enter) <= 0) continue;
      Rational ratio = at(i, rhs) / at(i, enter);
      if (leave == p || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == p) break;  // cannot happen for a phase-one objective bounded below by 0

    const Rational inv = 1 / at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) *= inv;
    for (std::size_t i = 0; i < p; ++i) {
      if (i == leave || at(i, enter) == 0) continue;
      const Rational f = at(i, enter);
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
    }
    if (d[enter] != 0) {
      const Rational f = d[enter];
      for (std::size_t j = 0; j < width; ++j) d[j] -= f * at(leave, j);
    }
    basis[leave] = enter;
  }

  if (d[rhs] != 0) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < p; ++i)
    if (basis[i] < n) x[basis[i]] = at(i, rhs);
  return x;
}

bool strictly_positive_dependence(std::span<const RationalVector> points) {
  const std::size_t n = common_dimension(points);
  if (points.empty()) return true;
  RationalMatrix a(n, points.size());
  std::vector<Rational> b(n);
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      a(i, j) = points[j][i];
      b[i] -= points[j][i];
    }
  // lambda = 1 + mu with mu >= 0
  return find_nonnegative_solution(a, b).has_value();
}

bool positively_spans(std::span<const RationalVector> points, std::size_t dim) {
  if (!points.empty() && common_dimension(points) != dim) throw Error("points have the wrong dimension");
  if (dim == 0) return true;
  if (points.empty()) return false;
  std::vector<RationalVector> rows(points.begin(), points.end());
  if (rank(RationalMatrix::from_rows(rows)) != dim) return false;
  return strictly_positive_dependence(points);
}

std::optional<RationalVector> open_hemisphere_direction(std::span<const RationalVector> points, std::size_t dim) {
  if (!points.empty() && common_dimension(points) != dim) throw Error("points have the wrong dimension");
  const std::size_t q = points.size();
  if (q == 0) {
    if (dim == 0) return RationalVector{};
    RationalVector e(dim);
    e[0] = 1;
    return e;
  }
  // <x_i, u - v> - s_i = 1 with u, v, s >= 0
  RationalMatrix a(q, 2 * dim + q);
  std::vector<Rational> b(q, Rational(1));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      a(i, k) = points[i][k];
      a(i, dim + k) = -points[i][k];
    }
    a(i, 2 * dim + i) = -1;
  }
  auto sol = find_nonnegative_solution(a, b);
  if (!sol) return std::nullopt;
  RationalVector y(dim);
  for (std::size_t k = 0; k < dim; ++k) y[k] = (*sol)[k] - (*sol)[dim + k];
  return y;
}

}  // namespace constellation
