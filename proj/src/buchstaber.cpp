#include "constellation/buchstaber.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "constellation/convexity.hpp"
#include "constellation/error.hpp"

namespace constellation {

namespace {

// Reduces v against an echelon basis indexed by leading bit; returns the
// remainder.
std::uint64_t reduce(std::uint64_t v, const std::uint64_t* basis) {
  while (v != 0) {
    const int b = 63 - std::countl_zero(v);
    if (basis[b] == 0) return v;
    v ^= basis[b];
  }
  return 0;
}

void odd_dependences_dfs(int k, int first, int size, std::uint64_t sum, Z2Set chosen, std::uint64_t* basis,
                         std::vector<Z2Set>& out) {
  if (size >= 2 && size % 2 == 0) {
    // chosen + {sum} is a minimal dependence; count it once, from the
    // subset that omits its largest element.
    const int top = 63 - std::countl_zero(chosen);
    if (static_cast<int>(sum) > top) out.push_back(chosen | (Z2Set{1} << sum));
  }
  if (size == k) return;
  const int n = 1 << k;
  for (int a = first; a < n; ++a) {
    const std::uint64_t rem = reduce(static_cast<std::uint64_t>(a), basis);
    if (rem == 0) continue;
    const int lead = 63 - std::countl_zero(rem);
    basis[lead] = rem;
    odd_dependences_dfs(k, a + 1, size + 1, sum ^ static_cast<std::uint64_t>(a), chosen | (Z2Set{1} << a), basis, out);
    basis[lead] = 0;
  }
}

struct FaceIndex {
  int m = 0;
  std::vector<VertexSet> faces;
  // For each vertex v, the members u < v of every maximal face containing v.
  std::vector<std::vector<VertexSet>> earlier;
  std::vector<bool> ghost;
};

FaceIndex build_face_index(const SimplicialComplex& k) {
  FaceIndex fi;
  fi.m = k.num_vertices();
  fi.faces = k.maximal_faces();
  fi.earlier.resize(static_cast<std::size_t>(fi.m));
  fi.ghost.assign(static_cast<std::size_t>(fi.m), true);
  for (VertexSet f : fi.faces)
    for (int v : f) {
      fi.ghost[static_cast<std::size_t>(v)] = false;
      const VertexSet before = f & VertexSet((std::uint64_t{1} << v) - 1);
      fi.earlier[static_cast<std::size_t>(v)].push_back(before);
    }
  for (auto& e : fi.earlier) {
    e = maximal_elements(std::move(e));
  }
  return fi;
}

class LambdaSearch {
 public:
  LambdaSearch(const FaceIndex& fi, int n, std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
      : fi_(fi), n_(n), nodes_(nodes), budget_(budget), lambda_(static_cast<std::size_t>(fi.m), 0) {}

  enum class Outcome { Found, Exhausted, Budget };

  // Extends lambda[0..depth) whose span has dimension t.
  Outcome run(int depth, int t) {
    if (depth == fi_.m) return Outcome::Found;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) return Outcome::Budget;
    const auto v = static_cast<std::size_t>(depth);
    if (fi_.ghost[v]) {
      lambda_[v] = 0;
      return run(depth + 1, t);
    }
    const std::uint64_t top = t < n_ ? (std::uint64_t{1} << t) : (std::uint64_t{1} << t) - 1;
    for (std::uint64_t c = 1; c <= top; ++c) {
      if (!admissible(v, c)) continue;
      lambda_[v] = c;
      const Outcome o = run(depth + 1, c == (std::uint64_t{1} << t) ? t + 1 : t);
      if (o != Outcome::Exhausted) return o;
    }
    return Outcome::Exhausted;
  }

  // Candidate values for vertex `depth` given the current prefix.
  std::vector<std::pair<std::uint64_t, int>> children(int depth, int t) const {
    std::vector<std::pair<std::uint64_t, int>> out;
    const auto v = static_cast<std::size_t>(depth);
    if (fi_.ghost[v]) {
      out.emplace_back(0, t);
      return out;
    }
    const std::uint64_t top = t < n_ ? (std::uint64_t{1} << t) : (std::uint64_t{1} << t) - 1;
    for (std::uint64_t c = 1; c <= top; ++c)
      if (admissible(v, c)) out.emplace_back(c, c == (std::uint64_t{1} << t) ? t + 1 : t);
    return out;
  }

  std::vector<std::uint64_t>& lambda() { return lambda_; }

 private:
  bool admissible(std::size_t v, std::uint64_t c) const {
    for (VertexSet before : fi_.earlier[v]) {
      std::uint64_t basis[64] = {};
      for (int u : before) {
        const std::uint64_t r = reduce(lambda_[static_cast<std::size_t>(u)], basis);
        if (r != 0) basis[63 - std::countl_zero(r)] = r;
      }
      if (reduce(c, basis) == 0) return false;
    }
    return true;
  }

  const FaceIndex& fi_;
  int n_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> lambda_;
};

struct Prefix {
  std::vector<std::uint64_t> lambda;
  int depth = 0;
  int t = 0;
};

enum class Feasibility { Yes, No, Unknown };

Feasibility feasible(const FaceIndex& fi, int n, const RealSearchOptions& options, std::vector<std::uint64_t>& found,
                     std::uint64_t& nodes_spent) {
  std::atomic<std::uint64_t> nodes{0};
  // Breadth-first expansion to a frontier of prefixes, in search order.
  std::vector<Prefix> frontier{Prefix{std::vector<std::uint64_t>(static_cast<std::size_t>(fi.m), 0), 0, 0}};
  const std::size_t target = 256;
  while (frontier.size() < target) {
    std::vector<Prefix> next;
    bool grew = false;
    for (const Prefix& p : frontier) {
      if (p.depth == fi.m) {
        next.push_back(p);
        continue;
      }
      LambdaSearch s(fi, n, nodes, options.node_budget);
      s.lambda() = p.lambda;
      for (auto [c, t] : s.children(p.depth, p.t)) {
        Prefix q = p;
        q.lambda[static_cast<std::size_t>(p.depth)] = c;
        q.depth = p.depth + 1;
        q.t = t;
        next.push_back(std::move(q));
      }
      grew = true;
    }
    frontier = std::move(next);
    if (!grew || frontier.empty()) break;
  }

  const auto count = static_cast<std::int64_t>(frontier.size());
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::atomic<bool> over_budget{false};
  std::vector<std::vector<std::uint64_t>> solutions(frontier.size());
#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load() || over_budget.load()) continue;
    const Prefix& p = frontier[static_cast<std::size_t>(i)];
    LambdaSearch s(fi, n, nodes, options.node_budget);
    s.lambda() = p.lambda;
    const auto o = s.run(p.depth, p.t);
    if (o == LambdaSearch::Outcome::Found) {
      solutions[static_cast<std::size_t>(i)] = s.lambda();
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    } else if (o == LambdaSearch::Outcome::Budget) {
      over_budget = true;
    }
  }
  nodes_spent = nodes.load();
  if (best.load() != std::numeric_limits<std::int64_t>::max()) {
    found = solutions[static_cast<std::size_t>(best.load())];
    return Feasibility::Yes;
  }
  return over_budget ? Feasibility::Unknown : Feasibility::No;
}

SubgroupWitness witness_from_lambda(int m, int n, int r, const std::vector<std::uint64_t>& lambda) {
  GF2Matrix big(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v)
    for (int b = 0; b < n; ++b)
      if ((lambda[static_cast<std::size_t>(v)] >> b) & 1U) big.set(static_cast<std::size_t>(b), static_cast<std::size_t>(v));
  const GF2Matrix kernel = kernel_basis_gf2(big);
  SubgroupWitness w;
  w.m = m;
  w.r = r;
  w.generators = GF2Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(r));
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < r; ++c)
      if (kernel.get(static_cast<std::size_t>(i), static_cast<std::size_t>(c)))
        w.generators.set(static_cast<std::size_t>(i), static_cast<std::size_t>(c));
  return w;
}

}  // namespace

std::vector<Z2Set> minimal_odd_dependences(int k) {
  if (k < 1 || k > 6) throw Error("minimal_odd_dependences: k must be in [1, 6]");
  std::vector<Z2Set> out;
  std::uint64_t basis[64] = {};
  odd_dependences_dfs(k, 1, 0, 0, 0, basis, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_witness(const SimplicialComplex& k, const SubgroupWitness& w) {
  if (w.m != k.num_vertices() || w.generators.rows() != static_cast<std::size_t>(w.m) ||
      w.generators.cols() != static_cast<std::size_t>(w.r))
    return false;
  for (VertexSet f : k.maximal_faces()) {
    std::vector<std::size_t> rows;
    for (int v : k.universe() - f) rows.push_back(static_cast<std::size_t>(v));
    if (rank_gf2(w.generators.rows_subset(rows)) != static_cast<std::size_t>(w.r)) return false;
  }
  return true;
}

RealBuchstaberResult s_real_exact(const SimplicialComplex& k, const RealSearchOptions& options) {
  const int m = k.num_vertices();
  if (m > 63) throw Error("s_real_exact: too many vertices");
  const FaceIndex fi = build_face_index(k);
  const int n_min = std::max({k.dimension() + 1, m - options.r_max, 0});
  RealBuchstaberResult res;
  bool unknown = false;
  int unknown_n = -1;
  for (int n = n_min; n <= m; ++n) {
    std::vector<std::uint64_t> lambda;
    std::uint64_t spent = 0;
    const Feasibility f = feasible(fi, n, options, lambda, spent);
    if (f == Feasibility::No) {
      if (!unknown) res.refutations.emplace_back(m - n, spent);
      continue;
    }
    if (f == Feasibility::Unknown) {
      if (!unknown) unknown_n = n;
      unknown = true;
      continue;
    }
    const int r = m - n;
    res.witness = witness_from_lambda(m, n, r, lambda);
    if (!validate_witness(k, *res.witness)) throw Error("s_real_exact: internal error, witness failed validation");
    res.lower = r;
    if (unknown) {
      res.status = RealBuchstaberResult::Status::Bounded;
      res.upper = m - unknown_n;
      res.note = "search budget exhausted at rank " + std::to_string(m - unknown_n);
    } else {
      res.upper = r;
      if (n == n_min && n_min > k.dimension() + 1) {
        res.status = RealBuchstaberResult::Status::Bounded;
        res.upper = m - k.dimension() - 1;
        res.note = "capped at r_max = " + std::to_string(options.r_max);
      }
    }
    return res;
  }
  throw Error("s_real_exact: no feasible rank found");
}

XiSearchResult s_real_lower_via_xi(const SimplicialComplex& k, int dim) {
  const std::vector<Z2Set> deps = minimal_odd_dependences(dim);
  const std::vector<VertexSet>& nonfaces = k.minimal_nonfaces();
  const int vars = (1 << dim) - 1;
  const std::size_t nn = nonfaces.size();
  XiSearchResult result;
  if (nn == 0) return result;
  const std::size_t words = (nn + 63) / 64;

  // Dependences through each variable.
  std::vector<std::vector<Z2Set>> through(static_cast<std::size_t>(vars + 1));
  for (Z2Set d : deps)
    for (Z2Set r = d; r != 0; r &= r - 1) through[static_cast<std::size_t>(std::countr_zero(r))].push_back(d);

  std::vector<int> assign(static_cast<std::size_t>(vars + 1), -1);
  // domains[var * words + w]
  std::vector<std::uint64_t> domains(static_cast<std::size_t>(vars + 1) * words, 0);
  for (int a = 1; a <= vars; ++a)
    for (std::size_t i = 0; i < nn; ++i) domains[static_cast<std::size_t>(a) * words + i / 64] |= std::uint64_t{1} << (i % 64);

  auto domain_size = [&](const std::vector<std::uint64_t>& dom, int a) {
    int c = 0;
    for (std::size_t w = 0; w < words; ++w) c += std::popcount(dom[static_cast<std::size_t>(a) * words + w]);
    return c;
  };

  // Recursive search with forward checking on dependences that have exactly
  // one unassigned member.
  auto solve = [&](auto&& self, std::vector<std::uint64_t>& dom, int assigned) -> bool {
    ++result.nodes;
    if (assigned == vars) return true;
    int pick = -1, best = std::numeric_limits<int>::max();
    for (int a = 1; a <= vars; ++a) {
      if (assign[static_cast<std::size_t>(a)] >= 0) continue;
      const int s = domain_size(dom, a);
      if (s < best) {
        best = s;
        pick = a;
      }
    }
    if (best == 0) return false;
    for (std::size_t i = 0; i < nn; ++i) {
      if (!((dom[static_cast<std::size_t>(pick) * words + i / 64] >> (i % 64)) & 1U)) continue;
      assign[static_cast<std::size_t>(pick)] = static_cast<int>(i);
      std::vector<std::uint64_t> next = dom;
      bool ok = true;
      for (Z2Set d : through[static_cast<std::size_t>(pick)]) {
        VertexSet inter = VertexSet::range(k.num_vertices());
        int open = -1, unassigned = 0;
        for (Z2Set r = d; r != 0; r &= r - 1) {
          const int a = std::countr_zero(r);
          const int x = assign[static_cast<std::size_t>(a)];
          if (x < 0) {
            open = a;
            ++unassigned;
          } else {
            inter = inter & nonfaces[static_cast<std::size_t>(x)];
          }
        }
        if (unassigned == 0) {
          if (!inter.empty()) ok = false;
        } else if (unassigned == 1 && !inter.empty()) {
          for (std::size_t j = 0; j < nn; ++j)
            if (nonfaces[j].intersects(inter)) next[static_cast<std::size_t>(open) * words + j / 64] &= ~(std::uint64_t{1} << (j % 64));
          if (domain_size(next, open) == 0) ok = false;
        }
        if (!ok) break;
      }
      if (ok && self(self, next, assigned + 1)) return true;
      assign[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  };

  if (solve(solve, domains, 0)) {
    XiMap xi;
    xi.k = dim;
    for (int a = 1; a <= vars; ++a) xi.assignment.push_back(assign[static_cast<std::size_t>(a)]);
    result.map = std::move(xi);
  }
  return result;
}

bool validate_xi(const SimplicialComplex& k, const XiMap& xi) {
  const auto& nonfaces = k.minimal_nonfaces();
  if (xi.assignment.size() != static_cast<std::size_t>((1 << xi.k) - 1)) return false;
  for (int x : xi.assignment)
    if (x < 0 || static_cast<std::size_t>(x) >= nonfaces.size()) return false;
  for (Z2Set d : minimal_odd_dependences(xi.k)) {
    VertexSet inter = k.universe();
    for (Z2Set r = d; r != 0; r &= r - 1)
      inter = inter & nonfaces[static_cast<std::size_t>(xi.assignment[static_cast<std::size_t>(std::countr_zero(r) - 1)])];
    if (!inter.empty()) return false;
  }
  return true;
}

SBoundsReport s_bounds(const SimplicialComplex& k, const RealSearchOptions& options) {
  if (k.is_simplex()) throw Error("s_bounds: undefined for the full simplex");
  const int m = k.num_vertices();
  const int top = m - k.dimension() - 1;
  SBoundsReport rep;
  rep.s_lower = {1, "diagonal"};
  rep.s_real_lower = {1, "diagonal"};
  rep.s_real_upper = {top, "dimension"};

  const auto& n = k.minimal_nonfaces();
  bool disjoint_pair = false;
  for (std::size_t i = 0; i < n.size() && !disjoint_pair; ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      if (!n[i].intersects(n[j])) {
        disjoint_pair = true;
        break;
      }
  if (n.size() >= 3 || disjoint_pair) rep.s_lower = {2, "erokhovets-2"};

  const RealBuchstaberResult real = s_real_exact(k, options);
  if (real.lower > rep.s_real_lower.value) rep.s_real_lower = {real.lower, "matrix-witness"};
  if (real.upper < rep.s_real_upper.value) rep.s_real_upper = {real.upper, "search-exhausted"};
  if (rep.s_lower.value > rep.s_real_lower.value) rep.s_real_lower = {rep.s_lower.value, rep.s_lower.tag};
  rep.s_real_exact = rep.s_real_lower.value == rep.s_real_upper.value;
  rep.s_upper = {rep.s_real_upper.value, "real-bound"};

  const int sr = rep.s_real_lower.value;
  if (rep.s_real_exact && (sr == 1 || sr == 2)) {
    rep.s_lower = rep.s_upper = {sr, "equality-case"};
  } else if (rep.s_real_exact && k.dimension() <= 2) {
    rep.s_lower = rep.s_upper = {sr, "equality-case"};
  } else if (rep.s_lower.value == top) {
    rep.s_lower = rep.s_upper = {top, "equality-case"};
  }
  rep.s_exact = rep.s_lower.value == rep.s_upper.value;
  return rep;
}

SEqualsOneResult s_equals_one(const Polytope& p) {
  SEqualsOneResult res;
  res.apex = is_pyramid(p);
  const SimplicialComplex kp = facet_nerve(p);
  res.facet_nerve_dimension = kp.dimension();
  res.equals_one = kp.dimension() == kp.num_vertices() - 2;
  if (!res.equals_one) {
    const auto& n = kp.minimal_nonfaces();
    for (std::size_t i = 0; i < n.size() && !res.disjoint_nonfaces; ++i)
      for (std::size_t j = i + 1; j < n.size(); ++j)
        if (!n[i].intersects(n[j])) {
          res.disjoint_nonfaces = std::make_pair(n[i], n[j]);
          break;
        }
  }
  return res;
}

std::vector<RationalVector> eta_from_xi(const PointConfiguration& x, const SimplicialComplex& nerve, const XiMap& xi) {
  if (nerve.num_vertices() != x.size()) throw Error("eta_from_xi: size mismatch");
  const auto& nonfaces = nerve.minimal_nonfaces();
  std::vector<RationalVector> eta;
  for (int idx : xi.assignment) {
    const VertexSet simplex = nerve.universe() - nonfaces[static_cast<std::size_t>(idx)];
    std::vector<RationalVector> pts;
    for (int v : simplex) pts.push_back(x.points[static_cast<std::size_t>(v)]);
    auto dir = open_hemisphere_direction(pts, static_cast<std::size_t>(x.dim));
    if (!dir) throw Error("eta_from_xi: complement " + to_string(simplex) + " is not in an open hemisphere");
    eta.push_back(std::move(*dir));
  }
  return eta;
}

bool eta_certificate_check(const PointConfiguration& x, int k, const std::vector<RationalVector>& eta) {
  if (eta.size() != static_cast<std::size_t>((1 << k) - 1)) throw Error("eta_certificate_check: need 2^k - 1 directions");
  for (const auto& e : eta) {
    if (e.size() != static_cast<std::size_t>(x.dim)) throw Error("eta_certificate_check: direction has the wrong dimension");
    if (is_zero_vector(e)) throw Error("eta_certificate_check: zero direction vector");
  }
  for (Z2Set d : minimal_odd_dependences(k)) {
    for (const auto& p : x.points) {
      bool covered = false;
      for (Z2Set r = d; r != 0 && !covered; r &= r - 1)
        covered = dot(p, eta[static_cast<std::size_t>(std::countr_zero(r) - 1)]) > 0;
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace constellation
