#include "constellation/betti.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "constellation/error.hpp"
#include "constellation/face_table.hpp"
#include "constellation/gale.hpp"
#include "constellation/polytope.hpp"

namespace constellation {

long long BettiTable::at(int i, int degree) const {
  const auto it = entries.find({i, degree});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int degree, long long value) {
  if (value == 0) return;
  auto& e = entries[{i, degree}];
  e += value;
  if (e == 0) entries.erase({i, degree});
}

long long BettiTable::row_total(int i) const {
  long long total = 0;
  for (const auto& [key, value] : entries)
    if (key.first == i) total += value;
  return total;
}

BettiTable hochster_betti(const SimplicialComplex& k, Field field, const HochsterOptions& options) {
  const int m = k.num_vertices();
  if (m > options.max_vertices || m > FaceTable::kMaxVertices)
    throw Error("hochster_betti: m = " + std::to_string(m) + " exceeds the configured cap of " +
                std::to_string(std::min(options.max_vertices, FaceTable::kMaxVertices)));
  const FaceTable table = FaceTable::from_complex(k);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << m);
  const std::size_t width = static_cast<std::size_t>(m + 1);
  // counts[i * width + j]
  std::vector<long long> counts(width * width, 0);
  counts[0] = 1;  // J = {} through the reduced homology of the empty complex

#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
  {
    SubcomplexHomology kernel(table);
    std::vector<long long> local(width * width, 0);
    std::vector<long long> b;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
    for (std::int64_t js = 1; js < total; ++js) {
      const auto j = static_cast<std::uint64_t>(js);
      if (table.contains(j)) continue;
      kernel.compute(j, field, b);
      const int size = std::popcount(j);
      for (int p = -1; p < size; ++p) {
        const long long v = b[static_cast<std::size_t>(p + 1)];
        if (v == 0) continue;
        const int i = size - 1 - p;
        local[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(size)] += v;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    for (std::size_t t = 0; t < counts.size(); ++t) counts[t] += local[t];
  }

  BettiTable out;
  out.m = m;
  out.field = field;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      out.add(i, 2 * j, counts[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)]);
  return out;
}

BettiTable hochster_betti_serial(const SimplicialComplex& k, Field field) {
  const int m = k.num_vertices();
  if (m > 30) throw Error("hochster_betti_serial: too many vertices");
  BettiTable out;
  out.m = m;
  out.field = field;
  out.add(0, 0, 1);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t j = 1; j < total; ++j) {
    const VertexSet js(j);
    if (k.is_face(js)) continue;
    const BettiVector b = reduced_betti(full_subcomplex(k, js), field);
    for (std::size_t t = 0; t < b.values.size(); ++t) {
      const int p = static_cast<int>(t) - 1;
      out.add(js.size() - 1 - p, 2 * js.size(), b.values[t]);
    }
  }
  return out;
}

bool has_linear_resolution(const BettiTable& table, int r) {
  for (const auto& [key, value] : table.entries) {
    const auto [i, degree] = key;
    if (i > 0 && value != 0 && degree != 2 * (r + i + 1)) return false;
  }
  return true;
}

BettiTable betti_via_links(const SimplicialComplex& k, Field field) {
  if (k.is_simplex()) throw Error("betti_via_links: dual undefined for the full simplex");
  const int m = k.num_vertices();
  if (m > 30) throw Error("betti_via_links: too many vertices");
  const SimplicialComplex dual = alexander_dual(k);
  const VertexSet u = k.universe();
  BettiTable out;
  out.m = m;
  out.field = field;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const VertexSet j(bits);
    const int size = j.size();
    const VertexSet rest = u - j;
    if (k.is_face(rest)) {
      const BettiVector b = reduced_betti(link(k, rest), field);
      for (std::size_t t = 0; t < b.values.size(); ++t) out.add(static_cast<int>(t) + 1, 2 * size, b.values[t]);
    } else {
      const BettiVector b = reduced_betti(full_subcomplex(dual, j), field);
      for (std::size_t t = 0; t < b.values.size(); ++t) {
        const int p = static_cast<int>(t) - 1;
        out.add(size - 1 - p, 2 * size, b.values[t]);
      }
    }
  }
  return out;
}

GaleBettiReport polytope_betti_from_gale(const PointConfiguration& x, const Polytope* p, Field field) {
  GaleBettiReport report;
  report.table = hochster_betti(constellation_complex(x), field);
  if (p == nullptr) return report;
  const int m = p->num_vertices();
  const int d = p->dimension();
  if (m != report.table.m) throw Error("polytope_betti_from_gale: polytope and configuration sizes differ");
  const auto fnl = f_nl(*p);
  std::map<std::pair<int, int>, long long> residual;
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      long long f = 0;
      if (auto it = fnl.find({d - i, m - j}); it != fnl.end()) f = it->second;
      const long long diff = report.table.at(i, 2 * j) - f;
      if (diff != 0) residual[{i, 2 * j}] = diff;
    }
  report.residual = std::move(residual);
  return report;
}

std::string format_betti_table(const BettiTable& t) {
  std::ostringstream os;
  os << "field " << to_string(t.field) << ", m = " << t.m << '\n';
  os << std::setw(4) << "i" << std::setw(6) << "2j" << std::setw(5) << "j" << std::setw(10) << "beta" << '\n';
  for (const auto& [key, value] : t.entries)
    os << std::setw(4) << key.first << std::setw(6) << key.second << std::setw(5) << key.second / 2 << std::setw(10)
       << value << '\n';
  return os.str();
}

}  // namespace constellation
