#include "constellation/homology.hpp"

#include <algorithm>
#include <bit>

#include "constellation/error.hpp"
#include "constellation/linalg.hpp"
#include "constellation/rational.hpp"

namespace constellation {

std::string to_string(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

Field parse_field(const std::string& name) {
  if (name == "gf2" || name == "GF2") return Field::GF2;
  if (name == "q" || name == "Q") return Field::Q;
  throw Error("unknown field '" + name + "' (expected gf2 or q)");
}

bool operator==(const BettiVector& a, const BettiVector& b) {
  const std::size_t n = std::max(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    const long long x = i < a.values.size() ? a.values[i] : 0;
    const long long y = i < b.values.size() ? b.values[i] : 0;
    if (x != y) return false;
  }
  return true;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row -= factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -factor * pivot[b].second);
      ++b;
    } else {
      Rational v = row[a].second - factor * pivot[b].second;
      if (v != 0) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

class RationalEliminator {
 public:
  explicit RationalEliminator(std::size_t cols) : pivot_of_(cols, -1) {}
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t c = row.front().first;
      const long p = pivot_of_[c];
      if (p < 0) {
        pivot_of_[c] = static_cast<long>(pivots_.size());
        pivots_.push_back(std::move(row));
        return true;
      }
      const SparseRow& pr = pivots_[static_cast<std::size_t>(p)];
      const Rational factor = row.front().second / pr.front().second;
      row = axpy(row, factor, pr);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::vector<long> pivot_of_;
  std::vector<SparseRow> pivots_;
};

}  // namespace

std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::size_t, int>>>& rows, std::size_t cols,
                        Field field) {
  if (field == Field::GF2) {
    const std::size_t words = (cols + 63) / 64;
    if (words == 0) return 0;
    GF2Eliminator e;
    e.reset(words);
    std::vector<std::uint64_t> packed(words);
    for (const auto& row : rows) {
      std::fill(packed.begin(), packed.end(), 0);
      for (const auto& [c, v] : row)
        if (v & 1) packed[c / 64] ^= std::uint64_t{1} << (c % 64);
      e.insert(packed);
    }
    return e.rank();
  }
  RationalEliminator e(cols);
  for (const auto& row : rows) {
    SparseRow r;
    for (const auto& [c, v] : row)
      if (v != 0) r.emplace_back(c, Rational(v));
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    e.insert(std::move(r));
  }
  return e.rank();
}

std::size_t BoundaryMatrix::rank(Field field) const { return sparse_rank(columns, row_faces.size(), field); }

std::vector<std::vector<int>> BoundaryMatrix::dense() const {
  std::vector<std::vector<int>> d(row_faces.size(), std::vector<int>(col_faces.size(), 0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) d[r][c] = v;
  return d;
}

namespace {

BoundaryMatrix boundary_from_faces(const std::vector<VertexSet>& faces, int p) {
  BoundaryMatrix b;
  b.p = p;
  for (VertexSet f : faces) {
    if (f.size() == p) b.row_faces.push_back(f);
    if (f.size() == p + 1) b.col_faces.push_back(f);
  }
  for (VertexSet f : b.col_faces) {
    std::vector<std::pair<std::size_t, int>> col;
    int t = 0;
    for (int v : f) {
      const VertexSet g = f.without(v);
      const auto it = std::lower_bound(b.row_faces.begin(), b.row_faces.end(), g);
      col.emplace_back(static_cast<std::size_t>(it - b.row_faces.begin()), t % 2 == 0 ? 1 : -1);
      ++t;
    }
    std::sort(col.begin(), col.end());
    b.columns.push_back(std::move(col));
  }
  return b;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p) {
  if (p < -1 || p > k.dimension()) throw Error("boundary_matrix: p out of range");
  return boundary_from_faces(k.faces(), p);
}

BettiVector reduced_betti(const SimplicialComplex& k, Field field) {
  const int dim = k.dimension();
  const std::vector<VertexSet> faces = k.faces();
  // ranks[p + 1] = rank of the boundary on p-faces, p = -1 .. dim + 1
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 3), 0);
  std::vector<std::size_t> chains(static_cast<std::size_t>(dim + 2), 0);
  for (VertexSet f : faces) ++chains[static_cast<std::size_t>(f.size())];
  for (int p = 0; p <= dim; ++p) ranks[static_cast<std::size_t>(p + 1)] = boundary_from_faces(faces, p).rank(field);
  BettiVector b;
  b.field = field;
  b.values.resize(static_cast<std::size_t>(dim + 2));
  for (int p = -1; p <= dim; ++p) {
    const auto i = static_cast<std::size_t>(p + 1);
    b.values[i] = static_cast<long long>(chains[i] - ranks[i] - ranks[i + 1]);
  }
  return b;
}

bool is_homology_sphere_like(const SimplicialComplex& k, Field field, int r) {
  const BettiVector b = reduced_betti(k, field);
  BettiVector sphere;
  sphere.values.assign(static_cast<std::size_t>(std::max(r, -1) + 2), 0);
  sphere.values[static_cast<std::size_t>(r + 1)] = 1;
  return b == sphere;
}

SubcomplexHomology::SubcomplexHomology(const FaceTable& table)
    : table_(&table), index_(std::size_t{1} << table.num_vertices(), 0) {}

void SubcomplexHomology::compute(std::uint64_t j, Field field, std::vector<long long>& out) {
  const int n = std::popcount(j);
  faces_by_size_.resize(static_cast<std::size_t>(n + 1));
  for (auto& v : faces_by_size_) v.clear();
  for (std::uint64_t s = 0;; s = (s - j) & j) {
    if (table_->contains(s)) {
      auto& bucket = faces_by_size_[static_cast<std::size_t>(std::popcount(s))];
      index_[s] = static_cast<std::uint32_t>(bucket.size());
      bucket.push_back(s);
    }
    if (s == j) break;
  }
  int top = n;
  while (top > 0 && faces_by_size_[static_cast<std::size_t>(top)].empty()) --top;

  // ranks[p + 1]: rank of the boundary on p-faces (faces of size p + 1).
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 2), 0);
  GF2Eliminator gf2;
  for (int size = 1; size <= top; ++size) {
    const auto& cols = faces_by_size_[static_cast<std::size_t>(size)];
    const std::size_t target = faces_by_size_[static_cast<std::size_t>(size - 1)].size();
    if (field == Field::GF2) {
      const std::size_t words = (target + 63) / 64;
      gf2.reset(words);
      row_words_.assign(words, 0);
      for (std::uint64_t f : cols) {
        std::fill(row_words_.begin(), row_words_.end(), 0);
        for (std::uint64_t r = f; r != 0; r &= r - 1) {
          const std::uint32_t c = index_[f & ~(r & (~r + 1))];
          row_words_[c / 64] ^= std::uint64_t{1} << (c % 64);
        }
        gf2.insert(row_words_);
        if (gf2.rank() == target) break;
      }
      ranks[static_cast<std::size_t>(size)] = gf2.rank();
    } else {
      std::vector<std::vector<std::pair<std::size_t, int>>> rows;
      rows.reserve(cols.size());
      for (std::uint64_t f : cols) {
        std::vector<std::pair<std::size_t, int>> row;
        int t = 0;
        for (std::uint64_t r = f; r != 0; r &= r - 1, ++t)
          row.emplace_back(index_[f & ~(r & (~r + 1))], t % 2 == 0 ? 1 : -1);
        rows.push_back(std::move(row));
      }
      ranks[static_cast<std::size_t>(size)] = sparse_rank(rows, target, field);
    }
  }
  out.assign(static_cast<std::size_t>(n + 1), 0);
  for (int p = -1; p < n; ++p) {
    const auto i = static_cast<std::size_t>(p + 1);
    const auto chains = static_cast<long long>(faces_by_size_[i].size());
    out[i] = chains - static_cast<long long>(ranks[i]) - static_cast<long long>(ranks[i + 1]);
  }
}

}  // namespace constellation
