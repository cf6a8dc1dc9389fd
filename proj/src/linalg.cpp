#include "constellation/linalg.hpp"

#include <bit>
#include <utility>

#include "constellation/error.hpp"

namespace constellation {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t height) {
  RationalMatrix m(height, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != height) throw Error("ragged matrix columns");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RowEchelon reduced_row_echelon(RationalMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_columns.push_back(c);

  RationalMatrix basis(m.cols(), free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) {
    const std::size_t f = free_columns[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

GF2Matrix GF2Matrix::rows_subset(std::span<const std::size_t> which) const {
  GF2Matrix out(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i) {
    auto src = row(which[i]);
    auto dst = out.row(i);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

void GF2Eliminator::reset(std::size_t words) {
  words_ = words;
  rank_ = 0;
  pivot_rows_.clear();
  pivot_columns_.clear();
  pivot_of_column_.assign(words * 64, -1);
  scratch_.assign(words, 0);
}

bool GF2Eliminator::insert(std::span<const std::uint64_t> row) {
  std::copy(row.begin(), row.end(), scratch_.begin());
  std::size_t w = 0;
  while (true) {
    while (w < words_ && scratch_[w] == 0) ++w;
    if (w == words_) return false;
    const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(scratch_[w]));
    const std::int64_t p = pivot_of_column_[col];
    if (p < 0) break;
    const std::uint64_t* prow = pivot_rows_.data() + static_cast<std::size_t>(p) * words_;
    for (std::size_t k = w; k < words_; ++k) scratch_[k] ^= prow[k];
  }
  const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(scratch_[w]));
  pivot_of_column_[col] = static_cast<std::int64_t>(rank_);
  pivot_columns_.push_back(col);
  pivot_rows_.insert(pivot_rows_.end(), scratch_.begin(), scratch_.end());
  ++rank_;
  return true;
}

std::size_t rank_gf2(const GF2Matrix& m) {
  GF2Eliminator e;
  e.reset(m.words_per_row());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

GF2Matrix kernel_basis_gf2(const GF2Matrix& input) {
  GF2Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != lead) {
      auto a = m.row(p);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || !m.get(r, c)) continue;
      auto dst = m.row(r);
      auto src = m.row(lead);
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
    }
    pivots.push_back(c);
    ++lead;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_columns.push_back(c);

  GF2Matrix basis(m.cols(), free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) {
    basis.set(free_columns[k], k);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m.get(r, free_columns[k])) basis.set(pivots[r], k);
  }
  return basis;
}

int rank_gf2_words(std::span<const std::uint64_t> vectors) {
  std::uint64_t basis[64] = {};
  int r = 0;
  for (std::uint64_t v : vectors) {
    while (v != 0) {
      const int b = std::countr_zero(v);
      if (basis[b] == 0) {
        basis[b] = v;
        ++r;
        break;
      }
      v ^= basis[b];
    }
  }
  return r;
}

}  // namespace constellation
