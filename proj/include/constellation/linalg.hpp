#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "constellation/rational.hpp"

namespace constellation {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Each inner vector is one row; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t height);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transposed() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon reduced_row_echelon(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {v : M v = 0} as the columns of the result. The basis is the one
// read off the reduced row-echelon form: one vector per free column, with a 1
// in that column.
RationalMatrix kernel_basis(const RationalMatrix& m);

// Bit-packed matrix over GF(2), rows stored as consecutive 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

  GF2Matrix rows_subset(std::span<const std::size_t> which) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

std::size_t rank_gf2(const GF2Matrix& m);

// Columns of the result span {v : M v = 0} over GF(2).
GF2Matrix kernel_basis_gf2(const GF2Matrix& m);

// Rank of a list of vectors packed into single words.
int rank_gf2_words(std::span<const std::uint64_t> vectors);

// Incremental elimination state for packed GF(2) rows of a fixed width.
// Reused across calls to avoid reallocations in hot loops.
class GF2Eliminator {
 public:
  void reset(std::size_t words);
  // Reduces `row` against the current pivots; if it stays nonzero it becomes
  // a new pivot and the function returns true.
  bool insert(std::span<const std::uint64_t> row);
  std::size_t rank() const { return rank_; }

 private:
  std::size_t words_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::uint64_t> pivot_rows_;     // rank_ rows of words_ words
  std::vector<std::size_t> pivot_columns_;
  std::vector<std::int64_t> pivot_of_column_;  // -1 when the column has no pivot
  std::vector<std::uint64_t> scratch_;
};

}  // namespace constellation
