#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace kary {

/// Sparse integer matrix stored by column. Stored entries are nonzero and
/// each column is sorted by row.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    mpz_class value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  SparseIntMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), columns_(cols) {}

  /// Sorts each column, merges duplicate rows and drops zeros.
  static SparseIntMatrix from_columns(std::size_t rows, std::vector<Column> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  std::span<const Entry> column(std::size_t c) const { return columns_.at(c); }
  mpz_class at(std::size_t r, std::size_t c) const;

  SparseIntMatrix transpose() const;

  /// Rows `row_ids` and columns `col_ids`, renumbered in the given order.
  SparseIntMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

/// MatrixMarket "coordinate integer general" with 1-based indices.
void write_matrix_market(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix read_matrix_market(std::istream& in);

}  // namespace kary
