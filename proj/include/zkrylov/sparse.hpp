#pragma once

// Coordinate ingestion, compressed sparse row storage and SpMV.
//
// CSR uses three arrays: values (AA), column indices (JA) and row pointers
// (IA, length rows+1). Indices are zero-based in memory; one_based_* render
// the arrays the way Fortran-style listings print them (IA(n+1) = nz+1).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zkrylov/cnum.hpp"
#include "zkrylov/vecops.hpp"

namespace zkrylov {

struct CooEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Cplx value;

  friend bool operator==(const CooEntry&, const CooEntry&) = default;
};

struct CooMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<CooEntry> entries;

  void add(std::size_t row, std::size_t col, Cplx value) { entries.push_back({row, col, value}); }
};

class CsrMatrix {
 public:
  CsrMatrix() : row_ptr_(1, 0) {}

  /// Takes ownership of the three arrays after checking every CSR invariant
  /// (row_ptr starts at 0, is nondecreasing and ends at nz; columns in range
  /// and strictly increasing within a row). Throws FormatError otherwise.
  static CsrMatrix from_arrays(std::size_t n_rows, std::size_t n_cols, std::vector<std::size_t> row_ptr,
                               std::vector<std::size_t> col_idx, std::vector<Cplx> values);

  std::size_t rows() const noexcept { return n_rows_; }
  std::size_t cols() const noexcept { return n_cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }
  bool is_square() const noexcept { return n_rows_ == n_cols_; }

  std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const std::size_t> col_idx() const noexcept { return col_idx_; }
  std::span<const Cplx> values() const noexcept { return values_; }

  std::size_t row_nnz(std::size_t row) const { return row_ptr_[row + 1] - row_ptr_[row]; }

  /// Stored value at (row, col), found by binary search within the row.
  std::optional<Cplx> at(std::size_t row, std::size_t col) const;

  std::vector<std::size_t> one_based_row_ptr() const;
  std::vector<std::size_t> one_based_col_idx() const;

  friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_idx_;
  std::vector<Cplx> values_;
};

/// Sorts by (row, col) and sums duplicates. Entries that sum to exactly zero
/// stay stored. Throws FormatError for an out-of-range index.
CsrMatrix coo_to_csr(const CooMatrix& m);

CooMatrix csr_to_coo(const CsrMatrix& a);

/// y = A x. Rows are independent sequential sums, so the result does not
/// depend on the thread count.
void spmv(const CsrMatrix& a, const ZVector& x, ZVector& y);
ZVector spmv(const CsrMatrix& a, const ZVector& x);

struct MatrixStats {
  std::size_t h = 0;
  std::size_t nz = 0;
  double density = 0.0;  // percent
  std::size_t bandwidth = 0;
  std::size_t max_row = 0;
  double nz_per_h = 0.0;
  double nz_per_h_stddev = 0.0;  // population standard deviation of row counts
  std::size_t upper_bandwidth = 0;
  std::size_t lower_bandwidth = 0;
};

MatrixStats stats(const CsrMatrix& a);

}  // namespace zkrylov
