#include "zkrylov/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "parallel_for.hpp"
#include "simd/kernels.hpp"
#include "zkrylov/errors.hpp"

namespace zkrylov {

CsrMatrix CsrMatrix::from_arrays(std::size_t n_rows, std::size_t n_cols, std::vector<std::size_t> row_ptr,
                                 std::vector<std::size_t> col_idx, std::vector<Cplx> values) {
  if (row_ptr.size() != n_rows + 1) throw FormatError("row pointer array must have rows+1 entries");
  if (col_idx.size() != values.size()) throw FormatError("column index and value arrays differ in length");
  if (row_ptr.front() != 0) throw FormatError("row pointer array must start at 0");
  if (row_ptr.back() != values.size()) throw FormatError("last row pointer must equal nz");
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (row_ptr[r + 1] < row_ptr[r]) throw FormatError("row pointers decrease at row " + std::to_string(r));
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      if (col_idx[k] >= n_cols) throw FormatError("column index out of range in row " + std::to_string(r));
      if (k > row_ptr[r] && col_idx[k] <= col_idx[k - 1]) {
        throw FormatError("column indices not strictly increasing in row " + std::to_string(r));
      }
    }
  }
  CsrMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  m.values_ = std::move(values);
  return m;
}

std::optional<Cplx> CsrMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= n_rows_) return std::nullopt;
  const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return std::nullopt;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

std::vector<std::size_t> CsrMatrix::one_based_row_ptr() const {
  std::vector<std::size_t> out(row_ptr_);
  for (auto& v : out) ++v;
  return out;
}

std::vector<std::size_t> CsrMatrix::one_based_col_idx() const {
  std::vector<std::size_t> out(col_idx_);
  for (auto& v : out) ++v;
  return out;
}

CsrMatrix coo_to_csr(const CooMatrix& m) {
  for (const auto& e : m.entries) {
    if (e.row >= m.n_rows || e.col >= m.n_cols) {
      throw FormatError("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                        ") outside a " + std::to_string(m.n_rows) + "x" + std::to_string(m.n_cols) + " matrix");
    }
  }
  // Stable sort so duplicates are summed in input order.
  std::vector<std::size_t> order(m.entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = m.entries[a];
    const auto& eb = m.entries[b];
    return ea.row != eb.row ? ea.row < eb.row : ea.col < eb.col;
  });

  std::vector<std::size_t> row_ptr(m.n_rows + 1, 0);
  std::vector<std::size_t> col_idx;
  std::vector<Cplx> values;
  col_idx.reserve(order.size());
  values.reserve(order.size());
  std::size_t prev_row = 0;
  std::size_t prev_col = 0;
  for (std::size_t idx : order) {
    const auto& e = m.entries[idx];
    if (!values.empty() && e.row == prev_row && e.col == prev_col) {
      values.back() = cadd(values.back(), e.value);
      continue;
    }
    col_idx.push_back(e.col);
    values.push_back(e.value);
    ++row_ptr[e.row + 1];
    prev_row = e.row;
    prev_col = e.col;
  }
  std::partial_sum(row_ptr.begin(), row_ptr.end(), row_ptr.begin());
  return CsrMatrix::from_arrays(m.n_rows, m.n_cols, std::move(row_ptr), std::move(col_idx), std::move(values));
}

CooMatrix csr_to_coo(const CsrMatrix& a) {
  CooMatrix m{a.rows(), a.cols(), {}};
  m.entries.reserve(a.nnz());
  const auto ia = a.row_ptr();
  const auto ja = a.col_idx();
  const auto aa = a.values();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = ia[r]; k < ia[r + 1]; ++k) m.entries.push_back({r, ja[k], aa[k]});
  }
  return m;
}

namespace {
constexpr std::size_t kSpmvRowChunk = 2048;
}

void spmv(const CsrMatrix& a, const ZVector& x, ZVector& y) {
  if (x.size() != a.cols()) {
    throw DimensionError("spmv: x has length " + std::to_string(x.size()) + ", matrix has " +
                         std::to_string(a.cols()) + " columns");
  }
  if (y.size() != a.rows()) {
    throw DimensionError("spmv: y has length " + std::to_string(y.size()) + ", matrix has " +
                         std::to_string(a.rows()) + " rows");
  }
  const auto& k = detail::active_kernels();
  const std::size_t* ia = a.row_ptr().data();
  const std::size_t* ja = a.col_idx().data();
  const Cplx* aa = a.values().data();
  detail::for_chunks(a.rows(), kSpmvRowChunk, [&](std::size_t, std::size_t b, std::size_t e) {
    k.csr_rows(ia, ja, aa, x.data(), y.data(), b, e);
  });
}

ZVector spmv(const CsrMatrix& a, const ZVector& x) {
  ZVector y(a.rows());
  spmv(a, x, y);
  return y;
}

MatrixStats stats(const CsrMatrix& a) {
  MatrixStats s;
  s.h = a.rows();
  s.nz = a.nnz();
  if (s.h == 0) return s;
  const auto ia = a.row_ptr();
  const auto ja = a.col_idx();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    s.max_row = std::max(s.max_row, a.row_nnz(r));
    for (std::size_t k = ia[r]; k < ia[r + 1]; ++k) {
      if (ja[k] > r) s.upper_bandwidth = std::max(s.upper_bandwidth, ja[k] - r);
      if (ja[k] < r) s.lower_bandwidth = std::max(s.lower_bandwidth, r - ja[k]);
    }
  }
  s.bandwidth = std::max(s.upper_bandwidth, s.lower_bandwidth);
  const double h = static_cast<double>(s.h);
  const double nz = static_cast<double>(s.nz);
  s.density = 100.0 * nz / (h * static_cast<double>(a.cols()));
  s.nz_per_h = nz / h;
  double var = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const double d = static_cast<double>(a.row_nnz(r)) - s.nz_per_h;
    var += d * d;
  }
  s.nz_per_h_stddev = std::sqrt(var / h);
  return s;
}

}  // namespace zkrylov
