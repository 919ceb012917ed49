// Scalar reference kernels. Every vectorized variant is tested against these.

#include "simd/kernels.hpp"

namespace zkrylov::detail {
namespace {

void assign(const Cplx* src, Cplx* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i];
}

void scal(Cplx alpha, Cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = cmul(alpha, x[i]);
}

void axpy(Cplx alpha, const Cplx* x, Cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = cadd(cmul(alpha, x[i]), y[i]);
}

void axmy(const Cplx* x, Cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = cmul(x[i], y[i]);
}

Cplx dot(const Cplx* x, const Cplx* y, std::size_t n, bool conjugate) {
  Cplx sum{};
  if (conjugate) {
    for (std::size_t i = 0; i < n; ++i) sum = cadd(sum, cmul(conj(x[i]), y[i]));
  } else {
    for (std::size_t i = 0; i < n; ++i) sum = cadd(sum, cmul(x[i], y[i]));
  }
  return sum;
}

double sumsq(const Cplx* x, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += cabs2(x[i]);
  return sum;
}

void csr_rows(const std::size_t* ia, const std::size_t* ja, const Cplx* aa, const Cplx* x, Cplx* y,
              std::size_t row_begin, std::size_t row_end) {
  for (std::size_t r = row_begin; r < row_end; ++r) {
    Cplx acc{};
    for (std::size_t k = ia[r]; k < ia[r + 1]; ++k) acc = cadd(acc, cmul(aa[k], x[ja[k]]));
    y[r] = acc;
  }
}

constexpr KernelTable kTable{assign, scal, axpy, axmy, dot, sumsq, csr_rows};

}  // namespace

const KernelTable& scalar_kernels() { return kTable; }

}  // namespace zkrylov::detail
