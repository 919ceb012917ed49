#pragma once

// Raw-pointer kernel table shared by the scalar and vectorized variants.
// Callers have already validated lengths.

#include <cstddef>

#include "zkrylov/cnum.hpp"
#include "zkrylov/simd.hpp"

namespace zkrylov::detail {

struct KernelTable {
  void (*assign)(const Cplx* src, Cplx* dst, std::size_t n);
  void (*scal)(Cplx alpha, Cplx* x, std::size_t n);
  void (*axpy)(Cplx alpha, const Cplx* x, Cplx* y, std::size_t n);
  void (*axmy)(const Cplx* x, Cplx* y, std::size_t n);
  Cplx (*dot)(const Cplx* x, const Cplx* y, std::size_t n, bool conjugate);
  double (*sumsq)(const Cplx* x, std::size_t n);
  // y[r] = sum_{k in [ia[r], ia[r+1])} aa[k] * x[ja[k]] for r in [row_begin, row_end),
  // accumulated left to right from (0,0).
  void (*csr_rows)(const std::size_t* ia, const std::size_t* ja, const Cplx* aa, const Cplx* x,
                   Cplx* y, std::size_t row_begin, std::size_t row_end);
};

const KernelTable& scalar_kernels();
#if defined(ZKRYLOV_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

const KernelTable& kernels_for(Isa isa);
const KernelTable& active_kernels();

}  // namespace zkrylov::detail
