// AVX2 variants. Compiled with -mavx2 only (no FMA) and -ffp-contract=off so
// that every complex product rounds exactly like cmul(): the addsub
// instruction yields (ar*xr - ai*xi, ar*xi + ai*xr) per lane pair.

#include <immintrin.h>

#include "simd/kernels.hpp"

namespace zkrylov::detail {
namespace {

inline const double* as_doubles(const Cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Cplx* p) { return reinterpret_cast<double*>(p); }

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d cmul_pd(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0b1111);
  const __m256d b_swap = _mm256_permute_pd(b, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(a_re, b), _mm256_mul_pd(a_im, b_swap));
}

void assign(const Cplx* src, Cplx* dst, std::size_t n) {
  const double* s = as_doubles(src);
  double* d = as_doubles(dst);
  const std::size_t len = 2 * n;
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    _mm256_storeu_pd(d + i, _mm256_loadu_pd(s + i));
    _mm256_storeu_pd(d + i + 4, _mm256_loadu_pd(s + i + 4));
  }
  for (; i < len; ++i) d[i] = s[i];
}

void scal(Cplx alpha, Cplx* x, std::size_t n) {
  double* p = as_doubles(x);
  const __m256d a_re = _mm256_set1_pd(alpha.re);
  const __m256d a_im = _mm256_set1_pd(alpha.im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    const __m256d v_swap = _mm256_permute_pd(v, 0b0101);
    _mm256_storeu_pd(p + 2 * i, _mm256_addsub_pd(_mm256_mul_pd(a_re, v), _mm256_mul_pd(a_im, v_swap)));
  }
  for (; i < n; ++i) x[i] = cmul(alpha, x[i]);
}

void axpy(Cplx alpha, const Cplx* x, Cplx* y, std::size_t n) {
  const double* px = as_doubles(x);
  double* py = as_doubles(y);
  const __m256d a_re = _mm256_set1_pd(alpha.re);
  const __m256d a_im = _mm256_set1_pd(alpha.im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    const __m256d v_swap = _mm256_permute_pd(v, 0b0101);
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(a_re, v), _mm256_mul_pd(a_im, v_swap));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(prod, _mm256_loadu_pd(py + 2 * i)));
  }
  for (; i < n; ++i) y[i] = cadd(cmul(alpha, x[i]), y[i]);
}

void axmy(const Cplx* x, Cplx* y, std::size_t n) {
  const double* px = as_doubles(x);
  double* py = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(py + 2 * i, cmul_pd(_mm256_loadu_pd(px + 2 * i), _mm256_loadu_pd(py + 2 * i)));
  }
  for (; i < n; ++i) y[i] = cmul(x[i], y[i]);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Accumulates sum(x_re * y) and sum(x_im * swap(y)) separately and combines
// them once at the end; the sign pattern decides conjugation.
Cplx dot(const Cplx* x, const Cplx* y, std::size_t n, bool conjugate) {
  const double* px = as_doubles(x);
  const double* py = as_doubles(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d a = _mm256_loadu_pd(px + 2 * i);
    const __m256d b = _mm256_loadu_pd(py + 2 * i);
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(_mm256_movedup_pd(a), b));
    acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(_mm256_permute_pd(a, 0b1111), _mm256_permute_pd(b, 0b0101)));
  }
  alignas(32) double r[4];
  alignas(32) double m[4];
  _mm256_store_pd(r, acc_re);  // [xr*yr, xr*yi, ...]
  _mm256_store_pd(m, acc_im);  // [xi*yi, xi*yr, ...]
  Cplx sum = conjugate ? Cplx{(r[0] + r[2]) + (m[0] + m[2]), (r[1] + r[3]) - (m[1] + m[3])}
                       : Cplx{(r[0] + r[2]) - (m[0] + m[2]), (r[1] + r[3]) + (m[1] + m[3])};
  for (; i < n; ++i) sum = cadd(sum, cmul(conjugate ? conj(x[i]) : x[i], y[i]));
  return sum;
}

double sumsq(const Cplx* x, std::size_t n) {
  const double* p = as_doubles(x);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d a = _mm256_loadu_pd(p + i);
    const __m256d b = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, a));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(b, b));
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) sum += p[i] * p[i];
  return sum;
}

// One complex multiply-accumulate per nonzero in a 128-bit register. The
// summation order along the row is the scalar one, so results match bit for
// bit.
void csr_rows(const std::size_t* ia, const std::size_t* ja, const Cplx* aa, const Cplx* x, Cplx* y,
              std::size_t row_begin, std::size_t row_end) {
  const double* pa = as_doubles(aa);
  const double* px = as_doubles(x);
  for (std::size_t r = row_begin; r < row_end; ++r) {
    __m128d acc = _mm_setzero_pd();
    for (std::size_t k = ia[r]; k < ia[r + 1]; ++k) {
      const __m128d a = _mm_loadu_pd(pa + 2 * k);
      const __m128d v = _mm_loadu_pd(px + 2 * ja[k]);
      const __m128d prod = _mm_addsub_pd(_mm_mul_pd(_mm_movedup_pd(a), v),
                                         _mm_mul_pd(_mm_unpackhi_pd(a, a), _mm_shuffle_pd(v, v, 0b01)));
      acc = _mm_add_pd(acc, prod);
    }
    _mm_storeu_pd(as_doubles(y + r), acc);
  }
}

constexpr KernelTable kTable{assign, scal, axpy, axmy, dot, sumsq, csr_rows};

}  // namespace

const KernelTable& avx2_kernels() { return kTable; }

}  // namespace zkrylov::detail
