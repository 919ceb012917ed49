#pragma once

// Complex double-precision scalar and the real-flop accounting model.
//
// Cplx is a plain pair of doubles (real part first) so that arrays of Cplx
// can be handed to SIMD kernels and binary files without conversion.

#include <cmath>
#include <cstdint>
#include <string_view>
#include <type_traits>

namespace zkrylov {

struct Cplx {
  double re = 0.0;
  double im = 0.0;

  constexpr Cplx() = default;
  constexpr Cplx(double r, double i = 0.0) : re(r), im(i) {}

  friend constexpr bool operator==(const Cplx&, const Cplx&) = default;
};

static_assert(sizeof(Cplx) == 2 * sizeof(double), "Cplx must not be padded");
static_assert(std::is_trivially_copyable_v<Cplx>);
static_assert(std::is_standard_layout_v<Cplx>);

constexpr Cplx cadd(Cplx a, Cplx b) { return {a.re + b.re, a.im + b.im}; }
constexpr Cplx csub(Cplx a, Cplx b) { return {a.re - b.re, a.im - b.im}; }

// 6 real flops. The imaginary part is written ar*bi + ai*br; SIMD kernels
// reproduce exactly this rounding sequence.
constexpr Cplx cmul(Cplx a, Cplx b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

constexpr Cplx conj(Cplx a) { return {a.re, -a.im}; }
constexpr Cplx cneg(Cplx a) { return {-a.re, -a.im}; }
constexpr double cabs2(Cplx a) { return a.re * a.re + a.im * a.im; }
inline double cabs(Cplx a) { return std::hypot(a.re, a.im); }
constexpr Cplx cscale(double s, Cplx a) { return {s * a.re, s * a.im}; }

/// Smith's algorithm: scales by the larger denominator component so that
/// |b|^2 is never formed.
constexpr Cplx cdiv(Cplx a, Cplx b) {
  const double br = b.re < 0 ? -b.re : b.re;
  const double bi = b.im < 0 ? -b.im : b.im;
  if (br >= bi) {
    if (br == 0.0 && bi == 0.0) {
      return {a.re / br, a.im / br};  // IEEE inf/nan propagation
    }
    const double r = b.im / b.re;
    const double den = b.re + b.im * r;
    return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
  }
  const double r = b.re / b.im;
  const double den = b.re * r + b.im;
  return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
}

constexpr Cplx operator+(Cplx a, Cplx b) { return cadd(a, b); }
constexpr Cplx operator-(Cplx a, Cplx b) { return csub(a, b); }
constexpr Cplx operator-(Cplx a) { return cneg(a); }
constexpr Cplx operator*(Cplx a, Cplx b) { return cmul(a, b); }
constexpr Cplx operator/(Cplx a, Cplx b) { return cdiv(a, b); }
constexpr Cplx operator*(double s, Cplx a) { return cscale(s, a); }

inline bool is_finite(Cplx a) { return std::isfinite(a.re) && std::isfinite(a.im); }

/// Real flops charged per element (per nonzero for SpMV). A complex multiply
/// is 6 flops and a complex add 2.
struct FlopModel {
  static constexpr std::uint64_t assign = 1;
  static constexpr std::uint64_t scal = 6;
  static constexpr std::uint64_t axpy = 8;
  static constexpr std::uint64_t axmy = 6;
  static constexpr std::uint64_t dot = 8;
  static constexpr std::uint64_t norm2 = 5;
  static constexpr std::uint64_t spmv_per_nz = 8;

  /// Per-unit count for an operation name ("zaxpy", "spmv", ...). Solver
  /// names and unknown names return 0.
  static constexpr std::uint64_t per_unit(std::string_view op) {
    if (op == "zassign") return assign;
    if (op == "zscal") return scal;
    if (op == "zaxpy") return axpy;
    if (op == "zaxmy") return axmy;
    if (op == "zdot") return dot;
    if (op == "znorm") return norm2;
    if (op == "spmv") return spmv_per_nz;
    return 0;
  }
};

/// Gflops for `per_unit * size` flops executed in `time_ms` milliseconds.
constexpr double gflops(std::uint64_t per_unit, std::uint64_t size, double time_ms) {
  return static_cast<double>(per_unit) * static_cast<double>(size) / (time_ms * 1e6);
}

}  // namespace zkrylov
