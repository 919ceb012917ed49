#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "doctest.h"
#include "zkrylov/cnum.hpp"

using namespace zkrylov;

TEST_CASE("complex products match hand values") {
  CHECK(cmul({2, 3}, {4, -5}) == Cplx{23, 2});
  CHECK(cmul({2, -1}, {3, 4}) == Cplx{10, 5});
  CHECK(Cplx{1, 2} + Cplx{3, -4} == Cplx{4, -2});
  CHECK(Cplx{1, 2} - Cplx{3, -4} == Cplx{-2, 6});
  CHECK(conj({1.5, -2}) == Cplx{1.5, 2});
  CHECK(cabs2({3, 4}) == 25.0);
  CHECK(cabs({3, 4}) == 5.0);
  CHECK(2.0 * Cplx{1, -1} == Cplx{2, -2});
  CHECK(cmul({0, 1}, {0, 1}) == Cplx{-1, 0});
}

TEST_CASE("multiplication agrees with std::complex bit for bit on finite inputs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const Cplx a{u(rng), u(rng)};
    const Cplx b{u(rng), u(rng)};
    const std::complex<double> ref = std::complex<double>(a.re, a.im) * std::complex<double>(b.re, b.im);
    const Cplx p = a * b;
    CHECK(p.re == ref.real());
    CHECK(p.im == ref.imag());
  }
}

TEST_CASE("Smith division is accurate and avoids overflow") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 500; ++i) {
    const Cplx a{u(rng), u(rng)};
    const Cplx b{u(rng), u(rng)};
    const Cplx q = a / b;
    const Cplx back = q * b;
    CHECK(std::abs(back.re - a.re) <= 1e-12 * (1 + cabs(a)));
    CHECK(std::abs(back.im - a.im) <= 1e-12 * (1 + cabs(a)));
  }
  // |b|^2 overflows double but the quotient is representable.
  const Cplx big{1e300, 1e300};
  const Cplx q = big / big;
  CHECK(q.re == doctest::Approx(1.0));
  CHECK(q.im == doctest::Approx(0.0));
  CHECK(Cplx{1, 0} / Cplx{0, 2} == Cplx{0, -0.5});
}

TEST_CASE("division by zero follows IEEE") {
  const Cplx q = Cplx{1, 0} / Cplx{0, 0};
  CHECK_FALSE(is_finite(q));
  CHECK(is_finite(Cplx{1, 2}));
  CHECK_FALSE(is_finite(Cplx{std::numeric_limits<double>::quiet_NaN(), 0}));
}

TEST_CASE("flop model counts and Gflops identity") {
  CHECK(FlopModel::per_unit("zassign") == 1);
  CHECK(FlopModel::per_unit("zscal") == 6);
  CHECK(FlopModel::per_unit("zaxpy") == 8);
  CHECK(FlopModel::per_unit("zaxmy") == 6);
  CHECK(FlopModel::per_unit("zdot") == 8);
  CHECK(FlopModel::per_unit("znorm") == 5);
  CHECK(FlopModel::per_unit("spmv") == 8);
  CHECK(FlopModel::per_unit("tfqmr") == 0);
  // 8 flops x 1e6 elements in 8.33 ms
  CHECK(gflops(8, 1000000, 8.33) == doctest::Approx(0.9604).epsilon(1e-3));
  static_assert(gflops(1, 1000, 1.0) == 1e-3);
}
