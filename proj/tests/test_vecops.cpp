#include <cmath>
#include <complex>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zkrylov/errors.hpp"
#include "zkrylov/parallel.hpp"
#include "zkrylov/vecops.hpp"

using namespace zkrylov;

TEST_CASE("small kernels against hand values") {
  ZVector x{{1, 1}, {2, -1}};
  ZVector y{{0, 1}, {3, 4}};
  CHECK(zdot(ZVector{{1, 1}, {2, 0}}, ZVector{{1, -1}, {0, 3}}, Conjugate::no) == Cplx{2, 6});
  CHECK(zdot(x, y, Conjugate::no) == Cplx{9, 6});
  // conj(1+i)*i + conj(2-i)*(3+4i) = (1+i) + (2+11i)
  CHECK(zdot(x, y, Conjugate::yes) == Cplx{3, 12});
  CHECK(znorm2(ZVector{{3, 4}}) == 5.0);

  ZVector z = y;
  zaxpy({2, 0}, x, z);
  CHECK(z == ZVector{{2, 3}, {7, 2}});
  zaxmy(x, z);
  CHECK(z == ZVector{{-1, 5}, {16, -3}});
  zscal({0, 1}, z);
  CHECK(z == ZVector{{-5, -1}, {3, 16}});
  ZVector dst(2);
  zassign(dst, x);
  CHECK(dst == x);
}

TEST_CASE("empty vectors") {
  ZVector e;
  CHECK(zdot(e, e, Conjugate::yes) == Cplx{0, 0});
  CHECK(znorm2(e) == 0.0);
  zaxpy({1, 0}, e, e);
  CHECK(e.empty());
}

TEST_CASE("length mismatch throws before writing") {
  ZVector a(3, {1, 0});
  ZVector b(4, {2, 0});
  const ZVector b_before = b;
  CHECK_THROWS_AS(zaxpy({1, 0}, a, b), DimensionError);
  CHECK_THROWS_AS(zaxmy(a, b), DimensionError);
  CHECK_THROWS_AS(zassign(b, a), DimensionError);
  CHECK_THROWS_AS(zdot(a, b, Conjugate::no), DimensionError);
  CHECK(b == b_before);
}

TEST_CASE("reduction plan validation") {
  CHECK_NOTHROW(ReductionPlan{}.validate());
  CHECK_NOTHROW((ReductionPlan{64, ReductionMode::blocked_parallel}.validate()));
  CHECK_THROWS_AS((ReductionPlan{100, ReductionMode::blocked_parallel}.validate()), ParameterError);
  CHECK_THROWS_AS((ReductionPlan{32, ReductionMode::blocked_parallel}.validate()), ParameterError);
  CHECK_THROWS_AS((ReductionPlan{1 << 17, ReductionMode::blocked_parallel}.validate()), ParameterError);
}

TEST_CASE("reductions agree with a std::complex oracle") {
  for (std::size_t n : {1u, 7u, 4095u, 4096u, 4097u, 30000u}) {
    const ZVector x = oracle::random_vector(n, n);
    const ZVector y = oracle::random_vector(n, n + 1);
    std::complex<double> ref_c = 0.0, ref_u = 0.0;
    double ref_n = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> a(x[i].re, x[i].im), b(y[i].re, y[i].im);
      ref_c += std::conj(a) * b;
      ref_u += a * b;
      ref_n += std::norm(a);
    }
    for (const ReductionPlan plan : {ReductionPlan{}, ReductionPlan::sequential(),
                                     ReductionPlan{64, ReductionMode::blocked_parallel}}) {
      const Cplx dc = zdot(x, y, Conjugate::yes, plan);
      const Cplx du = zdot(x, y, Conjugate::no, plan);
      const double scale = 1e-13 * static_cast<double>(n);
      CHECK(std::abs(std::complex<double>(dc.re, dc.im) - ref_c) <= scale);
      CHECK(std::abs(std::complex<double>(du.re, du.im) - ref_u) <= scale);
      CHECK(znorm2(x, plan) == doctest::Approx(std::sqrt(ref_n)).epsilon(1e-13));
    }
  }
}

TEST_CASE("properties: hermitian symmetry and norm consistency") {
  const ZVector x = oracle::random_vector(5000, 1);
  const ZVector y = oracle::random_vector(5000, 2);
  const Cplx xy = zdot(x, y, Conjugate::yes);
  const Cplx yx = zdot(y, x, Conjugate::yes);
  CHECK(xy.re == doctest::Approx(yx.re).epsilon(1e-13));
  CHECK(xy.im == doctest::Approx(-yx.im).epsilon(1e-13));
  const Cplx xx = zdot(x, x, Conjugate::yes);
  CHECK(std::abs(xx.im) <= 1e-12);
  CHECK(std::sqrt(xx.re) == doctest::Approx(znorm2(x)).epsilon(1e-13));
  // Cauchy-Schwarz
  CHECK(cabs(xy) <= znorm2(x) * znorm2(y));
}

TEST_CASE("blocked reductions do not depend on the thread count") {
  const ZVector x = oracle::random_vector(100000, 3);
  const ZVector y = oracle::random_vector(100000, 4);
  set_num_threads(1);
  const Cplx d1 = zdot(x, y, Conjugate::yes);
  const double n1 = znorm2(x);
  set_num_threads(4);
  const Cplx d4 = zdot(x, y, Conjugate::yes);
  const double n4 = znorm2(x);
  set_num_threads(1);
  CHECK(d1 == d4);
  CHECK(n1 == n4);
}

TEST_CASE("copying wrappers leave inputs alone") {
  const ZVector x{{1, 2}, {3, 4}};
  const ZVector y{{1, 0}, {0, 1}};
  CHECK(scaled({2, 0}, x) == ZVector{{2, 4}, {6, 8}});
  CHECK(axpy({1, 0}, x, y) == ZVector{{2, 2}, {3, 5}});
  CHECK(elementwise_product(x, y) == ZVector{{1, 2}, {-4, 3}});
  CHECK(x == ZVector{{1, 2}, {3, 4}});
}

TEST_CASE("sequential mode is a plain left-to-right loop") {
  const ZVector x = oracle::random_vector(10007, 8);
  const ZVector y = oracle::random_vector(10007, 9);
  Cplx acc{0, 0};
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = acc + conj(x[i]) * y[i];
    sq += cabs2(x[i]);
  }
  CHECK(zdot(x, y, Conjugate::yes, ReductionPlan::sequential()) == acc);
  CHECK(znorm2(x, ReductionPlan::sequential()) == std::sqrt(sq));
}

TEST_CASE("linearity in the second slot, conjugate-linearity in the first") {
  const ZVector x = oracle::random_vector(3000, 10);
  const ZVector y = oracle::random_vector(3000, 11);
  const ZVector z = oracle::random_vector(3000, 12);
  const Cplx alpha{0.7, -0.4};
  auto close = [](Cplx a, Cplx b) { return cabs(a - b) <= 1e-10 * std::max(cabs(a), cabs(b)); };

  const ZVector ay_z = axpy(alpha, y, z);
  CHECK(close(zdot(x, ay_z, Conjugate::no), alpha * zdot(x, y, Conjugate::no) + zdot(x, z, Conjugate::no)));
  const ZVector ax_z = axpy(alpha, x, z);
  CHECK(close(zdot(ax_z, y, Conjugate::yes), conj(alpha) * zdot(x, y, Conjugate::yes) + zdot(z, y, Conjugate::yes)));
}

TEST_CASE("zaxpy with alpha then -alpha restores y closely") {
  const ZVector x = oracle::random_vector(2000, 13);
  const ZVector y0 = oracle::random_vector(2000, 14);
  ZVector y = y0;
  const Cplx alpha{0.25, 0.5};
  zaxpy(alpha, x, y);
  zaxpy(-alpha, x, y);
  for (std::size_t i = 0; i < y.size(); ++i) {
    // bound: a few ulp of the intermediate magnitude
    const double tol = 8 * 2.2e-16 * (cabs(y0[i]) + cabs(alpha * x[i]));
    CHECK(std::abs(y[i].re - y0[i].re) <= tol);
    CHECK(std::abs(y[i].im - y0[i].im) <= tol);
  }
}
