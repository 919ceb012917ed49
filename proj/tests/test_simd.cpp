// Every vectorized kernel against the scalar reference, on lengths that
// exercise the odd-element tail.

#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zkrylov/simd.hpp"
#include "zkrylov/sparse.hpp"
#include "zkrylov/vecops.hpp"

using namespace zkrylov;

namespace {

template <typename F>
auto under(Isa isa, F&& f) {
  ScopedIsa guard(isa);
  return f();
}

}  // namespace

TEST_CASE("isa names") {
  CHECK(parse_isa("scalar") == Isa::scalar);
  CHECK(parse_isa("avx2") == Isa::avx2);
  CHECK_FALSE(parse_isa("neon").has_value());
  CHECK(to_string(Isa::avx2) == "avx2");
  CHECK(isa_supported(Isa::scalar));
  CHECK(isa_supported(best_isa()));
}

TEST_CASE("scoped isa restores the previous selection") {
  const Isa before = active_isa();
  {
    ScopedIsa s(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
  }
  CHECK(active_isa() == before);
}

TEST_CASE("vector kernels are equivalent across ISAs") {
  if (!isa_supported(Isa::avx2)) {
    MESSAGE("avx2 not available; only the scalar path is exercised");
    return;
  }
  for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 1000u, 65537u}) {
    CAPTURE(n);
    const ZVector x = oracle::random_vector(n, 100 + n);
    const ZVector y = oracle::random_vector(n, 200 + n);
    const Cplx alpha{0.3, -1.7};

    auto run_elementwise = [&] {
      ZVector a(n), s = x, p = y, m = y;
      zassign(a, x);
      zscal(alpha, s);
      zaxpy(alpha, x, p);
      zaxmy(x, m);
      return std::vector<ZVector>{a, s, p, m};
    };
    // Same operation order in both variants: bit-identical.
    CHECK(under(Isa::scalar, run_elementwise) == under(Isa::avx2, run_elementwise));

    for (Conjugate c : {Conjugate::no, Conjugate::yes}) {
      const Cplx ds = under(Isa::scalar, [&] { return zdot(x, y, c); });
      const Cplx dv = under(Isa::avx2, [&] { return zdot(x, y, c); });
      CHECK(std::abs(ds.re - dv.re) <= 1e-14 * (1.0 + static_cast<double>(n)));
      CHECK(std::abs(ds.im - dv.im) <= 1e-14 * (1.0 + static_cast<double>(n)));
    }
    const double ns = under(Isa::scalar, [&] { return znorm2(x); });
    const double nv = under(Isa::avx2, [&] { return znorm2(x); });
    CHECK(std::abs(ns - nv) <= 1e-14 * (1.0 + ns));
  }
}

TEST_CASE("spmv is bit-identical across ISAs") {
  if (!isa_supported(Isa::avx2)) return;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CsrMatrix a = oracle::random_sparse(150 + seed, 0.1, seed);
    const ZVector x = oracle::random_vector(a.cols(), seed);
    CHECK(under(Isa::scalar, [&] { return spmv(a, x); }) == under(Isa::avx2, [&] { return spmv(a, x); }));
  }
}

TEST_CASE("sequential reductions ignore the ISA") {
  if (!isa_supported(Isa::avx2)) return;
  const ZVector x = oracle::random_vector(9999, 5);
  const ZVector y = oracle::random_vector(9999, 6);
  const auto plan = ReductionPlan::sequential();
  CHECK(under(Isa::scalar, [&] { return zdot(x, y, Conjugate::yes, plan); }) ==
        under(Isa::avx2, [&] { return zdot(x, y, Conjugate::yes, plan); }));
  CHECK(under(Isa::scalar, [&] { return znorm2(x, plan); }) == under(Isa::avx2, [&] { return znorm2(x, plan); }));
}
