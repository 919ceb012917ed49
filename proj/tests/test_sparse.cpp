#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zkrylov/errors.hpp"
#include "zkrylov/parallel.hpp"
#include "zkrylov/sparse.hpp"

using namespace zkrylov;

namespace {

std::vector<double> real_parts(std::span<const Cplx> v) {
  std::vector<double> out;
  for (const auto& z : v) {
    REQUIRE(z.im == 0.0);
    out.push_back(z.re);
  }
  return out;
}

}  // namespace

TEST_CASE("5x5 example converts to the printed CSR arrays") {
  const CsrMatrix a = coo_to_csr(oracle::example_5x5());
  CHECK(real_parts(a.values()) == std::vector<double>{3, 14, 8, 1, 2, 6, 4, 2, -1, 9, 7});
  CHECK(a.one_based_col_idx() == std::vector<std::size_t>{1, 2, 2, 3, 1, 3, 2, 4, 5, 3, 5});
  CHECK(a.one_based_row_ptr() == std::vector<std::size_t>{1, 3, 5, 7, 10, 12});
  CHECK(a.one_based_row_ptr().back() == a.nnz() + 1);
  CHECK(a.at(3, 4) == Cplx{-1, 0});
  CHECK_FALSE(a.at(0, 4).has_value());
}

TEST_CASE("5x5 example spmv and stats") {
  const CsrMatrix a = coo_to_csr(oracle::example_5x5());
  const ZVector y = spmv(a, ZVector(5, {1, 0}));
  CHECK(y == ZVector{{17, 0}, {9, 0}, {8, 0}, {5, 0}, {16, 0}});

  const MatrixStats s = stats(a);
  CHECK(s.h == 5);
  CHECK(s.nz == 11);
  CHECK(s.density == doctest::Approx(44.0));
  CHECK(s.bandwidth == 2);
  CHECK(s.max_row == 3);
  CHECK(s.nz_per_h == doctest::Approx(2.2));
  CHECK(s.nz_per_h_stddev == doctest::Approx(0.4));
}

TEST_CASE("conversion edge cases") {
  SUBCASE("empty") {
    const CsrMatrix a = coo_to_csr(CooMatrix{3, 3, {}});
    CHECK(a.nnz() == 0);
    CHECK(std::vector<std::size_t>(a.row_ptr().begin(), a.row_ptr().end()) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(spmv(a, ZVector(3, {1, 1})) == ZVector(3));
  }
  SUBCASE("duplicates are summed") {
    CooMatrix m{2, 2, {}};
    m.add(0, 0, {1, 0});
    m.add(0, 0, {1, 0});
    const CsrMatrix a = coo_to_csr(m);
    CHECK(a.nnz() == 1);
    CHECK(a.at(0, 0) == Cplx{2, 0});
  }
  SUBCASE("cancelling duplicates stay stored") {
    CooMatrix m{2, 2, {}};
    m.add(1, 0, {1, 2});
    m.add(1, 0, {-1, -2});
    const CsrMatrix a = coo_to_csr(m);
    CHECK(a.nnz() == 1);
    CHECK(a.at(1, 0) == Cplx{0, 0});
  }
  SUBCASE("out of range") {
    CooMatrix m{2, 2, {}};
    m.add(2, 0, {1, 0});
    CHECK_THROWS_AS(coo_to_csr(m), FormatError);
  }
  SUBCASE("rectangular") {
    CooMatrix m{2, 3, {}};
    m.add(1, 2, {1, 0});
    const CsrMatrix a = coo_to_csr(m);
    CHECK(spmv(a, ZVector{{1, 0}, {1, 0}, {5, 0}}) == ZVector{{0, 0}, {5, 0}});
  }
}

TEST_CASE("from_arrays rejects broken invariants") {
  CHECK_NOTHROW(CsrMatrix::from_arrays(2, 2, {0, 1, 2}, {0, 1}, {Cplx{1}, Cplx{1}}));
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {1, 1, 2}, {0, 1}, {Cplx{1}, Cplx{1}}), FormatError);
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {0, 2, 1}, {0, 1}, {Cplx{1}, Cplx{1}}), FormatError);
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {0, 2, 2}, {1, 0}, {Cplx{1}, Cplx{1}}), FormatError);
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {0, 2, 2}, {0, 0}, {Cplx{1}, Cplx{1}}), FormatError);
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {0, 1, 2}, {0, 2}, {Cplx{1}, Cplx{1}}), FormatError);
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {0, 1, 2}, {0, 1}, {Cplx{1}}), FormatError);
  CHECK_THROWS_AS(CsrMatrix::from_arrays(2, 2, {0, 2}, {0, 1}, {Cplx{1}, Cplx{1}}), FormatError);
}

TEST_CASE("spmv dimension checks") {
  const CsrMatrix a = coo_to_csr(oracle::example_5x5());
  CHECK_THROWS_AS(spmv(a, ZVector(4)), DimensionError);
  ZVector y(3);
  CHECK_THROWS_AS(spmv(a, ZVector(5), y), DimensionError);
}

TEST_CASE("spmv matches the dense oracle on random matrices") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 20 + 7 * seed;
    const CsrMatrix a = oracle::random_sparse(n, 0.02 + 0.007 * static_cast<double>(seed), seed);
    const ZVector x = oracle::random_vector(n, seed + 1000);
    const auto ref = oracle::matvec(oracle::to_dense(a), oracle::to_std(x));
    const ZVector y = spmv(a, x);
    for (std::size_t i = 0; i < n; ++i) {
      const double err = std::hypot(y[i].re - ref[i].real(), y[i].im - ref[i].imag());
      CHECK(err <= 1e-12 * std::abs(ref[i]));
    }
  }
}

TEST_CASE("spmv is independent of the thread count") {
  const CsrMatrix a = oracle::random_sparse(5000, 0.002, 77);
  const ZVector x = oracle::random_vector(5000, 78);
  set_num_threads(1);
  const ZVector y1 = spmv(a, x);
  set_num_threads(3);
  const ZVector y3 = spmv(a, x);
  set_num_threads(1);
  CHECK(y1 == y3);
}

TEST_CASE("csr -> coo -> csr is the identity") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CsrMatrix a = oracle::random_sparse(60, 0.1, seed);
    CHECK(coo_to_csr(csr_to_coo(a)) == a);
  }
}

TEST_CASE("stats invariants on random matrices") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CsrMatrix a = oracle::random_sparse(100, 0.05, seed);
    const MatrixStats s = stats(a);
    std::size_t total = 0, widest = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      total += a.row_nnz(r);
      widest = std::max(widest, a.row_nnz(r));
    }
    CHECK(s.nz == a.nnz());
    CHECK(total == s.nz);
    CHECK(s.max_row == widest);
    CHECK(static_cast<double>(s.max_row) >= std::ceil(s.nz_per_h));
    CHECK(s.density == doctest::Approx(100.0 * static_cast<double>(s.nz) / 1e4));
    CHECK(s.bandwidth == std::max(s.upper_bandwidth, s.lower_bandwidth));
  }
}

TEST_CASE("identity and symmetric-pattern stats") {
  CooMatrix id{4, 4, {}};
  for (std::size_t i = 0; i < 4; ++i) id.add(i, i, {1, 0});
  const MatrixStats s = stats(coo_to_csr(id));
  CHECK(s.nz == 4);
  CHECK(s.max_row == 1);
  CHECK(s.bandwidth == 0);
  CHECK(s.nz_per_h_stddev == 0.0);

  CooMatrix sym{6, 6, {}};
  sym.add(0, 4, {1, 0});
  sym.add(4, 0, {2, 0});
  sym.add(2, 3, {1, 0});
  sym.add(3, 2, {1, 0});
  const MatrixStats t = stats(coo_to_csr(sym));
  CHECK(t.upper_bandwidth == 4);
  CHECK(t.lower_bandwidth == 4);
}

TEST_CASE("density and mean row density formulas reproduce the published sketches") {
  struct Row {
    double h, nz, density, nz_per_h;
  };
  const Row rows[] = {
      {1727, 16393, 0.550, 9.492},       {11637, 188455, 0.139, 16.194},  {85001, 1781707, 0.025, 20.961},
      {648849, 15444211, 0.004, 23.802}, {8439, 143889, 0.202, 17.050},   {62357, 1351521, 0.035, 21.674},
      {479169, 11616477, 0.005, 24.243}, {2717, 30969, 0.420, 11.398},    {19041, 343677, 0.095, 18.049},
      {142049, 3151773, 0.016, 22.188},
  };
  for (const auto& r : rows) {
    CHECK(std::round(1e3 * 100.0 * r.nz / (r.h * r.h)) / 1e3 == doctest::Approx(r.density));
    CHECK(std::round(1e3 * r.nz / r.h) / 1e3 == doctest::Approx(r.nz_per_h));
  }
}
