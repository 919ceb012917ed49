#include <cmath>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zkrylov/bench.hpp"
#include "zkrylov/errors.hpp"
#include "zkrylov/helmholtz.hpp"

using namespace zkrylov;

TEST_CASE("kernel records satisfy the Gflops identity") {
  for (auto op : kKernelOps) {
    const BenchRecord r = bench_kernel(op, 2000, 5);
    CHECK(r.op == op);
    CHECK(r.size == 2000);
    CHECK(r.reps >= 5);
    CHECK(r.mean_time_ms > 0.0);
    CHECK(r.gflops == record_gflops(r.op, r.size, r.mean_time_ms));
    CHECK(std::isfinite(r.gflops));
  }
  const BenchRecord tiny = bench_kernel("zassign", 1, 100);
  CHECK(tiny.mean_time_ms > 0.0);
  CHECK(std::isfinite(tiny.gflops));
  // Short runs are extended past 100 clock ticks.
  CHECK(tiny.mean_time_ms * static_cast<double>(tiny.reps) >= 100.0 * clock_resolution_ms());
}

TEST_CASE("kernel argument checks") {
  CHECK_THROWS_AS(bench_kernel("zgemm", 10, 1), ParameterError);
  CHECK_THROWS_AS(bench_kernel("zaxpy", 0, 1), ParameterError);
}

TEST_CASE("tabulated sizes carry the reference time") {
  CHECK(reference_cpu_ms("zaxpy", 1000000) == 8.33);
  CHECK(reference_cpu_ms("spmv", 3151773) == 36.67);
  CHECK_FALSE(reference_cpu_ms("zaxpy", 12345).has_value());
  CHECK(reference_kernel_rows().size() == 36);
}

TEST_CASE("flop model reproduces the reference Gflops columns") {
  const FlopModelCheck c = check_flop_model(0.05);
  CHECK(c.cells == 36);
  CHECK(c.within_tolerance >= 30);
}

TEST_CASE("random vectors are seeded") {
  CHECK(random_zvector(100, 42) == random_zvector(100, 42));
  CHECK_FALSE(random_zvector(100, 42) == random_zvector(100, 43));
  for (const auto& z : random_zvector(1000, 1)) {
    CHECK(z.re >= 0.0);
    CHECK(z.re < 1.0);
    CHECK(z.im >= 0.0);
    CHECK(z.im < 1.0);
  }
}

TEST_CASE("spmv record size is the nonzero count") {
  HelmholtzProblem p;
  p.cells_per_axis = 9;
  const auto sys = assemble(p);
  const BenchRecord r = bench_spmv(sys.matrix, 10);
  CHECK(r.op == "spmv");
  CHECK(r.size == stats(sys.matrix).nz);
  CHECK(r.gflops == record_gflops("spmv", r.size, r.mean_time_ms));
}

TEST_CASE("solver records") {
  HelmholtzProblem p;
  p.cells_per_axis = 9;
  const auto sys = assemble(p);
  for (Method m : {Method::bicgstab, Method::bicgstab_l, Method::tfqmr}) {
    const BenchRecord r = bench_solver(sys.matrix, sys.rhs, m, build_jacobi(sys.matrix), {});
    CHECK(r.converged == true);
    CHECK(r.iterations.has_value());
    CHECK(*r.residual <= 1e-9);
    CHECK(r.reps == 1);
    CHECK(r.note.empty());
  }
  CooMatrix id{3, 3, {}};
  for (std::size_t i = 0; i < 3; ++i) id.add(i, i, {1, 0});
  const BenchRecord r = bench_solver(coo_to_csr(id), ZVector(3, {1, 1}), Method::tfqmr,
                                     Preconditioner::identity(), {});
  CHECK(r.iterations == 1u);
  CHECK(r.converged == true);
}

TEST_CASE("breakdown is reported in the record") {
  CooMatrix m{2, 2, {}};
  m.add(0, 1, {1, 0});
  m.add(1, 0, {1, 0});
  const BenchRecord r =
      bench_solver(coo_to_csr(m), ZVector{{1, 0}, {0, 0}}, Method::bicgstab, Preconditioner::identity(), {});
  CHECK(r.converged == false);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("csv report") {
  std::ostringstream empty;
  emit_report({}, ReportFormat::csv, empty);
  CHECK(empty.str() == "op,size,reps,time_ms,gflops,iterations,residual,converged\n");

  BenchRecord k{"zaxpy", 1000000, 100, 8.3300000000000001, 0.96038415366146457, {}, {}, {}, 8.33, ""};
  BenchRecord s{"tfqmr", 512, 1, 0.77, 0.0, 15u, 5.654e-10, true, {}, ""};
  const std::vector<BenchRecord> records{k, s};
  std::ostringstream out;
  emit_report(records, ReportFormat::csv, out);
  std::istringstream lines(out.str());
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 3);

  std::istringstream in(out.str());
  const auto back = parse_csv_report(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].op == k.op);
  CHECK(back[0].size == k.size);
  CHECK(back[0].mean_time_ms == k.mean_time_ms);
  CHECK(back[0].gflops == k.gflops);
  CHECK_FALSE(back[0].iterations.has_value());
  CHECK(back[1].iterations == 15u);
  CHECK(back[1].residual == 5.654e-10);
  CHECK(back[1].converged == true);

  std::istringstream bad("op,size\n");
  CHECK_THROWS_AS(parse_csv_report(bad), ParseError);
}

TEST_CASE("markdown report") {
  BenchRecord k{"zaxpy", 1000000, 100, 8.0, 1.0, {}, {}, {}, 8.33, ""};
  std::ostringstream out;
  emit_report(std::vector<BenchRecord>{k}, ReportFormat::markdown, out);
  const std::string text = out.str();
  CHECK(text.find("| op | h |") == 0);
  CHECK(text.find("| zaxpy | 1000000 | 100 | 8.0000 | 1.000 | 8.33 |") != std::string::npos);
  CHECK(parse_report_format("md") == ReportFormat::markdown);
  CHECK_FALSE(parse_report_format("xml").has_value());
}
