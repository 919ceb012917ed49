#include "zkrylov/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <new>
#include <random>
#include <string>

#include "zkrylov/errors.hpp"
#include "zkrylov/io.hpp"

namespace zkrylov {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs `body` once untimed, then `reps` times, then keeps going until the
// measured total is at least 100 clock resolutions. Returns (runs, total ms).
template <typename Body>
std::pair<std::uint64_t, double> time_repeated(std::size_t reps, Body&& body) {
  body();
  const double floor_ms = 100.0 * clock_resolution_ms();
  std::uint64_t runs = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < reps; ++i) body();
  runs = reps;
  double total = elapsed_ms(start);
  while (total < floor_ms) {
    body();
    ++runs;
    total = elapsed_ms(start);
  }
  return {runs, total};
}

void normalize_to_unit_modulus(ZVector& v) {
  for (auto& z : v) {
    const double m = cabs(z);
    z = m > 0.0 ? cscale(1.0 / m, z) : Cplx{1.0, 0.0};
  }
}

}  // namespace

double record_gflops(std::string_view op, std::uint64_t size, double mean_time_ms) {
  const auto per_unit = FlopModel::per_unit(op);
  if (per_unit == 0) return 0.0;
  return gflops(per_unit, size, mean_time_ms);
}

ZVector random_zvector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ZVector v(n);
  for (auto& z : v) {
    const double re = unit(rng);
    const double im = unit(rng);
    z = {re, im};
  }
  return v;
}

double clock_resolution_ms() {
  static const double resolution = [] {
    auto best = Clock::duration::max();
    for (int i = 0; i < 16; ++i) {
      const auto t0 = Clock::now();
      auto t1 = Clock::now();
      while (t1 == t0) t1 = Clock::now();
      best = std::min(best, t1 - t0);
    }
    return std::chrono::duration<double, std::milli>(best).count();
  }();
  return resolution;
}

BenchRecord bench_kernel(std::string_view op, std::size_t h, std::size_t reps, std::uint64_t seed) {
  if (std::find(std::begin(kKernelOps), std::end(kKernelOps), op) == std::end(kKernelOps)) {
    throw ParameterError("unknown kernel '" + std::string(op) + "'");
  }
  if (h == 0) throw ParameterError("kernel size must be at least 1");
  if (reps == 0) throw ParameterError("repetitions must be at least 1");

  ZVector x, y;
  try {
    x = random_zvector(h, seed);
    y = random_zvector(h, seed + 1);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate two complex vectors of length " + std::to_string(h));
  }
  // Multiplicative in-place kernels use unit-modulus factors so repeated
  // application neither overflows nor drifts into subnormals.
  Cplx alpha = random_zvector(1, seed + 2)[0];
  if (op == "zscal") alpha = cscale(1.0 / cabs(alpha), alpha);
  if (op == "zaxmy") normalize_to_unit_modulus(x);

  volatile double sink = 0.0;
  std::pair<std::uint64_t, double> timing;
  if (op == "zassign") {
    timing = time_repeated(reps, [&] { zassign(y, x); });
  } else if (op == "zscal") {
    timing = time_repeated(reps, [&] { zscal(alpha, x); });
  } else if (op == "zaxpy") {
    timing = time_repeated(reps, [&] { zaxpy(alpha, x, y); });
  } else if (op == "zaxmy") {
    timing = time_repeated(reps, [&] { zaxmy(x, y); });
  } else if (op == "zdot") {
    timing = time_repeated(reps, [&] { sink = sink + zdot(x, y, Conjugate::yes).re; });
  } else {
    timing = time_repeated(reps, [&] { sink = sink + znorm2(x); });
  }

  BenchRecord rec;
  rec.op = std::string(op);
  rec.size = h;
  rec.reps = timing.first;
  rec.mean_time_ms = timing.second / static_cast<double>(timing.first);
  rec.gflops = record_gflops(rec.op, rec.size, rec.mean_time_ms);
  rec.reference_ms = reference_cpu_ms(rec.op, rec.size);
  return rec;
}

BenchRecord bench_spmv(const CsrMatrix& a, std::size_t reps, std::uint64_t seed) {
  if (reps == 0) throw ParameterError("repetitions must be at least 1");
  const ZVector x = random_zvector(a.cols(), seed);
  ZVector y(a.rows());
  const auto timing = time_repeated(reps, [&] { spmv(a, x, y); });

  BenchRecord rec;
  rec.op = "spmv";
  rec.size = a.nnz();
  rec.reps = timing.first;
  rec.mean_time_ms = timing.second / static_cast<double>(timing.first);
  rec.gflops = record_gflops(rec.op, rec.size, rec.mean_time_ms);
  rec.reference_ms = reference_cpu_ms(rec.op, rec.size);
  return rec;
}

BenchRecord bench_spmv(const std::filesystem::path& matrix_path, std::size_t reps, std::uint64_t seed) {
  return bench_spmv(load_matrix(matrix_path), reps, seed);
}

BenchRecord bench_solver(const CsrMatrix& a, const ZVector& b, Method method, const Preconditioner& m,
                         const SolverConfig& cfg) {
  BenchRecord rec;
  rec.op = std::string(to_string(method));
  if (method == Method::bicgstab_l) rec.op += "(" + std::to_string(cfg.l) + ")";
  rec.size = a.rows();
  rec.reps = 1;
  const auto start = Clock::now();
  try {
    const SolveResult result = solve(method, a, b, m, cfg);
    rec.mean_time_ms = elapsed_ms(start);
    rec.iterations = result.report.iterations;
    rec.residual = result.report.final_relative_residual;
    rec.converged = result.report.converged;
  } catch (const BreakdownError& e) {
    rec.mean_time_ms = elapsed_ms(start);
    rec.iterations = e.report().iterations;
    rec.residual = e.report().final_relative_residual;
    rec.converged = false;
    rec.note = e.what();
  }
  rec.gflops = record_gflops(rec.op, rec.size, rec.mean_time_ms);
  return rec;
}

}  // namespace zkrylov
