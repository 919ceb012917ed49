#pragma once

// Benchmark harness: repeated, averaged kernel timings reported as
// milliseconds and Gflops, plus single timed solver runs.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zkrylov/krylov.hpp"
#include "zkrylov/sparse.hpp"
#include "zkrylov/vecops.hpp"

namespace zkrylov {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct BenchRecord {
  std::string op;
  std::uint64_t size = 0;  // h for vector kernels and solvers, nz for SpMV
  std::uint64_t reps = 0;
  double mean_time_ms = 0.0;
  double gflops = 0.0;
  std::optional<std::uint64_t> iterations;
  std::optional<double> residual;
  std::optional<bool> converged;
  std::optional<double> reference_ms;  // reference CPU time for this op and size, when tabulated
  std::string note;                    // e.g. breakdown message

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Flop-model Gflops for a record's (op, size, mean_time_ms). Solver records
/// carry no flop count and get 0.
double record_gflops(std::string_view op, std::uint64_t size, double mean_time_ms);

/// Uniform entries in the unit square [0,1) x [0,1), deterministic for a seed.
ZVector random_zvector(std::size_t n, std::uint64_t seed);

/// Smallest observable positive step of the monotonic clock, in ms.
double clock_resolution_ms();

inline constexpr std::string_view kKernelOps[] = {"zassign", "zscal", "zaxpy", "zaxmy", "zdot", "znorm"};

/// One untimed warm-up run, then at least `reps` timed runs, extended until
/// the total exceeds 100 clock resolutions. Throws ParameterError for an
/// unknown op or h == 0, ResourceError when the vectors cannot be allocated.
BenchRecord bench_kernel(std::string_view op, std::size_t h, std::size_t reps, std::uint64_t seed = kDefaultSeed);

BenchRecord bench_spmv(const CsrMatrix& a, std::size_t reps, std::uint64_t seed = kDefaultSeed);
BenchRecord bench_spmv(const std::filesystem::path& matrix_path, std::size_t reps,
                       std::uint64_t seed = kDefaultSeed);

/// Single timed solve. A breakdown is reported in the record (converged =
/// false, note set) rather than thrown.
BenchRecord bench_solver(const CsrMatrix& a, const ZVector& b, Method method, const Preconditioner& m,
                         const SolverConfig& cfg);

enum class ReportFormat { csv, markdown };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// CSV columns: op,size,reps,time_ms,gflops,iterations,residual,converged.
/// Markdown is one table in the h / time / Gflops layout with a reference
/// column for tabulated sizes.
void emit_report(std::span<const BenchRecord> records, ReportFormat format, std::ostream& out);

/// Inverse of the CSV writer (op, size, reps, time, gflops, iterations,
/// residual and converged fields).
std::vector<BenchRecord> parse_csv_report(std::istream& in);

// Reference CPU measurements for the level-1 kernels and CSR SpMV.

struct ReferenceKernelRow {
  std::string_view op;
  std::uint64_t h;
  double cpu_ms;
  double cpu_gflops;
};

struct ReferenceSpmvRow {
  std::string_view problem;
  std::uint64_t nz;
  double cpu_ms;
  double cpu_gflops;
};

std::span<const ReferenceKernelRow> reference_kernel_rows();
std::span<const ReferenceSpmvRow> reference_spmv_rows();

std::optional<double> reference_cpu_ms(std::string_view op, std::uint64_t size);

struct FlopModelCheck {
  std::size_t cells = 0;
  std::size_t within_tolerance = 0;
  double worst_relative_error = 0.0;
};

/// Recomputes the Gflops column of every reference kernel row from
/// (h, time) with the flop model and counts matches within `rel_tol`.
FlopModelCheck check_flop_model(double rel_tol = 0.05);

}  // namespace zkrylov
