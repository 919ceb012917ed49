// CPU columns of the published level-1 and SpMV benchmark tables (Intel Core
// i7 920, complex double precision). Used as annotations and by the
// flop-model consistency check; they are not timing targets.

#include <cmath>

#include "zkrylov/bench.hpp"

namespace zkrylov {
namespace {

constexpr ReferenceKernelRow kKernelRows[] = {
    {"zassign", 100000, 0.10, 0.96},   {"zassign", 500000, 0.75, 0.67},   {"zassign", 1000000, 2.04, 0.49},
    {"zassign", 8000000, 15.71, 0.51}, {"zassign", 10000000, 20.00, 0.50}, {"zassign", 15000000, 27.50, 0.55},

    {"zscal", 100000, 0.81, 0.74},     {"zscal", 500000, 4.17, 0.72},     {"zscal", 1000000, 8.33, 0.72},
    {"zscal", 8000000, 65.00, 0.74},   {"zscal", 10000000, 85.00, 0.71},  {"zscal", 15000000, 120.00, 0.75},

    {"zaxpy", 100000, 0.83, 0.97},     {"zaxpy", 500000, 4.17, 0.96},     {"zaxpy", 1000000, 8.33, 0.96},
    {"zaxpy", 8000000, 65.00, 0.98},   {"zaxpy", 10000000, 85.00, 0.94},  {"zaxpy", 15000000, 130.00, 0.92},

    {"zaxmy", 100000, 1.37, 0.44},     {"zaxmy", 500000, 6.25, 0.48},     {"zaxmy", 1000000, 13.75, 0.44},
    {"zaxmy", 8000000, 100.00, 0.48},  {"zaxmy", 10000000, 130.00, 0.46}, {"zaxmy", 15000000, 190.00, 0.47},

    {"zdot", 100000, 0.88, 0.91},      {"zdot", 500000, 4.55, 0.88},      {"zdot", 1000000, 9.09, 0.88},
    {"zdot", 8000000, 70.00, 0.91},    {"zdot", 10000000, 90.00, 0.89},   {"zdot", 15000000, 130.00, 0.92},

    {"znorm", 100000, 1.72, 0.29},     {"znorm", 500000, 7.69, 0.33},     {"znorm", 1000000, 16.67, 0.30},
    {"znorm", 8000000, 140.00, 0.29},  {"znorm", 10000000, 170.00, 0.29}, {"znorm", 15000000, 260.00, 0.29},
};

// nz taken from the matrix sketches; the smallest Audi matrix has no
// published dimensions and is omitted.
constexpr ReferenceSpmvRow kSpmvRows[] = {
    {"Audi3D-1", 16393, 0.20, 0.67},        {"Audi3D-2", 188455, 2.22, 0.68},
    {"Audi3D-3", 1781707, 20.00, 0.71},     {"Audi3D-4", 15444211, 180.00, 0.69},
    {"Twingo3D-0", 143889, 1.67, 0.69},     {"Twingo3D-1", 1351521, 15.71, 0.69},
    {"Twingo3D-2", 11616477, 140.00, 0.66}, {"Cylinder3D-0", 30969, 0.37, 0.67},
    {"Cylinder3D-1", 343677, 3.70, 0.74},   {"Cylinder3D-2", 3151773, 36.67, 0.69},
};

}  // namespace

std::span<const ReferenceKernelRow> reference_kernel_rows() { return kKernelRows; }
std::span<const ReferenceSpmvRow> reference_spmv_rows() { return kSpmvRows; }

std::optional<double> reference_cpu_ms(std::string_view op, std::uint64_t size) {
  for (const auto& row : kKernelRows) {
    if (row.op == op && row.h == size) return row.cpu_ms;
  }
  if (op == "spmv") {
    for (const auto& row : kSpmvRows) {
      if (row.nz == size) return row.cpu_ms;
    }
  }
  return std::nullopt;
}

FlopModelCheck check_flop_model(double rel_tol) {
  FlopModelCheck check;
  for (const auto& row : kKernelRows) {
    const double model = gflops(FlopModel::per_unit(row.op), row.h, row.cpu_ms);
    const double err = std::abs(model - row.cpu_gflops) / row.cpu_gflops;
    ++check.cells;
    if (err <= rel_tol) ++check.within_tolerance;
    if (err > check.worst_relative_error) check.worst_relative_error = err;
  }
  return check;
}

}  // namespace zkrylov
