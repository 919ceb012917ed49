// bench: command-line driver for kernel, SpMV and solver benchmarks.
//
//   bench kernel --op zaxpy --size 1000000 --reps 100
//   bench spmv --matrix path.mtx
//   bench solve --method tfqmr --matrix path.mtx --tol 1e-9 --maxit 1000 --precond jacobi
//   bench solve --problem helmholtz.cfg --method bicgstab_l --l 8
//   bench assemble --problem helmholtz.cfg --write-matrix a.mtx --write-rhs b.bin
//   bench stats --matrix path.mtx
//   bench selftest
//
// Global flags: --format csv|md, --seed N, --threads N, --out path, --isa scalar|avx2.
// Exit codes: 0 success, 1 usage or other error, 2 non-convergence,
// 3 parse error, 4 breakdown.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zkrylov/bench.hpp"
#include "zkrylov/errors.hpp"
#include "zkrylov/helmholtz.hpp"
#include "zkrylov/io.hpp"
#include "zkrylov/krylov.hpp"
#include "zkrylov/parallel.hpp"
#include "zkrylov/simd.hpp"

namespace {

using namespace zkrylov;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitParse = 3;
constexpr int kExitBreakdown = 4;

struct GlobalOptions {
  std::string format = "md";
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string out;
  std::string isa;
};

struct KernelOptions {
  std::string op;
  std::vector<std::size_t> sizes{1000000};
  std::size_t reps = 100;
};

struct SpmvOptions {
  std::string matrix;
  std::size_t reps = 100;
};

struct SolveOptions {
  std::string method = "bicgstab";
  std::string matrix;
  std::string problem;
  std::string rhs;
  double tol = 1e-9;
  std::size_t maxit = 1000;
  std::string precond = "jacobi";
  std::size_t l = 8;
};

struct AssembleOptions {
  std::string problem;
  std::string matrix_out;
  std::string rhs_out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ReportFormat report_format(const GlobalOptions& g) { return *parse_report_format(g.format); }

int run_kernel(const GlobalOptions& g, const KernelOptions& k) {
  std::vector<std::string> ops;
  if (k.op == "all") {
    for (auto op : kKernelOps) ops.emplace_back(op);
  } else {
    ops.push_back(k.op);
  }
  std::vector<BenchRecord> records;
  for (const auto& op : ops) {
    for (std::size_t h : k.sizes) records.push_back(bench_kernel(op, h, k.reps, g.seed));
  }
  Output out(g.out);
  emit_report(records, report_format(g), out.stream());
  return kExitOk;
}

int run_spmv(const GlobalOptions& g, const SpmvOptions& s) {
  const BenchRecord rec = bench_spmv(std::filesystem::path(s.matrix), s.reps, g.seed);
  Output out(g.out);
  emit_report(std::span(&rec, 1), report_format(g), out.stream());
  return kExitOk;
}

int run_solve(const GlobalOptions& g, const SolveOptions& s) {
  CsrMatrix a;
  ZVector b;
  if (!s.problem.empty()) {
    HelmholtzSystem sys = assemble(read_problem_config(s.problem));
    a = std::move(sys.matrix);
    b = std::move(sys.rhs);
  } else {
    a = load_matrix(s.matrix);
    // Without an explicit right-hand side, solve for the all-ones vector.
    b = s.rhs.empty() ? spmv(a, ZVector(a.cols(), Cplx{1.0, 0.0})) : read_vector_binary(s.rhs);
  }
  if (!s.rhs.empty() && !s.problem.empty()) b = read_vector_binary(s.rhs);

  const Preconditioner m = s.precond == "jacobi" ? build_jacobi(a) : Preconditioner::identity();
  SolverConfig cfg;
  cfg.tolerance = s.tol;
  cfg.max_iterations = s.maxit;
  cfg.l = s.l;

  std::vector<Method> methods;
  if (s.method == "all") {
    methods = {Method::bicgstab, Method::bicgstab_l, Method::tfqmr};
  } else {
    methods.push_back(*parse_method(s.method));
  }

  std::vector<BenchRecord> records;
  int status = kExitOk;
  for (Method method : methods) {
    records.push_back(bench_solver(a, b, method, m, cfg));
    const auto& rec = records.back();
    if (!rec.note.empty()) {
      std::cerr << rec.op << ": " << rec.note << '\n';
      status = kExitBreakdown;
    } else if (!rec.converged.value_or(false) && status == kExitOk) {
      status = kExitNotConverged;
    }
  }
  Output out(g.out);
  emit_report(records, report_format(g), out.stream());
  return status;
}

int run_assemble(const GlobalOptions&, const AssembleOptions& a) {
  const HelmholtzSystem sys = assemble(read_problem_config(a.problem));
  const std::filesystem::path mpath(a.matrix_out);
  if (mpath.extension() == ".bin") {
    write_csr_binary(sys.matrix, mpath);
  } else {
    write_matrix_market(sys.matrix, mpath);
  }
  if (!a.rhs_out.empty()) write_vector_binary(sys.rhs, std::filesystem::path(a.rhs_out));
  return kExitOk;
}

int run_stats(const GlobalOptions& g, const std::string& matrix) {
  const MatrixStats st = stats(load_matrix(matrix));
  Output out(g.out);
  auto& os = out.stream();
  char line[256];
  if (report_format(g) == ReportFormat::csv) {
    os << "h,nz,density,bandwidth,max_row,nz_per_h,nz_per_h_stddev\n";
    std::snprintf(line, sizeof line, "%zu,%zu,%.17g,%zu,%zu,%.17g,%.17g\n", st.h, st.nz, st.density, st.bandwidth,
                  st.max_row, st.nz_per_h, st.nz_per_h_stddev);
  } else {
    os << "| h | nz | density (%) | bandwidth | max row | nz/h | nz/h stddev |\n";
    os << "|--:|---:|------------:|----------:|--------:|-----:|------------:|\n";
    std::snprintf(line, sizeof line, "| %zu | %zu | %.3f | %zu | %zu | %.3f | %.3f |\n", st.h, st.nz, st.density,
                  st.bandwidth, st.max_row, st.nz_per_h, st.nz_per_h_stddev);
  }
  os << line;
  return kExitOk;
}

int run_selftest(const GlobalOptions& g) {
  const FlopModelCheck check = check_flop_model(0.05);
  Output out(g.out);
  out.stream() << "flop model: " << check.within_tolerance << "/" << check.cells
               << " reference Gflops cells within 5% (worst relative error " << check.worst_relative_error << ")\n";
  return check.within_tolerance >= 30 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex sparse kernel and Krylov solver benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "md", "markdown"}));
  app.add_option("--seed", g.seed, "Random seed for generated vectors");
  app.add_option("--threads", g.threads, "Parallel width of vector kernels and SpMV")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--isa", g.isa, "Force a kernel variant")->check(CLI::IsMember({"scalar", "avx2"}));

  KernelOptions ko;
  auto* kernel = app.add_subcommand("kernel", "Time a level-1 vector kernel");
  kernel->add_option("--op", ko.op, "Kernel name or 'all'")
      ->required()
      ->check(CLI::IsMember({"zassign", "zscal", "zaxpy", "zaxmy", "zdot", "znorm", "all"}));
  kernel->add_option("--size", ko.sizes, "Vector length (repeatable)")->check(CLI::PositiveNumber);
  kernel->add_option("--reps", ko.reps, "Timed repetitions")->check(CLI::PositiveNumber);

  SpmvOptions so;
  auto* spmv_cmd = app.add_subcommand("spmv", "Time CSR sparse matrix-vector products");
  spmv_cmd->add_option("--matrix", so.matrix, "Matrix Market file or binary CSR dump (.bin)")->required();
  spmv_cmd->add_option("--reps", so.reps, "Timed repetitions")->check(CLI::PositiveNumber);

  SolveOptions sv;
  auto* solve_cmd = app.add_subcommand("solve", "Run a preconditioned Krylov solve");
  solve_cmd->add_option("--method", sv.method, "Solver")
      ->check(CLI::IsMember({"bicgstab", "bicgstab_l", "tfqmr", "all"}));
  auto* mopt = solve_cmd->add_option("--matrix", sv.matrix, "Matrix Market file or binary CSR dump (.bin)");
  auto* popt = solve_cmd->add_option("--problem", sv.problem, "Helmholtz problem config (key=value)");
  mopt->excludes(popt);
  popt->excludes(mopt);
  solve_cmd->add_option("--rhs", sv.rhs, "Right-hand side as a binary vector dump");
  solve_cmd->add_option("--tol", sv.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--maxit", sv.maxit, "Maximum iterations")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--precond", sv.precond, "Preconditioner")->check(CLI::IsMember({"jacobi", "identity"}));
  solve_cmd->add_option("--l", sv.l, "BiCGSTAB(l) degree")->check(CLI::PositiveNumber);

  AssembleOptions ao;
  auto* assemble_cmd = app.add_subcommand("assemble", "Assemble a Helmholtz system and export it");
  assemble_cmd->add_option("--problem", ao.problem, "Helmholtz problem config")->required();
  assemble_cmd->add_option("--write-matrix", ao.matrix_out, "Output matrix (.mtx or .bin)")->required();
  assemble_cmd->add_option("--write-rhs", ao.rhs_out, "Output right-hand side (binary vector dump)");

  std::string stats_matrix;
  auto* stats_cmd = app.add_subcommand("stats", "Print matrix sketch statistics");
  stats_cmd->add_option("--matrix", stats_matrix, "Matrix Market file or binary CSR dump (.bin)")->required();

  auto* selftest = app.add_subcommand("selftest", "Check the flop model against the reference tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  if (*solve_cmd && sv.matrix.empty() && sv.problem.empty()) {
    std::cerr << "solve: one of --matrix or --problem is required\n";
    return kExitError;
  }

  try {
    set_num_threads(g.threads);
    if (!g.isa.empty()) set_active_isa(*parse_isa(g.isa));
    if (*kernel) return run_kernel(g, ko);
    if (*spmv_cmd) return run_spmv(g, so);
    if (*solve_cmd) return run_solve(g, sv);
    if (*assemble_cmd) return run_assemble(g, ao);
    if (*stats_cmd) return run_stats(g, stats_matrix);
    if (*selftest) return run_selftest(g);
  } catch (const BreakdownError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBreakdown;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
