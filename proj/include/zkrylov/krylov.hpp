#pragma once

// Preconditioned Krylov solvers for complex non-Hermitian systems.
//
// All methods precondition on the right (A M^-1 u = b, x = M^-1 u), so the
// residual driving the stopping test is the true residual of the original
// system. Convergence means ||b - A x|| / ||b|| <= tolerance, and the value
// reported at exit is always recomputed from x, never taken from a
// recurrence.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zkrylov/errors.hpp"
#include "zkrylov/sparse.hpp"
#include "zkrylov/vecops.hpp"

namespace zkrylov {

struct SolverConfig {
  double tolerance = 1e-9;
  std::size_t max_iterations = 1000;
  std::optional<ZVector> initial_guess;  // zero vector when empty
  std::size_t l = 8;                     // BiCGSTAB(l) polynomial degree
  ReductionPlan reduction{};

  /// Throws ParameterError unless tolerance > 0, max_iterations >= 1, l >= 1.
  void validate() const;
};

class Preconditioner {
 public:
  enum class Kind { identity, jacobi };

  /// No-op preconditioner; apply() copies its input.
  static Preconditioner identity() { return Preconditioner(); }

  /// Takes the elementwise inverse of the diagonal.
  static Preconditioner jacobi(ZVector inverse_diagonal);

  Kind kind() const noexcept { return kind_; }
  const ZVector& inverse_diagonal() const noexcept { return inv_diag_; }

  /// True when the preconditioner can act on vectors of length n.
  bool compatible(std::size_t n) const noexcept { return kind_ == Kind::identity || inv_diag_.size() == n; }

  /// out = M^-1 in. `out` must already have the right length.
  void apply(const ZVector& in, ZVector& out) const;

 private:
  Preconditioner() = default;
  Kind kind_ = Kind::identity;
  ZVector inv_diag_;
};

/// Throws SingularPreconditionerError naming the first row whose diagonal is
/// zero or not stored, DimensionError for a non-square matrix.
Preconditioner build_jacobi(const CsrMatrix& a);

struct SolveReport {
  std::size_t iterations = 0;
  double final_relative_residual = 0.0;
  bool converged = false;
  // Entry 0 is the initial residual, then one entry per iteration. The last
  // entry equals final_relative_residual.
  std::vector<double> residual_history;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  ZVector x;
  SolveReport report;
};

/// A denominator fell below 1e-300 in magnitude. Carries the iterate and
/// report at the point of failure.
class BreakdownError : public Error {
 public:
  BreakdownError(const std::string& what, SolveReport report, ZVector x)
      : Error("breakdown: " + what), report_(std::move(report)), x_(std::move(x)) {}

  const SolveReport& report() const noexcept { return report_; }
  const ZVector& partial_solution() const noexcept { return x_; }

 private:
  SolveReport report_;
  ZVector x_;
};

inline constexpr double kBreakdownThreshold = 1e-300;

SolveResult solve_bicgstab(const CsrMatrix& a, const ZVector& b, const Preconditioner& m,
                           const SolverConfig& cfg = {});

/// Sleijpen-Fokkema BiCGSTAB(l). One iteration is one inner BiCG step (two
/// products with A, like a BiCGSTAB iteration); a full cycle is l
/// iterations followed by the minimal-residual polynomial update. The history
/// records the BiCG residual after each inner step, and the post-update
/// residual for the last step of a cycle.
SolveResult solve_bicgstab_l(const CsrMatrix& a, const ZVector& b, const Preconditioner& m,
                             const SolverConfig& cfg = {});

/// Freund's TFQMR. One iteration is two half-steps (two products with A);
/// the true residual is recomputed after every half-step and drives the
/// stopping test.
SolveResult solve_tfqmr(const CsrMatrix& a, const ZVector& b, const Preconditioner& m,
                        const SolverConfig& cfg = {});

enum class Method { bicgstab, bicgstab_l, tfqmr };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

SolveResult solve(Method method, const CsrMatrix& a, const ZVector& b, const Preconditioner& m,
                  const SolverConfig& cfg = {});

}  // namespace zkrylov
