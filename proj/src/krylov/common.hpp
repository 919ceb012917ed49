#pragma once

#include <chrono>
#include <string>

#include "zkrylov/krylov.hpp"

namespace zkrylov::detail {

// Bookkeeping shared by the three solvers: timing, the ||b|| normalization,
// true-residual recomputation and report assembly.
class SolveSession {
 public:
  SolveSession(const CsrMatrix& a, const ZVector& b, const Preconditioner& m, const SolverConfig& cfg);

  const CsrMatrix& a() const { return a_; }
  const ZVector& b() const { return b_; }
  const Preconditioner& m() const { return m_; }
  const SolverConfig& cfg() const { return cfg_; }
  const ReductionPlan& plan() const { return cfg_.reduction; }
  std::size_t n() const { return b_.size(); }
  double bnorm() const { return bnorm_; }

  Cplx dot(const ZVector& x, const ZVector& y) const { return zdot(x, y, Conjugate::yes, cfg_.reduction); }
  double norm(const ZVector& x) const { return znorm2(x, cfg_.reduction); }

  /// Starting iterate (zero or the configured guess).
  ZVector initial_x() const;

  /// r = b - A x.
  void residual(const ZVector& x, ZVector& r) const;

  /// ||b - A x|| / ||b||.
  double true_relative_residual(const ZVector& x) const;

  void record(double rel) { report_.residual_history.push_back(rel); }
  std::size_t& iterations() { return report_.iterations; }

  /// Closes the report with the recomputed residual of x; the last history
  /// entry is replaced (or appended when the history lacks the current
  /// iteration) so it equals the final value.
  SolveResult finish(ZVector x, double true_rel, bool converged);

  [[noreturn]] void breakdown(const std::string& what, ZVector x);

 private:
  const CsrMatrix& a_;
  const ZVector& b_;
  const Preconditioner& m_;
  const SolverConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  double bnorm_ = 0.0;
  SolveReport report_;
  mutable ZVector scratch_;
};

inline bool tiny(Cplx z) { return cabs(z) < kBreakdownThreshold; }
inline bool tiny(double v) { return (v < 0 ? -v : v) < kBreakdownThreshold; }

}  // namespace zkrylov::detail
