#include "krylov/common.hpp"

#include <string>

namespace zkrylov {

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  if (max_iterations < 1) throw ParameterError("max_iterations must be at least 1");
  if (l < 1) throw ParameterError("BiCGSTAB(l) degree must be at least 1");
  reduction.validate();
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::bicgstab: return "bicgstab";
    case Method::bicgstab_l: return "bicgstab_l";
    case Method::tfqmr: return "tfqmr";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "bicgstab") return Method::bicgstab;
  if (name == "bicgstab_l" || name == "bicgstabl") return Method::bicgstab_l;
  if (name == "tfqmr") return Method::tfqmr;
  return std::nullopt;
}

SolveResult solve(Method method, const CsrMatrix& a, const ZVector& b, const Preconditioner& m,
                  const SolverConfig& cfg) {
  switch (method) {
    case Method::bicgstab: return solve_bicgstab(a, b, m, cfg);
    case Method::bicgstab_l: return solve_bicgstab_l(a, b, m, cfg);
    case Method::tfqmr: return solve_tfqmr(a, b, m, cfg);
  }
  throw ParameterError("unknown solver method");
}

namespace detail {

SolveSession::SolveSession(const CsrMatrix& a, const ZVector& b, const Preconditioner& m, const SolverConfig& cfg)
    : a_(a), b_(b), m_(m), cfg_(cfg), start_(std::chrono::steady_clock::now()) {
  cfg.validate();
  if (!a.is_square()) throw DimensionError("solver requires a square matrix");
  if (b.size() != a.rows()) {
    throw DimensionError("right-hand side has length " + std::to_string(b.size()) + ", matrix is " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!m.compatible(a.rows())) throw DimensionError("preconditioner size does not match the matrix");
  if (cfg.initial_guess && cfg.initial_guess->size() != a.rows()) {
    throw DimensionError("initial guess length does not match the matrix");
  }
  bnorm_ = znorm2(b, cfg.reduction);
  scratch_ = ZVector(a.rows());
}

ZVector SolveSession::initial_x() const {
  if (cfg_.initial_guess && bnorm_ > 0.0) return *cfg_.initial_guess;
  return ZVector(n());
}

void SolveSession::residual(const ZVector& x, ZVector& r) const {
  spmv(a_, x, r);
  zscal(Cplx{-1.0, 0.0}, r);
  zaxpy(Cplx{1.0, 0.0}, b_, r);
}

double SolveSession::true_relative_residual(const ZVector& x) const {
  if (bnorm_ == 0.0) return 0.0;
  residual(x, scratch_);
  return znorm2(scratch_, cfg_.reduction) / bnorm_;
}

SolveResult SolveSession::finish(ZVector x, double true_rel, bool converged) {
  auto& h = report_.residual_history;
  if (h.size() == report_.iterations + 1) {
    h.back() = true_rel;
  } else {
    h.resize(report_.iterations);
    h.push_back(true_rel);
  }
  report_.final_relative_residual = true_rel;
  report_.converged = converged;
  report_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  return {std::move(x), std::move(report_)};
}

void SolveSession::breakdown(const std::string& what, ZVector x) {
  const double rel = true_relative_residual(x);
  SolveResult partial = finish(std::move(x), rel, false);
  throw BreakdownError(what, std::move(partial.report), std::move(partial.x));
}

}  // namespace detail
}  // namespace zkrylov
