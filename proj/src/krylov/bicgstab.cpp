#include <optional>

#include "krylov/common.hpp"

namespace zkrylov {

SolveResult solve_bicgstab(const CsrMatrix& a, const ZVector& b, const Preconditioner& m, const SolverConfig& cfg) {
  detail::SolveSession s(a, b, m, cfg);
  const std::size_t n = s.n();
  ZVector x = s.initial_x();
  if (s.bnorm() == 0.0) return s.finish(std::move(x), 0.0, true);

  ZVector r(n);
  s.residual(x, r);
  double rel = s.norm(r) / s.bnorm();
  s.record(rel);
  if (rel <= cfg.tolerance) return s.finish(std::move(x), rel, true);

  ZVector r_hat = r;
  ZVector p(n), p_hat(n), v(n), sv(n), s_hat(n), t(n);
  Cplx rho_old{1.0, 0.0}, alpha{1.0, 0.0}, omega{1.0, 0.0};
  bool fresh = true;  // next iteration starts a new Krylov sequence

  // Called when a recurrence residual passes the tolerance. Returns the
  // recomputed residual when it confirms convergence; otherwise restarts from
  // the true residual.
  auto confirm = [&]() -> std::optional<double> {
    const double true_rel = s.true_relative_residual(x);
    if (true_rel <= cfg.tolerance) return true_rel;
    s.residual(x, r);
    zassign(r_hat, r);
    fresh = true;
    s.record(true_rel);
    return std::nullopt;
  };

  while (s.iterations() < cfg.max_iterations) {
    ++s.iterations();
    const Cplx rho = s.dot(r_hat, r);
    if (detail::tiny(rho)) s.breakdown("rho = (r_hat, r) vanished", std::move(x));

    if (fresh) {
      zassign(p, r);
      fresh = false;
    } else {
      const Cplx beta = (rho / rho_old) * (alpha / omega);
      zaxpy(-omega, v, p);
      zscal(beta, p);
      zaxpy(Cplx{1.0, 0.0}, r, p);
    }
    m.apply(p, p_hat);
    spmv(a, p_hat, v);
    const Cplx r_hat_v = s.dot(r_hat, v);
    if (detail::tiny(r_hat_v)) s.breakdown("(r_hat, A M^-1 p) vanished", std::move(x));
    alpha = rho / r_hat_v;

    zassign(sv, r);
    zaxpy(-alpha, v, sv);
    if (s.norm(sv) / s.bnorm() <= cfg.tolerance) {
      zaxpy(alpha, p_hat, x);
      if (const auto done = confirm()) return s.finish(std::move(x), *done, true);
      continue;
    }

    m.apply(sv, s_hat);
    spmv(a, s_hat, t);
    const double tt = s.dot(t, t).re;
    if (detail::tiny(tt)) s.breakdown("(t, t) vanished", std::move(x));
    omega = s.dot(t, sv) / Cplx{tt, 0.0};

    zaxpy(alpha, p_hat, x);
    zaxpy(omega, s_hat, x);
    zassign(r, sv);
    zaxpy(-omega, t, r);

    rel = s.norm(r) / s.bnorm();
    if (rel <= cfg.tolerance) {
      if (const auto done = confirm()) return s.finish(std::move(x), *done, true);
      continue;
    }
    s.record(rel);
    if (detail::tiny(omega)) s.breakdown("omega vanished", std::move(x));
    rho_old = rho;
  }
  const double true_rel = s.true_relative_residual(x);
  return s.finish(std::move(x), true_rel, true_rel <= cfg.tolerance);
}

}  // namespace zkrylov
