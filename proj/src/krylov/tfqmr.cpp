// Transpose-free QMR (Freund), right-preconditioned. The iterate is updated
// directly in x: with d the search direction in the preconditioned variable,
// pd = M^-1 d obeys the same recurrence as d, so x += eta * pd.

#include <cmath>

#include "krylov/common.hpp"

namespace zkrylov {

SolveResult solve_tfqmr(const CsrMatrix& a, const ZVector& b, const Preconditioner& m, const SolverConfig& cfg) {
  detail::SolveSession s(a, b, m, cfg);
  const std::size_t n = s.n();
  ZVector x = s.initial_x();
  if (s.bnorm() == 0.0) return s.finish(std::move(x), 0.0, true);

  ZVector r0(n);
  s.residual(x, r0);
  double rel = s.norm(r0) / s.bnorm();
  s.record(rel);
  if (rel <= cfg.tolerance) return s.finish(std::move(x), rel, true);

  const ZVector& r_hat = r0;
  ZVector w = r0;
  ZVector u = r0;
  ZVector u_next(n);
  ZVector mu(n);  // M^-1 u
  ZVector bu(n);  // A M^-1 u
  ZVector v(n);
  ZVector pd(n);  // M^-1 d
  ZVector bu_new(n);

  m.apply(u, mu);
  spmv(a, mu, bu);
  zassign(v, bu);

  double tau = s.norm(r0);
  double theta = 0.0;
  Cplx eta{0.0, 0.0};
  Cplx alpha{0.0, 0.0};
  Cplx rho = s.dot(r_hat, r0);
  if (detail::tiny(rho)) s.breakdown("(r_hat, r0) vanished", std::move(x));

  for (std::size_t half = 0;; ++half) {
    const bool even = half % 2 == 0;
    if (even) {
      ++s.iterations();
      const Cplx sigma = s.dot(r_hat, v);
      if (detail::tiny(sigma)) s.breakdown("(r_hat, v) vanished", std::move(x));
      alpha = rho / sigma;
      zassign(u_next, u);
      zaxpy(-alpha, v, u_next);
    }
    zaxpy(-alpha, bu, w);

    // pd = M^-1 u + (theta^2 eta / alpha) pd
    const Cplx coeff = cscale(theta * theta, eta / alpha);
    zscal(coeff, pd);
    zaxpy(Cplx{1.0, 0.0}, mu, pd);

    theta = s.norm(w) / tau;
    const double c = 1.0 / std::sqrt(1.0 + theta * theta);
    tau = tau * theta * c;
    eta = cscale(c * c, alpha);
    zaxpy(eta, pd, x);

    rel = s.true_relative_residual(x);
    if (rel <= cfg.tolerance) return s.finish(std::move(x), rel, true);
    if (!even) {
      s.record(rel);
      if (s.iterations() >= cfg.max_iterations) break;
    }
    if (detail::tiny(tau)) s.breakdown("quasi-residual vanished before convergence", std::move(x));

    if (even) {
      std::swap(u, u_next);
      m.apply(u, mu);
      spmv(a, mu, bu);
    } else {
      const Cplx rho_new = s.dot(r_hat, w);
      const Cplx beta = rho_new / rho;
      rho = rho_new;
      if (detail::tiny(rho)) s.breakdown("rho vanished", std::move(x));
      // u = w + beta u; v = A M^-1 u + beta (bu_old + beta v)
      zscal(beta, u);
      zaxpy(Cplx{1.0, 0.0}, w, u);
      m.apply(u, mu);
      spmv(a, mu, bu_new);
      zscal(beta, v);
      zaxpy(Cplx{1.0, 0.0}, bu, v);
      zscal(beta, v);
      zaxpy(Cplx{1.0, 0.0}, bu_new, v);
      std::swap(bu, bu_new);
    }
  }
  return s.finish(std::move(x), rel, false);
}

}  // namespace zkrylov
