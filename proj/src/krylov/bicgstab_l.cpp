// BiCGSTAB(l) after Sleijpen and Fokkema, with modified Gram-Schmidt for the
// minimal-residual polynomial. The iteration runs on B = A M^-1 in the
// preconditioned variable y; the current iterate is x = x_base + M^-1 y.

#include <optional>
#include <vector>

#include "krylov/common.hpp"

namespace zkrylov {

SolveResult solve_bicgstab_l(const CsrMatrix& a, const ZVector& b, const Preconditioner& m, const SolverConfig& cfg) {
  detail::SolveSession s(a, b, m, cfg);
  const std::size_t n = s.n();
  const std::size_t l = cfg.l;
  ZVector x_base = s.initial_x();
  if (s.bnorm() == 0.0) return s.finish(std::move(x_base), 0.0, true);

  std::vector<ZVector> r(l + 1, ZVector(n));
  std::vector<ZVector> u(l + 1, ZVector(n));
  ZVector y(n), r_hat(n), tmp(n);

  s.residual(x_base, r[0]);
  double rel = s.norm(r[0]) / s.bnorm();
  s.record(rel);
  if (rel <= cfg.tolerance) return s.finish(std::move(x_base), rel, true);
  zassign(r_hat, r[0]);

  auto apply_b = [&](const ZVector& in, ZVector& out) {
    m.apply(in, tmp);
    spmv(a, tmp, out);
  };
  auto current_x = [&]() {
    ZVector x = x_base;
    m.apply(y, tmp);
    zaxpy(Cplx{1.0, 0.0}, tmp, x);
    return x;
  };

  Cplx rho0{1.0, 0.0}, alpha{0.0, 0.0}, omega{1.0, 0.0};
  auto restart = [&]() {
    x_base = current_x();
    y.fill({});
    s.residual(x_base, r[0]);
    zassign(r_hat, r[0]);
    u[0].fill({});
    rho0 = {1.0, 0.0};
    alpha = {0.0, 0.0};
    omega = {1.0, 0.0};
  };
  // Recurrence residual passed the tolerance: confirm against b - A x or
  // restart from the true residual.
  auto confirm = [&]() -> std::optional<double> {
    const double true_rel = s.true_relative_residual(current_x());
    if (true_rel <= cfg.tolerance) return true_rel;
    restart();
    s.record(true_rel);
    return std::nullopt;
  };

  // MR coefficients, 1-based in both indices.
  std::vector<std::vector<Cplx>> tau(l + 1, std::vector<Cplx>(l + 1));
  std::vector<double> sigma(l + 1);
  std::vector<Cplx> gamma(l + 1), gamma_p(l + 1), gamma_pp(l + 1);

  while (s.iterations() < cfg.max_iterations) {
    rho0 = -(omega * rho0);

    bool restarted = false;
    bool at_limit = false;
    for (std::size_t j = 0; j < l; ++j) {
      ++s.iterations();
      const Cplx rho1 = s.dot(r_hat, r[j]);
      if (detail::tiny(rho0) || detail::tiny(rho1)) s.breakdown("rho vanished in BiCG part", current_x());
      const Cplx beta = alpha * (rho1 / rho0);
      rho0 = rho1;
      for (std::size_t i = 0; i <= j; ++i) {
        zscal(-beta, u[i]);
        zaxpy(Cplx{1.0, 0.0}, r[i], u[i]);
      }
      apply_b(u[j], u[j + 1]);
      const Cplx g = s.dot(r_hat, u[j + 1]);
      if (detail::tiny(g)) s.breakdown("(r_hat, B u) vanished", current_x());
      alpha = rho0 / g;
      for (std::size_t i = 0; i <= j; ++i) zaxpy(-alpha, u[i + 1], r[i]);
      apply_b(r[j], r[j + 1]);
      zaxpy(alpha, u[0], y);

      rel = s.norm(r[0]) / s.bnorm();
      if (rel <= cfg.tolerance) {
        if (const auto done = confirm()) return s.finish(current_x(), *done, true);
        restarted = true;
        break;
      }
      if (j + 1 < l) {
        s.record(rel);
        if (s.iterations() >= cfg.max_iterations) {
          at_limit = true;
          break;
        }
      }
    }
    if (restarted) continue;
    if (at_limit) break;

    // Minimal-residual part.
    for (std::size_t j = 1; j <= l; ++j) {
      for (std::size_t i = 1; i < j; ++i) {
        tau[i][j] = s.dot(r[i], r[j]) / Cplx{sigma[i], 0.0};
        zaxpy(-tau[i][j], r[i], r[j]);
      }
      sigma[j] = s.dot(r[j], r[j]).re;
      if (detail::tiny(sigma[j])) s.breakdown("singular minimal-residual system", current_x());
      gamma_p[j] = s.dot(r[j], r[0]) / Cplx{sigma[j], 0.0};
    }
    gamma[l] = gamma_p[l];
    omega = gamma[l];
    for (std::size_t j = l - 1; j >= 1; --j) {
      Cplx acc = gamma_p[j];
      for (std::size_t i = j + 1; i <= l; ++i) acc = acc - tau[j][i] * gamma[i];
      gamma[j] = acc;
    }
    for (std::size_t j = 1; j + 1 <= l; ++j) {
      Cplx acc = gamma[j + 1];
      for (std::size_t i = j + 1; i + 1 <= l; ++i) acc = acc + tau[j][i] * gamma[i + 1];
      gamma_pp[j] = acc;
    }
    zaxpy(gamma[1], r[0], y);
    zaxpy(-gamma_p[l], r[l], r[0]);
    zaxpy(-gamma[l], u[l], u[0]);
    for (std::size_t j = 1; j + 1 <= l; ++j) {
      zaxpy(-gamma[j], u[j], u[0]);
      zaxpy(gamma_pp[j], r[j], y);
      zaxpy(-gamma_p[j], r[j], r[0]);
    }

    rel = s.norm(r[0]) / s.bnorm();
    if (rel <= cfg.tolerance) {
      if (const auto done = confirm()) return s.finish(current_x(), *done, true);
      continue;
    }
    s.record(rel);
    if (detail::tiny(omega)) s.breakdown("omega vanished", current_x());
  }
  ZVector x = current_x();
  const double true_rel = s.true_relative_residual(x);
  return s.finish(std::move(x), true_rel, true_rel <= cfg.tolerance);
}

}  // namespace zkrylov
