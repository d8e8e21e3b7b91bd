#include "qllg/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qllg {

namespace {
const Complex kI(0.0, 1.0);
}

ComplexMatrix exact_rank1_solution(const ComplexMatrix& rho0,
                                   const QllgContext& ctx, double t) {
  const Eigen::Index n = rho0.rows();
  if (ctx.hamiltonian.rows() != n) {
    throw DimensionMismatchError("exact_rank1_solution: dims disagree");
  }
  const SpectralDecomposition eig0 = hermitian_eigendecomposition(rho0);
  if (n >= 2 && eig0.eigenvalues(n - 2) > 1e-10) {
    throw NotRankOneError(
        "exact_rank1_solution: second-largest eigenvalue " +
        std::to_string(eig0.eigenvalues(n - 2)) + " exceeds 1e-10");
  }
  const ComplexVector u = eig0.eigenvectors.col(n - 1);

  const SpectralDecomposition eig_h =
      hermitian_eigendecomposition(ctx.hamiltonian);
  const Complex scale =
      (1.0 - kI * ctx.kappa) / (1.0 + ctx.kappa * ctx.kappa);

  // w = exp(-(i/hbar) Htilde t) u, computed in the eigenbasis of H. The
  // exponents are shifted by their largest real part so the weights stay
  // inside the floating-point range for strongly damped long runs.
  ComplexVector y = eig_h.eigenvectors.adjoint() * u;
  double max_re = -std::numeric_limits<double>::infinity();
  ComplexVector exponents(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    exponents(j) = -(kI / ctx.hbar) * scale * eig_h.eigenvalues(j) * t;
    max_re = std::max(max_re, exponents(j).real());
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    y(j) *= std::exp(exponents(j) - max_re);
  }
  const ComplexVector w = eig_h.eigenvectors * y;

  const double norm_sq = w.squaredNorm();
  if (!(norm_sq > 0) || !std::isfinite(norm_sq)) {
    throw QllgError("exact_rank1_solution: normalization failed");
  }
  ComplexMatrix rho;
  rho.noalias() = w * w.adjoint();
  return rho / norm_sq;
}

ComplexMatrix brute_force_rhs(const ComplexMatrix& rho,
                              const QllgContext& ctx) {
  const Eigen::Index n = rho.rows();
  if (ctx.hamiltonian.rows() != n || rho.cols() != n) {
    throw DimensionMismatchError("brute_force_rhs: dims disagree");
  }
  if (n * n > kDenseDimCap) {
    throw DimensionOverflowError(
        "brute_force_rhs: vectorized dimension " + std::to_string(n * n) +
        " exceeds cap " + std::to_string(kDenseDimCap));
  }
  const Eigen::Index nn = n * n;
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);

  ComplexMatrix system = ComplexMatrix::Identity(nn, nn);
  system -= kI * ctx.kappa *
            (kron(identity, rho, nn) - kron(rho.transpose(), identity, nn));

  const ComplexMatrix comm =
      (kI / ctx.hbar) * commutator(rho, ctx.hamiltonian);
  const Eigen::Map<const ComplexVector> rhs_vec(comm.data(), nn);

  const Eigen::PartialPivLU<ComplexMatrix> lu(system);
  const ComplexVector x = lu.solve(rhs_vec);
  const double residual = (system * x - rhs_vec).norm();
  if (!(residual <= 1e-10 * std::max(1.0, rhs_vec.norm()))) {
    throw SingularSystemError("brute_force_rhs: solve residual " +
                              std::to_string(residual));
  }

  const Eigen::Map<const ComplexMatrix> f(x.data(), n, n);
  return hermitian_part(f);
}

ConvergenceReport convergence_study(const ComplexMatrix& rho0,
                                    const QllgContext& ctx,
                                    const std::vector<MethodSpec>& methods,
                                    const std::vector<double>& h_list,
                                    double t_final, ReferenceKind reference) {
  if (h_list.empty()) {
    throw std::invalid_argument("convergence_study: empty h list");
  }
  for (size_t i = 0; i < h_list.size(); ++i) {
    if (!(h_list[i] > 0) ||
        (i + 1 < h_list.size() && !(h_list[i + 1] < h_list[i]))) {
      throw std::invalid_argument(
          "convergence_study: h list must be positive and strictly "
          "decreasing");
    }
  }

  ComplexMatrix rho_ref;
  if (reference == ReferenceKind::ExactRank1) {
    rho_ref = exact_rank1_solution(rho0, ctx, t_final);
  } else {
    IntegratorConfig fine;
    fine.tableau = preset_tableau("rk4");
    fine.conservative = true;
    fine.time_step = h_list.back() / 10.0;
    fine.t_final = t_final;
    fine.sample_stride = std::numeric_limits<int>::max();
    rho_ref = integrate(rho0, ctx, fine).final_state;
  }

  ConvergenceReport report;
  report.t_final = t_final;
  report.reference = reference;
  for (const MethodSpec& method : methods) {
    MethodConvergence result;
    result.method = method.tableau.name;
    result.conservative = method.conservative;
    for (double h : h_list) {
      IntegratorConfig config;
      config.tableau = method.tableau;
      config.conservative = method.conservative;
      config.time_step = h;
      config.t_final = t_final;
      config.sample_stride = std::numeric_limits<int>::max();
      const TrajectoryRecord record = integrate(rho0, ctx, config);
      if (record.aborted) {
        throw NumericalBlowupError("convergence_study: " + result.method +
                                   " at h=" + std::to_string(h) + ": " +
                                   record.abort_reason);
      }
      result.step_sizes.push_back(h);
      result.errors.push_back((record.final_state - rho_ref).norm());
    }

    for (size_t i = 0; i + 1 < result.errors.size(); ++i) {
      result.pairwise_orders.push_back(
          std::log(result.errors[i] / result.errors[i + 1]) /
          std::log(result.step_sizes[i] / result.step_sizes[i + 1]));
    }

    result.conserved = true;
    for (double e : result.errors) result.conserved &= (e <= 1e-12);

    if (!result.conserved && result.errors.size() >= 2) {
      // Least-squares fit of log(error) against log(h).
      const size_t m = result.errors.size();
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < m; ++i) {
        const double x = std::log(result.step_sizes[i]);
        const double y = std::log(result.errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double denom = m * sxx - sx * sx;
      if (denom != 0.0) result.slope = (m * sxy - sx * sy) / denom;
    }
    report.methods.push_back(std::move(result));
  }
  return report;
}

}  // namespace qllg
