#ifndef QLLG_ORACLE_HPP
#define QLLG_ORACLE_HPP

#include <limits>
#include <string>
#include <vector>

#include "qllg/dynamics.hpp"
#include "qllg/integrators.hpp"
#include "qllg/linalg.hpp"

namespace qllg {

/// Closed-form trajectory for a rank-1 initial state:
/// rho(t) = E rho0 E* / Tr(E rho0 E*) with E = exp(-(i/hbar) Htilde t) and
/// Htilde = ((1 - i kappa)/(1 + kappa^2)) H. The exponential is evaluated
/// through the eigendecomposition of H, which is exact for Hermitian H.
/// Throws NotRankOneError if the second-largest eigenvalue of rho0 exceeds
/// 1e-10.
ComplexMatrix exact_rank1_solution(const ComplexMatrix& rho0,
                                   const QllgContext& ctx, double t);

/// Independent reference for qllg_rhs: solves the vectorized linear system
/// M vec(f) = vec((i/hbar)[rho,H]) with
/// M = I - i kappa (I x rho - rho^T x I) (column-stacking convention) by
/// dense LU. Requires dim(rho) <= 64.
ComplexMatrix brute_force_rhs(const ComplexMatrix& rho,
                              const QllgContext& ctx);

struct MethodSpec {
  ButcherTableau tableau;
  bool conservative = true;
};

enum class ReferenceKind { ExactRank1, FineRk4 };

struct MethodConvergence {
  std::string method;
  bool conservative = true;
  std::vector<double> step_sizes;
  std::vector<double> errors;           // Frobenius distance at t_final
  std::vector<double> pairwise_orders;  // log2-style order between h pairs
  double slope = std::numeric_limits<double>::quiet_NaN();
  bool conserved = false;  // all errors at rounding level; slope meaningless
};

struct ConvergenceReport {
  double t_final = 0.0;
  ReferenceKind reference = ReferenceKind::ExactRank1;
  std::vector<MethodConvergence> methods;
};

/// Integrates every method at every step size and fits the log-log error
/// slope against the reference solution at t_final. With
/// ReferenceKind::FineRk4 the reference is a conservative rk4 run at
/// min(h)/10. h_list must be strictly decreasing; slopes require at least
/// two entries and are NaN otherwise.
ConvergenceReport convergence_study(const ComplexMatrix& rho0,
                                    const QllgContext& ctx,
                                    const std::vector<MethodSpec>& methods,
                                    const std::vector<double>& h_list,
                                    double t_final, ReferenceKind reference);

}  // namespace qllg

#endif  // QLLG_ORACLE_HPP
