#ifndef QLLG_INTEGRATORS_HPP
#define QLLG_INTEGRATORS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qllg/dynamics.hpp"
#include "qllg/linalg.hpp"

namespace qllg {

/// Coefficients of an explicit s-stage Runge-Kutta scheme. `a` is strictly
/// lower triangular and the weights satisfy sum(b) = 1.
struct ButcherTableau {
  std::string name;
  int stages = 0;
  RealMatrix a;
  RealVector b;
  int nominal_order = 0;
};

/// euler, rk2 (Heun), rk3 (Kutta's third-order rule), rk4 (classical).
ButcherTableau preset_tableau(std::string_view name);

using RhsFn = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// One explicit RK step. Preserves Hermiticity and trace of the state but
/// not positive semi-definiteness or higher trace powers.
ComplexMatrix rk_step(const ComplexMatrix& rho_k, double h,
                      const ButcherTableau& tableau, const RhsFn& rhs);

/// Eigendecomposes z_tilde and reassembles it with the reference eigenvalues:
/// V diag(lambda0) V*. Ascending eigenvalues are paired by rank with the
/// ascending lambda0.
ComplexMatrix spectral_projection(const ComplexMatrix& z_tilde,
                                  const RealVector& lambda0);

/// RK step that projects every intermediate stage state (the first stage
/// z_1 = rho_k is used as-is) and the combined update back onto the manifold
/// of matrices with spectrum lambda0.
ComplexMatrix conservative_rk_step(const ComplexMatrix& rho_k, double h,
                                   const ButcherTableau& tableau,
                                   const RealVector& lambda0, const RhsFn& rhs);

/// Ascending spectrum of rho0, validated as a reference spectrum
/// (entries >= -1e-10, unit sum within 1e-10).
RealVector reference_spectrum(const ComplexMatrix& rho0);

struct IntegratorConfig {
  ButcherTableau tableau;
  bool conservative = true;
  double time_step = 0.02;  // ps
  double t_final = 1.0;     // ps
  int sample_stride = 1;    // record every k-th step (the last is always kept)
};

/// Named scalar functional of the state, sampled along the trajectory.
struct Observer {
  std::string name;
  std::function<double(const ComplexMatrix&)> evaluate;
};

struct TrajectoryRecord {
  std::vector<double> times;  // ps, strictly increasing, last = t_final
  std::vector<StateDiagnostics> diagnostics;
  std::vector<std::string> observable_names;
  std::vector<std::vector<double>> observables;  // [sample][observer]
  ComplexMatrix final_state;
  bool aborted = false;
  std::string abort_reason;
};

/// Drives fixed steps of size time_step to t_final (the last step is
/// shortened to land exactly on t_final), sampling diagnostics and observers
/// every sample_stride steps plus the initial and final states. On numerical
/// blow-up (non-finite state or ||rho||_F > 1e6) the partial record is
/// returned with `aborted` set.
TrajectoryRecord integrate(const ComplexMatrix& rho0, const QllgContext& ctx,
                           const IntegratorConfig& config,
                           const std::vector<Observer>& observers = {});

}  // namespace qllg

#endif  // QLLG_INTEGRATORS_HPP
