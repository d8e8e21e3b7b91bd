#include "qllg/integrators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qllg {

namespace {

ButcherTableau make_tableau(std::string name, int order,
                            std::initializer_list<double> a_rows,
                            std::initializer_list<double> b) {
  ButcherTableau t;
  t.name = std::move(name);
  t.nominal_order = order;
  t.stages = static_cast<int>(b.size());
  t.a = RealMatrix::Zero(t.stages, t.stages);
  auto it = a_rows.begin();
  for (int row = 1; row < t.stages; ++row)
    for (int col = 0; col < row; ++col) t.a(row, col) = *it++;
  t.b = RealVector(t.stages);
  int i = 0;
  for (double w : b) t.b(i++) = w;
  return t;
}

void validate_tableau(const ButcherTableau& t) {
  if (t.stages < 1 || t.a.rows() != t.stages || t.a.cols() != t.stages ||
      t.b.size() != t.stages) {
    throw std::invalid_argument("ButcherTableau: inconsistent sizes");
  }
  for (int row = 0; row < t.stages; ++row)
    for (int col = row; col < t.stages; ++col)
      if (t.a(row, col) != 0.0) {
        throw std::invalid_argument(
            "ButcherTableau: a must be strictly lower triangular");
      }
  if (std::abs(t.b.sum() - 1.0) > 1e-14) {
    throw std::invalid_argument("ButcherTableau: sum(b) != 1");
  }
}

}  // namespace

ButcherTableau preset_tableau(std::string_view name) {
  if (name == "euler") {
    return make_tableau("euler", 1, {}, {1.0});
  }
  if (name == "rk2") {  // Heun
    return make_tableau("rk2", 2, {1.0}, {0.5, 0.5});
  }
  if (name == "rk3") {  // Kutta's third-order rule
    return make_tableau("rk3", 3, {0.5, -1.0, 2.0},
                        {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0});
  }
  if (name == "rk4") {  // classical
    return make_tableau("rk4", 4, {0.5, 0.0, 0.5, 0.0, 0.0, 1.0},
                        {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0});
  }
  throw UnknownTableauError("unknown tableau '" + std::string(name) +
                            "'; expected euler|rk2|rk3|rk4");
}

ComplexMatrix rk_step(const ComplexMatrix& rho_k, double h,
                      const ButcherTableau& tableau, const RhsFn& rhs) {
  validate_tableau(tableau);
  if (!(h > 0)) throw std::invalid_argument("rk_step: h must be positive");
  const int s = tableau.stages;
  std::vector<ComplexMatrix> f(s);
  f[0] = rhs(rho_k);
  ComplexMatrix z;
  for (int l = 1; l < s; ++l) {
    z = rho_k;
    for (int j = 0; j < l; ++j) {
      if (tableau.a(l, j) != 0.0) z += (h * tableau.a(l, j)) * f[j];
    }
    f[l] = rhs(z);
  }
  ComplexMatrix out = rho_k;
  for (int j = 0; j < s; ++j) out += (h * tableau.b(j)) * f[j];
  return out;
}

ComplexMatrix spectral_projection(const ComplexMatrix& z_tilde,
                                  const RealVector& lambda0) {
  if (lambda0.size() != z_tilde.rows()) {
    throw DimensionMismatchError(
        "spectral_projection: lambda0 size does not match matrix dim");
  }
  const SpectralDecomposition eig = hermitian_eigendecomposition(z_tilde);
  ComplexMatrix scaled = eig.eigenvectors;
  for (Eigen::Index k = 0; k < scaled.cols(); ++k) scaled.col(k) *= lambda0(k);
  ComplexMatrix out;
  out.noalias() = scaled * eig.eigenvectors.adjoint();
  return hermitian_part(out);
}

ComplexMatrix conservative_rk_step(const ComplexMatrix& rho_k, double h,
                                   const ButcherTableau& tableau,
                                   const RealVector& lambda0,
                                   const RhsFn& rhs) {
  validate_tableau(tableau);
  if (!(h > 0)) {
    throw std::invalid_argument("conservative_rk_step: h must be positive");
  }
  const int s = tableau.stages;
  std::vector<ComplexMatrix> f(s);
  f[0] = rhs(rho_k);  // z_1 = rho_k enters unprojected
  ComplexMatrix z_tilde;
  for (int l = 1; l < s; ++l) {
    z_tilde = rho_k;
    for (int j = 0; j < l; ++j) {
      if (tableau.a(l, j) != 0.0) z_tilde += (h * tableau.a(l, j)) * f[j];
    }
    f[l] = rhs(spectral_projection(z_tilde, lambda0));
  }
  ComplexMatrix rho_tilde = rho_k;
  for (int j = 0; j < s; ++j) rho_tilde += (h * tableau.b(j)) * f[j];
  return spectral_projection(rho_tilde, lambda0);
}

RealVector reference_spectrum(const ComplexMatrix& rho0) {
  const SpectralDecomposition eig =
      hermitian_eigendecomposition(hermitian_part(rho0));
  const RealVector& lambda0 = eig.eigenvalues;
  if (lambda0.minCoeff() < -1e-10) {
    throw QllgError("reference spectrum has eigenvalue " +
                    std::to_string(lambda0.minCoeff()) + " below -1e-10");
  }
  if (std::abs(lambda0.sum() - 1.0) > 1e-10) {
    throw QllgError("reference spectrum sums to " +
                    std::to_string(lambda0.sum()) + ", expected 1");
  }
  return lambda0;
}

TrajectoryRecord integrate(const ComplexMatrix& rho0, const QllgContext& ctx,
                           const IntegratorConfig& config,
                           const std::vector<Observer>& observers) {
  if (config.t_final < 0) {
    throw std::invalid_argument("integrate: t_final must be >= 0");
  }
  if (config.t_final > 0 && !(config.time_step > 0)) {
    throw std::invalid_argument("integrate: time_step must be positive");
  }
  if (config.sample_stride < 1) {
    throw std::invalid_argument("integrate: sample_stride must be >= 1");
  }

  const double h = config.time_step;
  const double t_final = config.t_final;
  long full_steps = 0;
  bool truncated = false;
  double remainder = 0.0;
  if (t_final > 0) {
    full_steps = static_cast<long>(std::floor(t_final / h + 1e-9));
    remainder = t_final - static_cast<double>(full_steps) * h;
    truncated = remainder > 1e-9 * h;
  }
  const long total_steps = full_steps + (truncated ? 1 : 0);

  RealVector lambda0;
  if (config.conservative) lambda0 = reference_spectrum(rho0);
  const RhsFn rhs = [&ctx](const ComplexMatrix& m) { return qllg_rhs(m, ctx); };

  TrajectoryRecord record;
  record.observable_names.reserve(observers.size());
  for (const Observer& obs : observers)
    record.observable_names.push_back(obs.name);

  ComplexMatrix rho = rho0;
  auto sample = [&](double t) {
    record.times.push_back(t);
    record.diagnostics.push_back(diagnostics(rho));
    std::vector<double> values;
    values.reserve(observers.size());
    for (const Observer& obs : observers) values.push_back(obs.evaluate(rho));
    record.observables.push_back(std::move(values));
  };

  sample(0.0);
  for (long k = 1; k <= total_steps; ++k) {
    const bool last = (k == total_steps);
    const double step = (last && truncated) ? remainder : h;
    rho = config.conservative
              ? conservative_rk_step(rho, step, config.tableau, lambda0, rhs)
              : rk_step(rho, step, config.tableau, rhs);
    if (!rho.allFinite() || rho.norm() > 1e6) {
      record.aborted = true;
      record.abort_reason =
          "numerical blow-up at step " + std::to_string(k) + " (t ~= " +
          std::to_string(static_cast<double>(k) * h) + " ps)";
      break;
    }
    if (k % config.sample_stride == 0 || last) {
      sample(last ? t_final : static_cast<double>(k) * h);
    }
  }
  record.final_state = std::move(rho);
  return record;
}

}  // namespace qllg
