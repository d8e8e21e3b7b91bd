#include "qllg/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qllg {

double expectation(const ComplexMatrix& a, const ComplexMatrix& rho) {
  if (a.rows() != rho.rows() || a.cols() != rho.cols()) {
    throw DimensionMismatchError("expectation: operator/state dims disagree");
  }
  const Complex value = trace_of_product(a, rho);
  const double threshold = std::max(1e-9, 1e-11 * std::abs(value.real()));
  if (std::abs(value.imag()) > threshold) {
    throw NonNegligibleImaginaryPartError(
        "expectation: imaginary part " + std::to_string(value.imag()) +
        " exceeds threshold " + std::to_string(threshold));
  }
  return value.real();
}

ComplexMatrix magnetization_operator(const SpinOperators& ops, Axis v) {
  ComplexMatrix m = ops.at(1, v);
  for (int site = 2; site <= ops.sites(); ++site) m += ops.at(site, v);
  return m / static_cast<double>(ops.sites());
}

double magnetization(const ComplexMatrix& rho, const SpinOperators& ops,
                     Axis v) {
  return expectation(magnetization_operator(ops, v), rho);
}

ComplexMatrix spin_flip(const ComplexMatrix& rho2) {
  if (rho2.rows() != 4 || rho2.cols() != 4) {
    throw DimensionMismatchError("spin_flip: expected a 4x4 matrix");
  }
  static const ComplexMatrix yy = [] {
    const ComplexMatrix sy = pauli_matrix(Axis::Y);
    return kron(sy, sy);
  }();
  ComplexMatrix tmp;
  tmp.noalias() = yy * rho2.conjugate();
  ComplexMatrix out;
  out.noalias() = tmp * yy;
  return out;
}

double concurrence(const ComplexMatrix& rho2) {
  if (rho2.rows() != 4 || rho2.cols() != 4) {
    throw DimensionMismatchError("concurrence: expected a 4x4 matrix");
  }
  const ComplexMatrix flipped = spin_flip(rho2);

  // Eigenvalues of rho * rho_tilde equal those of the PSD matrix
  // sqrt(rho) * rho_tilde * sqrt(rho).
  const SpectralDecomposition eig =
      hermitian_eigendecomposition(hermitian_part(rho2));
  ComplexMatrix sqrt_rho = eig.eigenvectors;
  for (Eigen::Index k = 0; k < 4; ++k) {
    sqrt_rho.col(k) *= std::sqrt(std::max(eig.eigenvalues(k), 0.0));
  }
  ComplexMatrix root;
  root.noalias() = sqrt_rho * eig.eigenvectors.adjoint();

  ComplexMatrix tmp;
  tmp.noalias() = root * flipped;
  ComplexMatrix r;
  r.noalias() = tmp * root;
  const SpectralDecomposition eig_r =
      hermitian_eigendecomposition(hermitian_part(r));

  // Ascending eigenvalues; rounding residues below zero are clipped.
  double lambda[4];
  for (int k = 0; k < 4; ++k) {
    lambda[k] = std::sqrt(std::max(eig_r.eigenvalues(3 - k), 0.0));
  }
  double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  c = std::max(0.0, c);
  if (c > 1.0 + 1e-10) {
    throw QllgError("concurrence: value " + std::to_string(c) +
                    " exceeds 1; input is not a valid density matrix");
  }
  return std::min(c, 1.0);
}

double two_spin_concurrence(const ComplexMatrix& rho, int n, int k, int l) {
  return concurrence(partial_trace(rho, n, k, l));
}

std::string ObservableSpec::column_name() const {
  switch (kind) {
    case Kind::Energy:
      return "energy_meV";
    case Kind::MagnetizationX:
      return "mag_x";
    case Kind::MagnetizationY:
      return "mag_y";
    case Kind::MagnetizationZ:
      return "mag_z";
    case Kind::Concurrence:
      return "concurrence_" + std::to_string(site_k) + "_" +
             std::to_string(site_l);
    case Kind::TracePower:
      return "trace_power_" + std::to_string(power);
  }
  return "unknown";
}

ObservableSpec ObservableSpec::parse(const std::string& token) {
  ObservableSpec spec;
  if (token == "energy") {
    spec.kind = Kind::Energy;
    return spec;
  }
  if (token == "magnetization_x") {
    spec.kind = Kind::MagnetizationX;
    return spec;
  }
  if (token == "magnetization_y") {
    spec.kind = Kind::MagnetizationY;
    return spec;
  }
  if (token == "magnetization_z") {
    spec.kind = Kind::MagnetizationZ;
    return spec;
  }
  auto parse_int = [&](const std::string& text) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size()) {
      throw ConfigError("observables: bad token '" + token + "'");
    }
    return value;
  };
  if (token.rfind("concurrence_", 0) == 0) {
    const std::string rest = token.substr(12);
    const size_t sep = rest.find('_');
    if (sep == std::string::npos) {
      throw ConfigError("observables: expected concurrence_<k>_<l>, got '" +
                        token + "'");
    }
    spec.kind = Kind::Concurrence;
    spec.site_k = parse_int(rest.substr(0, sep));
    spec.site_l = parse_int(rest.substr(sep + 1));
    return spec;
  }
  if (token.rfind("trace_power_", 0) == 0) {
    spec.kind = Kind::TracePower;
    spec.power = parse_int(token.substr(12));
    if (spec.power < 1 || spec.power > 3) {
      throw ConfigError("observables: trace_power_<m> needs m in {1,2,3}");
    }
    return spec;
  }
  throw ConfigError("observables: unknown observable '" + token + "'");
}

std::vector<Observer> make_observers(const std::vector<ObservableSpec>& specs,
                                     const ComplexMatrix& hamiltonian,
                                     const SpinOperators& ops, int n_sites) {
  std::vector<Observer> observers;
  observers.reserve(specs.size());
  for (const ObservableSpec& spec : specs) {
    Observer obs;
    obs.name = spec.column_name();
    switch (spec.kind) {
      case ObservableSpec::Kind::Energy: {
        ComplexMatrix h = hamiltonian;
        obs.evaluate = [h = std::move(h)](const ComplexMatrix& rho) {
          return expectation(h, rho);
        };
        break;
      }
      case ObservableSpec::Kind::MagnetizationX:
      case ObservableSpec::Kind::MagnetizationY:
      case ObservableSpec::Kind::MagnetizationZ: {
        const Axis axis =
            spec.kind == ObservableSpec::Kind::MagnetizationX   ? Axis::X
            : spec.kind == ObservableSpec::Kind::MagnetizationY ? Axis::Y
                                                                : Axis::Z;
        ComplexMatrix m = magnetization_operator(ops, axis);
        obs.evaluate = [m = std::move(m)](const ComplexMatrix& rho) {
          return expectation(m, rho);
        };
        break;
      }
      case ObservableSpec::Kind::Concurrence: {
        if (spec.site_k < 1 || spec.site_l <= spec.site_k ||
            spec.site_l > n_sites) {
          throw ConfigError("observables: concurrence pair (" +
                            std::to_string(spec.site_k) + "," +
                            std::to_string(spec.site_l) +
                            ") out of range for n=" + std::to_string(n_sites));
        }
        const int n = n_sites, k = spec.site_k, l = spec.site_l;
        obs.evaluate = [n, k, l](const ComplexMatrix& rho) {
          return two_spin_concurrence(rho, n, k, l);
        };
        break;
      }
      case ObservableSpec::Kind::TracePower: {
        const int power = spec.power;
        obs.evaluate = [power](const ComplexMatrix& rho) {
          if (power == 1) return rho.trace().real();
          if (power == 2) return trace_of_product(rho, rho).real();
          ComplexMatrix sq;
          sq.noalias() = rho * rho;
          return trace_of_product(sq, rho).real();
        };
        break;
      }
    }
    observers.push_back(std::move(obs));
  }
  return observers;
}

}  // namespace qllg
