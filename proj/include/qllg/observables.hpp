#ifndef QLLG_OBSERVABLES_HPP
#define QLLG_OBSERVABLES_HPP

#include <string>
#include <vector>

#include "qllg/integrators.hpp"
#include "qllg/linalg.hpp"
#include "qllg/spin_model.hpp"

namespace qllg {

/// Tr(A rho) for Hermitian A. The imaginary part is checked against
/// max(1e-9, 1e-11*|value|) and discarded; a larger one throws
/// NonNegligibleImaginaryPartError since it indicates a Hermiticity
/// violation upstream.
double expectation(const ComplexMatrix& a, const ComplexMatrix& rho);

/// (1/n) sum_i S_i^v
ComplexMatrix magnetization_operator(const SpinOperators& ops, Axis v);

/// <M_v> in meV*ps units.
double magnetization(const ComplexMatrix& rho, const SpinOperators& ops,
                     Axis v);

/// Spin-flipped two-qubit state (sigma_y x sigma_y) conj(rho) (sigma_y x
/// sigma_y), conjugation in the computational basis.
ComplexMatrix spin_flip(const ComplexMatrix& rho2);

/// Wootters concurrence of a two-qubit density matrix:
/// C = max{0, l1 - l2 - l3 - l4} with l_k the decreasing square roots of the
/// eigenvalues of rho*spin_flip(rho), computed through the Hermitian form
/// sqrt(rho)*spin_flip(rho)*sqrt(rho).
double concurrence(const ComplexMatrix& rho2);

/// Concurrence of the reduced state of sites (k,l), 1 <= k < l <= n.
double two_spin_concurrence(const ComplexMatrix& rho, int n, int k, int l);

/// One requested trajectory observable.
struct ObservableSpec {
  enum class Kind {
    Energy,
    MagnetizationX,
    MagnetizationY,
    MagnetizationZ,
    Concurrence,
    TracePower,
  };
  Kind kind = Kind::Energy;
  int site_k = 1, site_l = 2;  // Concurrence only
  int power = 2;               // TracePower only, in {1,2,3}

  /// CSV column name: energy_meV, mag_x, mag_y, mag_z, concurrence_<k>_<l>,
  /// trace_power_<m>.
  std::string column_name() const;

  /// Parses a column-style token ("energy", "magnetization_x",
  /// "concurrence_1_2", "trace_power_2"). Throws ConfigError on anything
  /// else.
  static ObservableSpec parse(const std::string& token);
};

/// Builds trajectory observers for the given specs. The Hamiltonian is
/// needed for Kind::Energy, the spin operators for the magnetizations.
std::vector<Observer> make_observers(const std::vector<ObservableSpec>& specs,
                                     const ComplexMatrix& hamiltonian,
                                     const SpinOperators& ops, int n_sites);

}  // namespace qllg

#endif  // QLLG_OBSERVABLES_HPP
