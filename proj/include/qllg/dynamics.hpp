#ifndef QLLG_DYNAMICS_HPP
#define QLLG_DYNAMICS_HPP

#include "qllg/linalg.hpp"

namespace qllg {

/// Fixed data of one dynamical problem: Hamiltonian (meV), dimensionless
/// damping rate kappa >= 0, and hbar (meV*ps).
struct QllgContext {
  ComplexMatrix hamiltonian;
  double kappa = 0.5;
  double hbar = 0.658;
};

/// Solves (I+S)X - XS = D entrywise for diagonal S = diag(s):
/// X_jl = D_jl / (1 + s_j - s_l). The denominators cannot vanish for
/// s = -i*kappa*lambda with real kappa and lambda; a defensive check throws
/// SingularDenominatorError below |1 + s_j - s_l| = 1e-14.
ComplexMatrix sylvester_diagonal_solve(const ComplexVector& s,
                                       const ComplexMatrix& d);

/// Right-hand side f(rho) of the damped evolution, evaluated by spectral
/// decomposition: rho = V L V*, s_l = -i*kappa*lambda_l,
/// D = (i/hbar) V* [rho,H] V (Hermitized), X from the diagonal Sylvester
/// solve, f = V X V* (Hermitized). f is trace-free and satisfies
/// f = (i/hbar)[rho,H] + i*kappa*[rho,f].
ComplexMatrix qllg_rhs(const ComplexMatrix& rho, const QllgContext& ctx);

}  // namespace qllg

#endif  // QLLG_DYNAMICS_HPP
