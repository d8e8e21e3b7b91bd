#include "qllg/dynamics.hpp"

#include <string>

namespace qllg {

namespace {
const Complex kI(0.0, 1.0);
}

ComplexMatrix sylvester_diagonal_solve(const ComplexVector& s,
                                       const ComplexMatrix& d) {
  const Eigen::Index n = d.rows();
  if (d.cols() != n || s.size() != n) {
    throw DimensionMismatchError("sylvester_diagonal_solve: dims disagree");
  }
  ComplexMatrix x(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex denom = 1.0 + s(j) - s(l);
      if (std::abs(denom) <= 1e-14) {
        throw SingularDenominatorError(
            "sylvester_diagonal_solve: |1 + s_j - s_l| = " +
            std::to_string(std::abs(denom)) + " at (j,l)=(" +
            std::to_string(j) + "," + std::to_string(l) + ")");
      }
      x(j, l) = d(j, l) / denom;
    }
  }
  return x;
}

ComplexMatrix qllg_rhs(const ComplexMatrix& rho, const QllgContext& ctx) {
  const Eigen::Index n = rho.rows();
  if (ctx.hamiltonian.rows() != n || ctx.hamiltonian.cols() != n ||
      rho.cols() != n) {
    throw DimensionMismatchError("qllg_rhs: rho and H dims disagree");
  }

  const SpectralDecomposition eig = hermitian_eigendecomposition(rho);
  const ComplexMatrix& v = eig.eigenvectors;

  const ComplexMatrix comm = commutator(rho, ctx.hamiltonian);
  ComplexMatrix tmp;
  tmp.noalias() = v.adjoint() * comm;
  ComplexMatrix d;
  d.noalias() = tmp * v;
  d *= kI / ctx.hbar;
  // [rho,H] is skew-Hermitian, so D is Hermitian up to rounding; enforcing
  // it keeps the Sylvester solution exactly Hermitian.
  d = hermitian_part(d);

  ComplexVector s(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    s(l) = -kI * ctx.kappa * eig.eigenvalues(l);
  }

  const ComplexMatrix x = sylvester_diagonal_solve(s, d);
  tmp.noalias() = v * x;
  ComplexMatrix f;
  f.noalias() = tmp * v.adjoint();
  return hermitian_part(f);
}

}  // namespace qllg
