#ifndef QLLG_LINALG_HPP
#define QLLG_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "qllg/errors.hpp"

namespace qllg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Hard cap on dense matrix dimension (2^12 sites of spin-1/2).
inline constexpr int kDenseDimCap = 4096;

/// Eigensystem of a Hermitian matrix. Eigenvalues are sorted ascending and
/// each eigenvector column is phase-fixed so that its largest-magnitude
/// entry (lowest row index on ties) is real and non-negative. This makes the
/// decomposition a deterministic function of the input matrix.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // unitary; column k pairs with eigenvalues[k]
};

/// Full eigendecomposition of a Hermitian matrix (LAPACK zheevd).
/// Throws NonConvergenceError if the solver breaks down and
/// std::invalid_argument if the input is not Hermitian within tolerance.
SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& a);

/// Kronecker (tensor) product. Throws DimensionOverflowError if the product
/// dimension exceeds `dim_cap`.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   int dim_cap = kDenseDimCap);

/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced density matrix of the ordered site pair (site_k, site_l),
/// 1-based with site_k < site_l, obtained by tracing out every other site.
/// Site 1 is the most significant tensor factor, both in the full register
/// and in the returned 4x4 matrix (site_k becomes the leading qubit).
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_sites, int site_k,
                            int site_l);

struct StateDiagnostics {
  double trace = 0.0;
  double trace_sq = 0.0;
  double trace_cube = 0.0;
  double min_eigenvalue = 0.0;
  double hermiticity_residual = 0.0;  // max_jk |A_jk - conj(A_kj)|
};

/// Conservation diagnostics for a density matrix. Traces of powers are
/// computed directly from matrix entries; the minimum eigenvalue comes from
/// hermitian_eigendecomposition of the Hermitian part.
StateDiagnostics diagnostics(const ComplexMatrix& rho);

/// max_jk |A_jk - conj(A_kj)|
double hermiticity_residual(const ComplexMatrix& a);

/// ||A - A^dagger||_F
double hermiticity_residual_fro(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double rel_tol = 1e-12);

/// (A + A^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// Tr(A B) evaluated entrywise in O(N^2).
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Checks the density-matrix invariants (Hermitian, unit trace, eigenvalues
/// >= -1e-10) and throws a QllgError naming the violated one.
void validate_density_matrix(const ComplexMatrix& rho);

}  // namespace qllg

#endif  // QLLG_LINALG_HPP
