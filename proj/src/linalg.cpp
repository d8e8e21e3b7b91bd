#include "qllg/linalg.hpp"

#include <lapacke.h>

#include <cmath>
#include <string>

namespace qllg {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatchError(std::string(who) + ": matrix is not square (" +
                                 std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + ")");
  }
}

// Rotate each column so its largest-magnitude entry is real and
// non-negative; ties resolved by the lowest row index.
void fix_column_phases(ComplexMatrix& v) {
  const Eigen::Index n = v.rows();
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    Eigen::Index pivot = 0;
    double best = std::abs(v(0, k));
    for (Eigen::Index i = 1; i < n; ++i) {
      const double mag = std::abs(v(i, k));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best <= 0.0) continue;  // cannot happen for a unitary matrix
    const Complex phase = v(pivot, k) / best;
    v.col(k) *= std::conj(phase);
    v(pivot, k) = Complex(std::abs(v(pivot, k)), 0.0);
  }
}

}  // namespace

SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& a) {
  require_square(a, "hermitian_eigendecomposition");
  if (!is_hermitian(a)) {
    throw std::invalid_argument(
        "hermitian_eigendecomposition: input is not Hermitian within "
        "tolerance (residual " +
        std::to_string(hermiticity_residual(a)) + ")");
  }
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SpectralDecomposition out;
  out.eigenvectors = a;
  out.eigenvalues.resize(n);
  // zheevd reads the lower triangle and returns eigenvalues in ascending
  // order with orthonormal eigenvectors.
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', n,
      reinterpret_cast<lapack_complex_double*>(out.eigenvectors.data()), n,
      out.eigenvalues.data());
  if (info > 0) {
    throw NonConvergenceError(
        "hermitian_eigendecomposition: zheevd failed to converge (info=" +
        std::to_string(info) + ")");
  }
  if (info < 0) {
    throw std::invalid_argument(
        "hermitian_eigendecomposition: illegal zheevd argument " +
        std::to_string(-info));
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   int dim_cap) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > dim_cap || cols > dim_cap) {
    throw DimensionOverflowError(
        "kron: product dimension " + std::to_string(rows) + "x" +
        std::to_string(cols) + " exceeds cap " + std::to_string(dim_cap));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < a.rows(); ++j)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(j * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(j, k) * b;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionMismatchError("commutator: operands must be square with equal dims");
  }
  ComplexMatrix ab;
  ab.noalias() = a * b;
  ComplexMatrix ba;
  ba.noalias() = b * a;
  return ab - ba;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_sites, int site_k,
                            int site_l) {
  require_square(rho, "partial_trace");
  if (n_sites < 2 || rho.rows() != (Eigen::Index{1} << n_sites)) {
    throw DimensionMismatchError("partial_trace: dim(rho) != 2^n_sites");
  }
  if (site_k < 1 || site_l <= site_k || site_l > n_sites) {
    throw IndexOutOfRangeError("partial_trace: need 1 <= k < l <= n, got (" +
                               std::to_string(site_k) + "," +
                               std::to_string(site_l) + ")");
  }
  // Site i occupies bit (n - i); site 1 is the most significant bit.
  const int bit_k = n_sites - site_k;
  const int bit_l = n_sites - site_l;
  const long n_rest = 1L << (n_sites - 2);

  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    const long ak = (a >> 1) & 1, al = a & 1;
    for (int b = 0; b < 4; ++b) {
      const long bk = (b >> 1) & 1, bl = b & 1;
      Complex sum = 0.0;
      for (long rest = 0; rest < n_rest; ++rest) {
        // Spread the bits of `rest` over every position except bit_k, bit_l.
        long base = 0;
        long src = rest;
        for (int bit = 0; bit < n_sites; ++bit) {
          if (bit == bit_k || bit == bit_l) continue;
          base |= (src & 1) << bit;
          src >>= 1;
        }
        const long row = base | (ak << bit_k) | (al << bit_l);
        const long col = base | (bk << bit_k) | (bl << bit_l);
        sum += rho(row, col);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

StateDiagnostics diagnostics(const ComplexMatrix& rho) {
  require_square(rho, "diagnostics");
  StateDiagnostics d;
  d.trace = rho.trace().real();
  d.trace_sq = trace_of_product(rho, rho).real();
  ComplexMatrix rho_sq;
  rho_sq.noalias() = rho * rho;
  d.trace_cube = trace_of_product(rho_sq, rho).real();
  d.hermiticity_residual = hermiticity_residual(rho);
  const SpectralDecomposition eig =
      hermitian_eigendecomposition(hermitian_part(rho));
  d.min_eigenvalue = eig.eigenvalues(0);
  return d;
}

double hermiticity_residual(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_residual_fro(const ComplexMatrix& a) {
  return (a - a.adjoint()).norm();
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  return hermiticity_residual(a) <= rel_tol * std::max(1.0, a.norm());
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return 0.5 * (a + a.adjoint());
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionMismatchError("trace_of_product: incompatible dims");
  }
  // Tr(AB) = sum_jk A_jk B_kj
  return (a.transpose().cwiseProduct(b)).sum();
}

void validate_density_matrix(const ComplexMatrix& rho) {
  require_square(rho, "validate_density_matrix");
  if (!rho.allFinite()) {
    throw QllgError("density matrix has non-finite entries");
  }
  if (!is_hermitian(rho)) {
    throw QllgError("density matrix is not Hermitian within tolerance");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw QllgError("density matrix trace " + std::to_string(tr) +
                    " deviates from 1 by more than 1e-12");
  }
  const SpectralDecomposition eig =
      hermitian_eigendecomposition(hermitian_part(rho));
  if (eig.eigenvalues(0) < -1e-10) {
    throw QllgError("density matrix min eigenvalue " +
                    std::to_string(eig.eigenvalues(0)) + " below -1e-10");
  }
}

}  // namespace qllg
