#include "qllg/spin_model.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace qllg {

namespace {

constexpr int kMaxSites = 12;
const Complex kI(0.0, 1.0);

void require_site_count(int n) {
  if (n < 1) throw InvalidLatticeError("site count must be >= 1");
  if (n > kMaxSites) {
    throw DimensionOverflowError("site count " + std::to_string(n) +
                                 " exceeds the dense cap of " +
                                 std::to_string(kMaxSites) + " sites");
  }
}

Eigen::Index dim_of(int n) { return Eigen::Index{1} << n; }

}  // namespace

ComplexMatrix pauli_matrix(Axis v) {
  ComplexMatrix s(2, 2);
  switch (v) {
    case Axis::X:
      s << 0, 1, 1, 0;
      break;
    case Axis::Y:
      s << 0, -kI, kI, 0;
      break;
    case Axis::Z:
      s << 1, 0, 0, -1;
      break;
  }
  return s;
}

const ComplexMatrix& SpinOperators::at(int site, Axis v) const {
  if (site < 1 || site > sites_) {
    throw IndexOutOfRangeError("SpinOperators::at: site " +
                               std::to_string(site) + " outside 1.." +
                               std::to_string(sites_));
  }
  return ops_[site - 1][static_cast<int>(v)];
}

SpinOperators build_spin_operators(int n, const PhysicalConstants& constants) {
  require_site_count(n);
  std::vector<std::array<ComplexMatrix, 3>> ops(n);
  for (int site = 1; site <= n; ++site) {
    const Eigen::Index left = dim_of(site - 1);
    const Eigen::Index right = dim_of(n - site);
    for (int v = 0; v < 3; ++v) {
      const ComplexMatrix local =
          0.5 * constants.hbar * pauli_matrix(static_cast<Axis>(v));
      ComplexMatrix op = kron(local, ComplexMatrix::Identity(right, right));
      op = kron(ComplexMatrix::Identity(left, left), op);
      ops[site - 1][v] = std::move(op);
    }
  }
  return SpinOperators(n, std::move(ops));
}

std::vector<Bond> build_bonds(const LatticeSpec& lattice, double dmi_magnitude,
                              DmiMode mode, double dmi_sign) {
  if (dmi_magnitude < 0) {
    throw InvalidLatticeError("dmi_magnitude must be >= 0");
  }
  const Eigen::Vector3d z_axis(0, 0, 1);

  if (lattice.geometry == LatticeGeometry::Pair) {
    Bond b;
    b.i = 1;
    b.j = 2;
    if (mode == DmiMode::ZAligned) {
      b.d_vector = dmi_sign * dmi_magnitude * z_axis;
    } else {
      // Bond direction x; perpendicular in-plane normal is y.
      b.d_vector = dmi_sign * dmi_magnitude * Eigen::Vector3d(0, 1, 0);
    }
    return {b};
  }

  if (lattice.rows < 1 || lattice.cols < 1) {
    throw InvalidLatticeError("lattice dims must be positive, got " +
                              std::to_string(lattice.rows) + "x" +
                              std::to_string(lattice.cols));
  }
  require_site_count(lattice.site_count());

  // Triangular lattice embedded on the index grid: a column step is the
  // Cartesian vector (1,0) and a row step is (-1/2, sqrt(3)/2), so all three
  // neighbour offsets (1,0), (0,1), (1,1) have unit length.
  const Eigen::Vector2d col_step(1.0, 0.0);
  const Eigen::Vector2d row_step(-0.5, std::sqrt(3.0) / 2.0);
  constexpr int offsets[3][2] = {{1, 0}, {0, 1}, {1, 1}};

  auto site_index = [&](int r, int c) { return r * lattice.cols + c + 1; };

  std::vector<Bond> bonds;
  std::set<std::pair<int, int>> seen;
  for (int r = 0; r < lattice.rows; ++r) {
    for (int c = 0; c < lattice.cols; ++c) {
      for (const auto& off : offsets) {
        int r2 = r + off[0];
        int c2 = c + off[1];
        if (lattice.periodic) {
          r2 = (r2 + lattice.rows) % lattice.rows;
          c2 = (c2 + lattice.cols) % lattice.cols;
        } else if (r2 >= lattice.rows || c2 >= lattice.cols) {
          continue;
        }
        const int s = site_index(r, c);
        const int t = site_index(r2, c2);
        if (s == t) continue;  // wrap collapsed the offset (1- or 2-wide grid)
        const auto key = std::minmax(s, t);
        if (!seen.insert(key).second) continue;

        Bond b;
        b.i = key.first;
        b.j = key.second;
        if (mode == DmiMode::ZAligned) {
          b.d_vector = dmi_sign * dmi_magnitude * z_axis;
        } else {
          // Geometric displacement of the traversed offset, reoriented so it
          // points from the stored i to the stored j.
          Eigen::Vector2d step = off[0] * row_step + off[1] * col_step;
          if (t < s) step = -step;
          step.normalize();
          const Eigen::Vector3d dir(step.x(), step.y(), 0.0);
          b.d_vector = dmi_sign * dmi_magnitude * z_axis.cross(dir);
        }
        bonds.push_back(std::move(b));
      }
    }
  }
  return bonds;
}

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec,
                                const SpinOperators& ops,
                                const std::vector<Bond>& bonds) {
  const Eigen::Index dim = ops.dim();
  const double hbar = spec.constants.hbar;
  const double exchange_scale = 2.0 * spec.exchange_J / (hbar * hbar);
  const double dmi_scale = 2.0 / (hbar * hbar);

  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix prod(dim, dim);
  for (const Bond& b : bonds) {
    if (b.i < 1 || b.j <= b.i || b.j > ops.sites()) {
      throw IndexOutOfRangeError("build_hamiltonian: bond (" +
                                 std::to_string(b.i) + "," +
                                 std::to_string(b.j) + ") out of range");
    }
    const ComplexMatrix& sx_i = ops.at(b.i, Axis::X);
    const ComplexMatrix& sy_i = ops.at(b.i, Axis::Y);
    const ComplexMatrix& sz_i = ops.at(b.i, Axis::Z);
    const ComplexMatrix& sx_j = ops.at(b.j, Axis::X);
    const ComplexMatrix& sy_j = ops.at(b.j, Axis::Y);
    const ComplexMatrix& sz_j = ops.at(b.j, Axis::Z);

    prod.noalias() = sx_i * sx_j;
    h += exchange_scale * prod;
    prod.noalias() = sy_i * sy_j;
    h += exchange_scale * prod;
    prod.noalias() = sz_i * sz_j;
    h += exchange_scale * prod;

    if (b.d_vector.squaredNorm() > 0.0) {
      // d . (S_i x S_j)
      prod.noalias() = sy_i * sz_j - sz_i * sy_j;
      h += dmi_scale * b.d_vector.x() * prod;
      prod.noalias() = sz_i * sx_j - sx_i * sz_j;
      h += dmi_scale * b.d_vector.y() * prod;
      prod.noalias() = sx_i * sy_j - sy_i * sx_j;
      h += dmi_scale * b.d_vector.z() * prod;
    }
  }

  const double mu = spec.constants.mu();
  for (int site = 1; site <= ops.sites(); ++site) {
    h -= mu * spec.field_B.x() * ops.at(site, Axis::X);
    h -= mu * spec.field_B.y() * ops.at(site, Axis::Y);
    h -= mu * spec.field_B.z() * ops.at(site, Axis::Z);
  }
  return h;
}

ComplexVector af_state(int variant, int n) {
  require_site_count(n);
  if (variant != 1 && variant != 2) {
    throw IndexOutOfRangeError("af_state: variant must be 1 or 2");
  }
  long index = 0;
  for (int site = 1; site <= n; ++site) {
    const long bit = (site + variant) % 2;
    index |= bit << (n - site);
  }
  ComplexVector v = ComplexVector::Zero(dim_of(n));
  v(index) = 1.0;
  return v;
}

ComplexVector ghz_state(int n) {
  require_site_count(n);
  ComplexVector v = ComplexVector::Zero(dim_of(n));
  const double amp = 1.0 / std::sqrt(2.0);
  v(0) = amp;
  v(dim_of(n) - 1) = amp;
  return v;
}

ComplexVector w_state(int n) {
  require_site_count(n);
  ComplexVector v = ComplexVector::Zero(dim_of(n));
  // sum_i S_i^x |0...0> puts weight (hbar/2) on each single-flip state; the
  // prefactor drops out under normalization.
  for (int site = 1; site <= n; ++site) {
    v(Eigen::Index{1} << (n - site)) = 1.0;
  }
  v.normalize();
  return v;
}

ComplexMatrix build_initial_state(const InitialStateSpec& spec, int n) {
  require_site_count(n);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    if (!(spec.p[i] >= 0.0 && spec.p[i] <= 1.0)) {
      throw InvalidProbabilityVectorError(
          "initial_state.p[" + std::to_string(i) + "] = " +
          std::to_string(spec.p[i]) + " outside [0,1]");
    }
    sum += spec.p[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidProbabilityVectorError(
        "initial_state.p sums to " + std::to_string(sum) +
        "; must sum to 1 within 1e-9");
  }

  const Eigen::Index dim = dim_of(n);
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  if (spec.p[0] > 0.0) {
    rho += (spec.p[0] / static_cast<double>(dim)) *
           ComplexMatrix::Identity(dim, dim);
  }
  const std::array<ComplexVector, 4> pure = {af_state(1, n), af_state(2, n),
                                             ghz_state(n), w_state(n)};
  for (int i = 0; i < 4; ++i) {
    if (spec.p[i + 1] > 0.0) {
      rho.noalias() += spec.p[i + 1] * (pure[i] * pure[i].adjoint());
    }
  }
  return rho;
}

}  // namespace qllg
