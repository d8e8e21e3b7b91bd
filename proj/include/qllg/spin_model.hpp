#ifndef QLLG_SPIN_MODEL_HPP
#define QLLG_SPIN_MODEL_HPP

#include <array>
#include <vector>

#include "qllg/linalg.hpp"

namespace qllg {

/// Default constants: hbar in meV*ps, Bohr magneton in meV/T, Lande g-factor.
struct PhysicalConstants {
  double hbar = 0.658;   // meV*ps
  double mu_B = 5.8e-2;  // meV/T
  double g = 2.0;
  /// Gyromagnetic prefactor mu = -mu_B*g/hbar in 1/(T*ps).
  double mu() const { return -mu_B * g / hbar; }
};

enum class Axis { X = 0, Y = 1, Z = 2 };

ComplexMatrix pauli_matrix(Axis v);

enum class LatticeGeometry { Triangular, Pair };

struct LatticeSpec {
  LatticeGeometry geometry = LatticeGeometry::Triangular;
  int rows = 3;
  int cols = 3;
  bool periodic = true;
  int site_count() const {
    return geometry == LatticeGeometry::Pair ? 2 : rows * cols;
  }
};

enum class DmiMode { InplanePerp, ZAligned };

/// Undirected lattice bond, stored once with i < j (1-based sites). The DMI
/// vector is the one for the stored (i,j) orientation; the opposite
/// orientation carries -d_vector.
struct Bond {
  int i = 0;
  int j = 0;
  Eigen::Vector3d d_vector = Eigen::Vector3d::Zero();  // meV
};

struct HamiltonianSpec {
  double exchange_J = 1.0;     // meV; J > 0 antiferromagnetic, J < 0 ferromagnetic
  double dmi_magnitude = 0.8;  // meV
  DmiMode dmi_mode = DmiMode::InplanePerp;
  double dmi_sign = 1.0;  // +1 or -1, selects the DMI chirality
  Eigen::Vector3d field_B = Eigen::Vector3d(0, 0, 1);  // Tesla
  LatticeSpec lattice;
  PhysicalConstants constants;
};

/// The full set of spin-1/2 operators S_i^v = I x ... x (hbar/2) sigma_v x
/// ... x I for every site, in meV*ps units. Site 1 is the leftmost
/// (most significant) tensor factor.
class SpinOperators {
 public:
  SpinOperators(int sites, std::vector<std::array<ComplexMatrix, 3>> ops)
      : sites_(sites), ops_(std::move(ops)) {}

  int sites() const { return sites_; }
  Eigen::Index dim() const { return ops_.front()[0].rows(); }

  /// S_site^v, 1-based site index.
  const ComplexMatrix& at(int site, Axis v) const;

 private:
  int sites_;
  std::vector<std::array<ComplexMatrix, 3>> ops_;
};

/// Assembles all 3n spin operators for an n-site register (1 <= n <= 12).
SpinOperators build_spin_operators(int n, const PhysicalConstants& constants = {});

/// Nearest-neighbour bond list with DMI vectors. Triangular geometry
/// connects grid offsets (1,0), (0,1), (1,1); pair geometry is the single
/// bond (1,2). In inplane_perp mode d = sign*|D|*(z x r_ij); in z_aligned
/// mode d = sign*|D|*(0,0,1).
std::vector<Bond> build_bonds(const LatticeSpec& lattice, double dmi_magnitude,
                              DmiMode mode, double dmi_sign = 1.0);

/// H = (2J/hbar^2) sum_b S_i.S_j + (2/hbar^2) sum_b d_b.(S_i x S_j)
///   - mu sum_i B.S_i, summed once per unordered bond. Units meV.
ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec,
                                const SpinOperators& ops,
                                const std::vector<Bond>& bonds);

/// Antiferromagnetic product state |AF_variant>, variant in {1,2}:
/// AF_1 = |0101...>, AF_2 = |1010...>.
ComplexVector af_state(int variant, int n);

/// (|0...0> + |1...1>)/sqrt(2)
ComplexVector ghz_state(int n);

/// Normalized X|0...0> with X = (2/(hbar sqrt(n))) sum_i S_i^x: the uniform
/// single-flip superposition.
ComplexVector w_state(int n);

/// Mixing weights over {I/2^n, AF1, AF2, GHZ, W}.
struct InitialStateSpec {
  std::array<double, 5> p = {1.0, 0.0, 0.0, 0.0, 0.0};
};

ComplexMatrix build_initial_state(const InitialStateSpec& spec, int n);

}  // namespace qllg

#endif  // QLLG_SPIN_MODEL_HPP
