#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace spinpair {

using Complex = std::complex<double>;

// Dense operator on the two-qubit Hilbert space. Basis ordering is
// |q1 q2> with |0> = spin-up (sigma_z eigenvalue +1), index order
// 00, 01, 10, 11.
using Operator = Eigen::Matrix4cd;

enum class PauliAxis { X, Y, Z, Plus, Minus };

// Orientation of the inter-qubit vector relative to the polarization axis.
struct AngularConfig {
  double theta = 0.0;  // polar angle, radians, [0, pi]
  double phi = 0.0;    // azimuthal angle, radians, [0, 2pi)
};

// Single-qubit Pauli matrix; Plus/Minus are (sigma_x +- i sigma_y)/2.
Eigen::Matrix2cd pauli_matrix(PauliAxis axis);

// Embedding on qubit 1 (op (x) 1) or qubit 2 (1 (x) op).
Operator pauli(PauliAxis axis, int qubit);

// Rank-2 spherical harmonic Y^2_m(theta, phi), orthonormalized physics
// convention with Condon-Shortley phase. m in {-2..2}.
Complex spherical_harmonic_y2(int m, const AngularConfig& ang);

// Two-spin-1/2 irreducible spherical tensor of rank 2, order m.
//
// Normalization: Clebsch-Gordan coupled product of the two spin vectors,
// so the multiplet is uniform, Tr[T2_m T2_m^dag] = 1/4 for every m, and
// (T2_m)^dag = (-1)^m T2_{-m}.  Explicitly (with I = sigma/2):
//   T2_{+-2} = I_{+-} I_{+-}
//   T2_{+-1} = -+ (I_{+-} I_z + I_z I_{+-}) / sqrt(2)
//   T2_0     = (3 I_z I_z - I.I) / sqrt(6)
Operator build_t2(int m);

struct DipolarHamiltonian {
  Operator h;                        // sum_m omega_dm * T2_m, Hermitian
  std::array<Complex, 5> omega_dm;   // coefficient of T2_m at index m + 2
};

// H = sum_m (-1)^m Y^2_{-m}(theta, phi) omega_d T2_m.
DipolarHamiltonian dipolar_hamiltonian(double omega_d, const AngularConfig& ang);

}  // namespace spinpair
