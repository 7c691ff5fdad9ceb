#pragma once

#include <Eigen/Dense>

#include "spinpair/master_equation.hpp"
#include "spinpair/params.hpp"
#include "spinpair/spin_algebra.hpp"

namespace spinpair {

// The 15 real expectation values that parameterize a two-qubit state:
//   M_a  = 1/2 Tr[(s_a x 1 + 1 x s_a) rho]          (symmetric single-spin)
//   A_a  = 1/2 Tr[(s_a x 1 - 1 x s_a) rho]          (antisymmetric)
//   M_ab = 1/4 Tr[(s_a x s_b + s_b x s_a) rho]      (a < b in x,y,z order)
//   A_ab = 1/4 Tr[(s_a x s_b - s_b x s_a) rho]
//   Mzz  = 1/4 Tr[(s_z x s_z) rho]
//   Mc   = Mxx + Myy,  Ac = Mxx - Myy
struct ObservableVector {
  double Mx = 0, My = 0, Mz = 0;
  double Ax = 0, Ay = 0, Az = 0;
  double Mxy = 0, Mxz = 0, Myz = 0;
  double Axy = 0, Axz = 0, Ayz = 0;
  double Mzz = 0, Mc = 0, Ac = 0;

  // Frozen block ordering used by the ODE system and all 15-vector I/O:
  //   (Mz, Mzz, Mc | Mx, My, Mxz, Myz | Mxy, Ac | Axy, Az | Ax, Ay, Axz, Ayz)
  Eigen::Vector<double, 15> block_vector() const;
  static ObservableVector from_block_vector(const Eigen::Vector<double, 15>& v);

  // Conserved combination Mxx + Myy + Mzz.
  double f_invariant() const { return Mc + Mzz; }

  // Largest magnitude among entries outside the (Mz, Mzz, Mc) block.
  double max_non_block1() const;
};

// Expectation values of a Hermitian unit-trace rho; rejects |Tr rho - 1| > 1e-10.
ObservableVector rho_to_observables(const Operator& rho);

// Unique unit-trace Hermitian reconstruction; positivity is not enforced.
Operator observables_to_rho(const ObservableVector& v);

// Named initial-state presets.
ObservableVector singlet_observables();        // Mzz = -1/4, Mc = -1/2
ObservableVector triplet_observables();        // Mzz = -1/4, Mc = +1/2
ObservableVector dipolar_order_observables();  // Mzz = -1/4
ObservableVector thermal_observables(double M0);
ObservableVector zero_observables();

// Block-diagonal form of the observable equations of motion,
// d/dt A = L A + B with B nonzero only in block 1.
struct BlockSystem {
  Eigen::Matrix3d L1;  // (Mz, Mzz, Mc)
  Eigen::Vector3d B1;
  Eigen::Matrix4d L2;  // (Mx, My, Mxz, Myz)
  Eigen::Matrix2d L3;  // (Mxy, Ac)
  Eigen::Matrix2d L4;  // (Axy, Az)
  Eigen::Matrix4d L5;  // (Ax, Ay, Axz, Ayz)

  Eigen::Matrix<double, 15, 15> full_matrix() const;
  Eigen::Vector<double, 15> inhomogeneity() const;

  // Same system with time measured in units of 1/J.
  BlockSystem scaled(double J) const;
};

BlockSystem build_block_system(const Model& m);

// Observable-space reduction of an arbitrary generator: the unique E, e with
// d/dt obs(rho) = E obs(rho) + e under d/dt rho = gen(rho).  Used to
// cross-check build_block_system against the Liouvillian.
void reduce_superoperator(const Superoperator& gen,
                          Eigen::Matrix<double, 15, 15>& E,
                          Eigen::Vector<double, 15>& e);

}  // namespace spinpair
