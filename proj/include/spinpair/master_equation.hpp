#pragma once

#include "spinpair/params.hpp"
#include "spinpair/spin_algebra.hpp"

namespace spinpair {

// Superoperator on Liouville space, acting on column-stacked density
// matrices: vec(rho)[i + 4j] = rho(i, j).
using Superoperator = Eigen::Matrix<Complex, 16, 16>;
using Vec16 = Eigen::Vector<Complex, 16>;

Vec16 vectorize(const Operator& m);
Operator devectorize(const Vec16& v);

// rho -> A rho  and  rho -> rho B in the column-stacking convention.
Superoperator left_multiplier(const Operator& a);
Superoperator right_multiplier(const Operator& b);

// rho -> -i [h, rho]
Superoperator hamiltonian_superop(const Operator& h);

// rho -> L rho L^dag - 1/2 {L^dag L, rho}
Superoperator lindblad_term(const Operator& jump);

// Coherent part: secular dipolar term + environment-induced shift +
// dipolar second-order shift.  Hermitian.
Operator build_coherent_part(const Model& m);

// System-environment dissipator.  The (1 + M0) sector pumps toward spin-up
// (our sigma_z = +1 basis state), so the local steady state carries
// polarization +M0; cross terms (acting on different qubits) carry alpha.
Superoperator build_dissipator_D(const Model& m);

// Second-order dipolar dissipator: one Lindblad channel per tensor order m,
// jump operator T2_{-m}, rate kappa_{|m|}; only the secular pairs
// {0,0}, {-1,1}, {-2,2} appear.
Superoperator build_dissipator_Q(const RateSet& r);

// Full generator: -i[H_coh, .] + D + Q.
Superoperator assemble_liouvillian(const Model& m);

namespace calibration {

// The rate set produced by compute_rates() is defined through the bare
// spherical-harmonic coefficients omega_dm, while the tensors T2_m carry the
// uniform Clebsch-Gordan normalization.  These constants fix the
// correspondence between the two choices so that the generator drives the
// observable-space block equations exactly as build_block_system() states
// them; the equivalence is enforced by the cross-representation tests.
inline constexpr double kSecularShift = -4.89897948556635619639;  // -2 sqrt(6)
inline constexpr double kQWeight[3] = {48.0, 8.0, 8.0};           // per |m|
inline constexpr double kDdsWeight[2] = {4.0, -4.0};              // m = 1, 2

}  // namespace calibration

}  // namespace spinpair
