#pragma once

#include <array>

#include "spinpair/spin_algebra.hpp"

namespace spinpair {

// Physical entry mode: the environment enters only through J, delta_omega,
// M0 and alpha; the dipolar coupling through omega_d, the orientation and
// the fluctuation correlation time tau_c.
struct PhysicalParams {
  double J = 1.0;            // real part of the coupling spectral density, rate
  double delta_omega = 0.0;  // imaginary part (coherent shift strength), rate
  double M0 = 0.0;           // equilibrium polarization, dimensionless, |M0| <= 1
  double alpha = 0.0;        // environment commonness, [0, 1]
  double omega0 = 0.0;       // Larmor frequency, rate
  double tau_c = 1.0;        // fluctuation correlation time, time
  double omega_d = 0.0;      // dipolar coupling strength, rate
  AngularConfig ang;

  void validate() const;  // throws std::invalid_argument
};

// Second-order rates derived from the dipolar coupling.  kappa[m] and
// delta_kappa[m] are indexed by |m|; delta_kappa[0] is identically zero and
// the m -> -m values follow from kappa_{-m} = kappa_m, dkappa_{-m} = -dkappa_m.
struct RateSet {
  std::array<double, 3> kappa = {0.0, 0.0, 0.0};
  std::array<double, 3> delta_kappa = {0.0, 0.0, 0.0};
  double omega_d0 = 0.0;  // secular dipolar coefficient Y^2_0(theta,phi) * omega_d

  void validate() const;
};

// Scaled entry mode: rates in units of J (time measured in 1/J).  Everything
// not listed defaults to zero, which is all the reduced block-1 dynamics needs.
struct ScaledRates {
  double M0 = 0.0;
  double alpha = 1.0;
  double kappa1_star = 0.0;
  double kappa2_star = 0.0;
  double kappa0_star = 0.0;
  double delta_kappa1_star = 0.0;
  double delta_kappa2_star = 0.0;
  double omega_d0_star = 0.0;
  double delta_omega_star = 0.0;
};

// Resolved inputs of the generator: environment parameters plus the dipolar
// rate set, in one unit system.
struct Model {
  double J = 1.0;
  double delta_omega = 0.0;
  double M0 = 0.0;
  double alpha = 0.0;
  RateSet rates;

  static Model from_physical(const PhysicalParams& p);
  static Model from_scaled(const ScaledRates& s);

  double kappa1_star() const { return rates.kappa[1] / J; }
  double kappa2_star() const { return rates.kappa[2] / J; }

  void validate() const;
};

// kappa_m = |omega_dm|^2 tau_c / (1 + (m omega0 tau_c)^2),
// dkappa_m = kappa_m * m omega0 tau_c, omega_d0 = Y^2_0(theta,phi) omega_d.
RateSet compute_rates(const PhysicalParams& p);

}  // namespace spinpair
