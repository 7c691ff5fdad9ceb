#pragma once

#include <random>

#include "spinpair/observables.hpp"
#include "spinpair/params.hpp"
#include "spinpair/spin_algebra.hpp"

namespace spinpair::testutil {

inline Operator random_density_matrix(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Operator m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
    }
  }
  Operator rho = m * m.adjoint();
  rho /= rho.trace();
  return rho;
}

// Random (Mz, Mzz, Mc) with every other observable zero and rho >= 0.
inline ObservableVector random_block1_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    ObservableVector v;
    v.Mz = u(rng);
    v.Mzz = 0.25 * u(rng);
    v.Mc = 0.5 * u(rng);
    // eigenvalues of the reconstruction
    const double e1 = 0.25 + 0.5 * v.Mz + v.Mzz;
    const double e2 = 0.25 - 0.5 * v.Mz + v.Mzz;
    const double e3 = 0.25 - v.Mzz + v.Mc;
    const double e4 = 0.25 - v.Mzz - v.Mc;
    if (e1 >= 0 && e2 >= 0 && e3 >= 0 && e4 >= 0) return v;
  }
}

inline Model random_model(std::mt19937& rng, bool with_shifts) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ScaledRates s;
  s.M0 = 2.0 * u(rng) - 1.0;
  s.alpha = u(rng);
  s.kappa1_star = 100.0 * u(rng) * u(rng);
  s.kappa2_star = 100.0 * u(rng) * u(rng);
  if (with_shifts) {
    s.kappa0_star = 10.0 * u(rng);
    s.delta_kappa1_star = 4.0 * u(rng) - 2.0;
    s.delta_kappa2_star = 4.0 * u(rng) - 2.0;
    s.omega_d0_star = 4.0 * u(rng) - 2.0;
    s.delta_omega_star = 4.0 * u(rng) - 2.0;
  }
  return Model::from_scaled(s);
}

}  // namespace spinpair::testutil
