#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinpair/master_equation.hpp"
#include "spinpair/observables.hpp"
#include "spinpair/ode.hpp"

namespace spinpair {

struct IntegrateOptions {
  double tol = 1e-10;      // relative tolerance, must lie in (1e-14, 1e-3)
  int sample_count = 400;  // >= 2
  bool log_sampling = true;
  double log_decades = 6.0;  // log grid spans [t_end 10^-decades, t_end]
  ode::Method method = ode::Method::Auto;
};

struct Trajectory {
  std::vector<double> times;  // strictly increasing, starts at 0
  std::vector<ObservableVector> states;
  std::string method_used;
  bool stiffness_switch = false;
};

// Sample grid used by integrate(): {0} followed by sample_count - 1
// logarithmically spaced points (or a uniform grid when log_sampling is off).
std::vector<double> sample_times(double t_end, const IntegrateOptions& opt);

// Observable-space evolution d/dt A = L A + B.
Trajectory integrate(const BlockSystem& sys, const ObservableVector& init,
                     double t_end, const IntegrateOptions& opt = {});

// Liouville-space evolution of vec(rho); reports the same observables.
Trajectory integrate(const Superoperator& gen, const Operator& rho0,
                     double t_end, const IntegrateOptions& opt = {});

enum class SteadyStateMode { Regular, ConservedManifold };

struct SteadyState {
  ObservableVector values;  // (Mz, Mzz, Mc) filled, everything else zero
  SteadyStateMode mode = SteadyStateMode::Regular;
  std::optional<double> F;  // conserved Mxx+Myy+Mzz, only for alpha = 1
  double residual = 0.0;    // ||L1 v + B1||
  bool near_singular_warning = false;
};

// Closed-form block-1 steady state, alpha != 1; returns (Mz, Mzz, Mc).
Eigen::Vector3d steady_state_regular_closed_form(double M0, double alpha,
                                                 double kappa1_star,
                                                 double kappa2_star);

// Closed-form block-1 steady state on the alpha = 1 conserved manifold.
Eigen::Vector3d steady_state_common_closed_form(double M0, double kappa1_star,
                                                double kappa2_star, double F);

// Steady state of the block system; for alpha = 1 the initial state enters
// through the conserved combination F = (Mxx + Myy + Mzz)(0).
SteadyState steady_state(const Model& m, const ObservableVector& init);

struct SpectralAnalysis {
  Eigen::Vector<Complex, 16> eigenvalues;  // sorted by descending real part
  Eigen::Matrix<Complex, 16, Eigen::Dynamic> null_space;
  int null_dimension = 0;
};

SpectralAnalysis spectral_analysis(const Superoperator& gen);

}  // namespace spinpair
