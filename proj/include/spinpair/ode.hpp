#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinpair::ode {

// Constant-coefficient affine system dy/dt = A y + b.
struct AffineSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

enum class Method { Auto, Dopri5, Radau };

struct Options {
  double rtol = 1e-10;
  double atol = 1e-12;
  Method method = Method::Auto;
  long max_steps = 50000000;
};

struct Report {
  std::string method_used;
  bool stiffness_switch = false;  // explicit path hit the step floor
  long steps_accepted = 0;
  long steps_rejected = 0;
};

// March from t = 0 and return y(t) at each requested time.  Times must be
// finite, nonnegative and strictly increasing; a leading 0 returns y0.
// Steps land exactly on the requested times, so no interpolant is involved.
//
// Method::Auto starts with the embedded Dormand-Prince 5(4) pair and falls
// back to the L-stable Radau IIA(5) collocation method either up front (when
// the stability-limited explicit step count would be excessive) or when the
// explicit step size underflows.
std::vector<Eigen::VectorXd> solve_at(const AffineSystem& sys,
                                      const Eigen::VectorXd& y0,
                                      const std::vector<double>& times,
                                      const Options& opt = {},
                                      Report* report = nullptr);

// Fixed-step advance over [0, t] in n equal steps; used by convergence tests.
Eigen::VectorXd advance_fixed(const AffineSystem& sys, const Eigen::VectorXd& y0,
                              double t, int nsteps, Method method);

// Exact endpoint through the matrix exponential of the augmented system.
Eigen::VectorXd propagate_exact(const AffineSystem& sys,
                                const Eigen::VectorXd& y0, double t);

}  // namespace spinpair::ode
