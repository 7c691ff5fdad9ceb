#include "spinpair/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinpair {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void PhysicalParams::validate() const {
  require(std::isfinite(J) && J > 0.0, "params: J must be > 0");
  require(std::isfinite(delta_omega), "params: delta_omega must be finite");
  require(std::isfinite(M0) && std::abs(M0) <= 1.0, "params: |M0| must be <= 1");
  require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0,
          "params: alpha must be in [0, 1]");
  require(std::isfinite(omega0), "params: omega0 must be finite");
  require(std::isfinite(tau_c) && tau_c > 0.0, "params: tau_c must be > 0");
  require(std::isfinite(omega_d) && omega_d >= 0.0, "params: omega_d must be >= 0");
  require(ang.theta >= 0.0 && ang.theta <= std::numbers::pi,
          "params: theta must be in [0, pi]");
  require(std::isfinite(ang.phi), "params: phi must be finite");
}

void RateSet::validate() const {
  for (int m = 0; m <= 2; ++m) {
    require(std::isfinite(kappa[static_cast<std::size_t>(m)]) &&
                kappa[static_cast<std::size_t>(m)] >= 0.0,
            "rates: kappa_" + std::to_string(m) + " must be >= 0");
    require(std::isfinite(delta_kappa[static_cast<std::size_t>(m)]),
            "rates: delta_kappa_" + std::to_string(m) + " must be finite");
  }
  require(delta_kappa[0] == 0.0, "rates: delta_kappa_0 must be zero");
  require(std::isfinite(omega_d0), "rates: omega_d0 must be finite");
}

RateSet compute_rates(const PhysicalParams& p) {
  p.validate();
  RateSet r;
  for (int m = 0; m <= 2; ++m) {
    // |omega_dm| = |Y^2_{-m}| omega_d = |Y^2_m| omega_d
    const Complex y = spherical_harmonic_y2(m, p.ang);
    const double w2 = std::norm(y) * p.omega_d * p.omega_d;
    const double x = m * p.omega0 * p.tau_c;
    const double lorentz = p.tau_c / (1.0 + x * x);
    r.kappa[static_cast<std::size_t>(m)] = w2 * lorentz;
    r.delta_kappa[static_cast<std::size_t>(m)] = w2 * lorentz * x;
  }
  r.delta_kappa[0] = 0.0;
  r.omega_d0 = spherical_harmonic_y2(0, p.ang).real() * p.omega_d;
  return r;
}

Model Model::from_physical(const PhysicalParams& p) {
  Model m;
  m.J = p.J;
  m.delta_omega = p.delta_omega;
  m.M0 = p.M0;
  m.alpha = p.alpha;
  m.rates = compute_rates(p);
  m.validate();
  return m;
}

Model Model::from_scaled(const ScaledRates& s) {
  Model m;
  m.J = 1.0;
  m.delta_omega = s.delta_omega_star;
  m.M0 = s.M0;
  m.alpha = s.alpha;
  m.rates.kappa = {s.kappa0_star, s.kappa1_star, s.kappa2_star};
  m.rates.delta_kappa = {0.0, s.delta_kappa1_star, s.delta_kappa2_star};
  m.rates.omega_d0 = s.omega_d0_star;
  m.validate();
  return m;
}

void Model::validate() const {
  require(std::isfinite(J) && J > 0.0, "model: J must be > 0");
  require(std::isfinite(delta_omega), "model: delta_omega must be finite");
  require(std::isfinite(M0) && std::abs(M0) <= 1.0, "model: |M0| must be <= 1");
  require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0,
          "model: alpha must be in [0, 1]");
  rates.validate();
}

}  // namespace spinpair
