#include "spinpair/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinpair {

namespace {

void check_options(double t_end, const IntegrateOptions& opt) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("integrate: t_end must be > 0");
  }
  if (!(opt.tol > 1e-14 && opt.tol < 1e-3)) {
    throw std::invalid_argument("integrate: tol must lie in (1e-14, 1e-3)");
  }
  if (opt.sample_count < 2) {
    throw std::invalid_argument("integrate: sample_count must be >= 2");
  }
}

ode::Options to_ode_options(const IntegrateOptions& opt) {
  ode::Options o;
  o.rtol = opt.tol;
  o.atol = opt.tol * 1e-2;
  o.method = opt.method;
  return o;
}

}  // namespace

std::vector<double> sample_times(double t_end, const IntegrateOptions& opt) {
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(opt.sample_count));
  ts.push_back(0.0);
  const int n = opt.sample_count - 1;
  if (opt.log_sampling) {
    const double lo = std::log10(t_end) - opt.log_decades;
    const double hi = std::log10(t_end);
    for (int i = 1; i <= n; ++i) {
      ts.push_back(std::pow(10.0, lo + (hi - lo) * (i - 1) / std::max(n - 1, 1)));
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      ts.push_back(t_end * i / n);
    }
  }
  ts.back() = t_end;
  return ts;
}

Trajectory integrate(const BlockSystem& sys, const ObservableVector& init,
                     double t_end, const IntegrateOptions& opt) {
  check_options(t_end, opt);
  ode::AffineSystem aff;
  aff.A = sys.full_matrix();
  aff.b = sys.inhomogeneity();

  const std::vector<double> ts = sample_times(t_end, opt);
  ode::Report rep;
  const auto ys = ode::solve_at(aff, init.block_vector(), ts,
                                to_ode_options(opt), &rep);

  Trajectory out;
  out.times = ts;
  out.states.reserve(ys.size());
  for (const auto& y : ys) {
    out.states.push_back(
        ObservableVector::from_block_vector(Eigen::Vector<double, 15>(y)));
  }
  out.method_used = rep.method_used;
  out.stiffness_switch = rep.stiffness_switch;
  return out;
}

Trajectory integrate(const Superoperator& gen, const Operator& rho0,
                     double t_end, const IntegrateOptions& opt) {
  check_options(t_end, opt);
  // real embedding of the complex Liouville flow
  ode::AffineSystem aff;
  aff.A.resize(32, 32);
  aff.A.topLeftCorner(16, 16) = gen.real();
  aff.A.topRightCorner(16, 16) = -gen.imag();
  aff.A.bottomLeftCorner(16, 16) = gen.imag();
  aff.A.bottomRightCorner(16, 16) = gen.real();
  aff.b = Eigen::VectorXd::Zero(32);

  const Vec16 v0 = vectorize(rho0);
  Eigen::VectorXd y0(32);
  y0.head<16>() = v0.real();
  y0.tail<16>() = v0.imag();

  const std::vector<double> ts = sample_times(t_end, opt);
  ode::Report rep;
  const auto ys = ode::solve_at(aff, y0, ts, to_ode_options(opt), &rep);

  Trajectory out;
  out.times = ts;
  out.states.reserve(ys.size());
  for (const auto& y : ys) {
    Vec16 v;
    for (int i = 0; i < 16; ++i) v(i) = Complex(y(i), y(16 + i));
    out.states.push_back(rho_to_observables(devectorize(v)));
  }
  out.method_used = rep.method_used;
  out.stiffness_switch = rep.stiffness_switch;
  return out;
}

Eigen::Vector3d steady_state_regular_closed_form(double M0, double alpha,
                                                 double k1s, double k2s) {
  const double c1 = (1 + k1s) * (2 + k1s + 4 * k2s) +
                    alpha * (2 + k1s + 4 * k2s - k1s * M0 * M0);
  Eigen::Vector3d v;  // (Mz, Mzz, Mc)
  v(0) = 2 * M0 * (1 + alpha + k1s) / c1;
  v(1) = M0 * M0 * (2 + 2 * alpha + k1s) / (4 * c1);
  v(2) = M0 * M0 * k1s / (2 * c1);
  return v;
}

Eigen::Vector3d steady_state_common_closed_form(double M0, double k1s,
                                                double k2s, double F) {
  const double c2 = 4 * M0 * M0 + 3 * (2 + k1s) * (2 + k1s + 4 * k2s);
  Eigen::Vector3d v;
  v(0) = 2 * M0 * (3 + 4 * F) * (2 + k1s) / c2;
  v(2) = (-2 * M0 * M0 + 2 * F * (2 + k1s) * (2 + k1s + 4 * k2s)) / c2;
  v(1) = F - v(2);
  return v;
}

SteadyState steady_state(const Model& m, const ObservableVector& init) {
  m.validate();
  const BlockSystem sys = build_block_system(m);
  const double k1s = m.kappa1_star();
  const double k2s = m.kappa2_star();

  SteadyState out;
  Eigen::Vector3d v;
  if (m.alpha == 1.0) {
    out.mode = SteadyStateMode::ConservedManifold;
    out.F = init.f_invariant();
    v = steady_state_common_closed_form(m.M0, k1s, k2s, *out.F);
  } else {
    out.mode = SteadyStateMode::Regular;
    out.near_singular_warning = m.alpha > 1.0 - 1e-12;
    v = sys.L1.partialPivLu().solve(-sys.B1);
    // closed form is an independent route; disagreement means a broken build
    const Eigen::Vector3d cf =
        steady_state_regular_closed_form(m.M0, m.alpha, k1s, k2s);
    const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    if (!out.near_singular_warning && (v - cf).cwiseAbs().maxCoeff() > 1e-9 * scale) {
      throw std::runtime_error(
          "steady_state: linear solve disagrees with the closed form");
    }
  }
  out.values.Mz = v(0);
  out.values.Mzz = v(1);
  out.values.Mc = v(2);
  out.residual = (sys.L1 * v + sys.B1).norm();
  return out;
}

SpectralAnalysis spectral_analysis(const Superoperator& gen) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(gen, true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_analysis: eigensolver failed");
  }
  const Eigen::VectorXcd ev = solver.eigenvalues();
  const Eigen::MatrixXcd vecs = solver.eigenvectors();

  std::vector<int> order(16);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&ev](int a, int b) {
    if (ev(a).real() != ev(b).real()) return ev(a).real() > ev(b).real();
    return ev(a).imag() > ev(b).imag();
  });

  SpectralAnalysis out;
  const double scale = ev.cwiseAbs().maxCoeff();
  const double tol = 1e-10 * std::max(1.0, scale);
  std::vector<int> null_idx;
  for (int k = 0; k < 16; ++k) {
    out.eigenvalues(k) = ev(order[static_cast<std::size_t>(k)]);
    if (std::abs(ev(order[static_cast<std::size_t>(k)])) < tol) {
      null_idx.push_back(order[static_cast<std::size_t>(k)]);
    }
  }
  out.null_dimension = static_cast<int>(null_idx.size());
  out.null_space.resize(16, out.null_dimension);
  for (int k = 0; k < out.null_dimension; ++k) {
    out.null_space.col(k) = vecs.col(null_idx[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace spinpair
