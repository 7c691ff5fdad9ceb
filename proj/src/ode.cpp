#include "spinpair/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace spinpair::ode {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4 error weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// Radau IIA, 3 stages, order 5 (stiffly accurate).
const double kSqrt6 = std::sqrt(6.0);
const double ra[3][3] = {
    {(88.0 - 7.0 * kSqrt6) / 360.0, (296.0 - 169.0 * kSqrt6) / 1800.0,
     (-2.0 + 3.0 * kSqrt6) / 225.0},
    {(296.0 + 169.0 * kSqrt6) / 1800.0, (88.0 + 7.0 * kSqrt6) / 360.0,
     (-2.0 - 3.0 * kSqrt6) / 225.0},
    {(16.0 - kSqrt6) / 36.0, (16.0 + kSqrt6) / 36.0, 1.0 / 9.0}};

double error_norm(const VectorXd& err, const VectorXd& y0, const VectorXd& y1,
                  double atol, double rtol) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double sc = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double q = err(i) / sc;
    acc += q * q;
  }
  const double norm = std::sqrt(acc / static_cast<double>(err.size()));
  // an overflowed trial step counts as a huge error so the controller backs off
  return std::isfinite(norm) ? norm : 1e10;
}

class Dopri5Stepper {
 public:
  explicit Dopri5Stepper(const AffineSystem& sys) : sys_(sys) {}

  // One trial step; returns error norm, fills ynew.
  double step(const VectorXd& y, double h, VectorXd& ynew, const Options& opt) {
    auto f = [this](const VectorXd& v) -> VectorXd { return sys_.A * v + sys_.b; };
    if (!have_k1_) {
      k1_ = f(y);
      have_k1_ = true;
    }
    const VectorXd k2 = f(y + h * (a21 * k1_));
    const VectorXd k3 = f(y + h * (a31 * k1_ + a32 * k2));
    const VectorXd k4 = f(y + h * (a41 * k1_ + a42 * k2 + a43 * k3));
    const VectorXd k5 = f(y + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4));
    const VectorXd k6 =
        f(y + h * (a61 * k1_ + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    ynew = y + h * (b1 * k1_ + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const VectorXd k7 = f(ynew);
    const VectorXd err =
        h * (e1 * k1_ + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    k7_ = k7;
    return error_norm(err, y, ynew, opt.atol, opt.rtol);
  }

  void accept() { k1_ = k7_; }   // FSAL
  void invalidate() { have_k1_ = false; }

  static double next_h(double h, double err) {
    const double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
    return h * std::clamp(fac, 0.2, 5.0);
  }

 private:
  const AffineSystem& sys_;
  VectorXd k1_, k7_;
  bool have_k1_ = false;
};

class RadauStepper {
 public:
  explicit RadauStepper(const AffineSystem& sys) : sys_(sys), n_(sys.A.rows()) {}

  // Single Radau step of size h from y.
  VectorXd advance(const VectorXd& y, double h) {
    const Eigen::PartialPivLU<MatrixXd>& lu = factor(h);
    VectorXd rhs(3 * n_);
    const VectorXd f0 = sys_.A * y + sys_.b;
    rhs.segment(0, n_) = f0;
    rhs.segment(n_, n_) = f0;
    rhs.segment(2 * n_, n_) = f0;
    const VectorXd K = lu.solve(rhs);
    VectorXd out = y;
    for (int i = 0; i < 3; ++i) {
      out += h * ra[2][i] * K.segment(i * n_, n_);
    }
    return out;
  }

  // Trial step with step-doubling error estimate; returns error norm and
  // the two-half-step result in ynew.
  double step(const VectorXd& y, double h, VectorXd& ynew, const Options& opt) {
    const VectorXd full = advance(y, h);
    const VectorXd mid = advance(y, 0.5 * h);
    ynew = advance(mid, 0.5 * h);
    return error_norm(ynew - full, y, ynew, opt.atol, opt.rtol) / 31.0;
  }

  static double next_h(double h, double err) {
    const double fac = 0.9 * std::pow(std::max(err, 1e-16), -1.0 / 6.0);
    return h * std::clamp(fac, 0.2, 5.0);
  }

  void accept() {}
  void invalidate() {}

 private:
  const Eigen::PartialPivLU<MatrixXd>& factor(double h) {
    // keep the two factorizations (h and h/2) of the current step size
    for (auto& c : cache_) {
      if (c.h == h) return c.lu;
    }
    Cache& slot = cache_[next_slot_];
    next_slot_ = (next_slot_ + 1) % 2;
    MatrixXd m = MatrixXd::Identity(3 * n_, 3 * n_);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m.block(i * n_, j * n_, n_, n_) -= h * ra[i][j] * sys_.A;
      }
    }
    slot.h = h;
    slot.lu.compute(m);
    return slot.lu;
  }

  struct Cache {
    double h = -1.0;
    Eigen::PartialPivLU<MatrixXd> lu;
  };

  const AffineSystem& sys_;
  Eigen::Index n_;
  Cache cache_[2];
  int next_slot_ = 0;
};

// Marching loop shared by both steppers.
template <typename Stepper>
void march(Stepper& stepper, const AffineSystem& sys, VectorXd& y, double& t,
           const std::vector<double>& times, std::size_t& next_sample,
           std::vector<VectorXd>& out, const Options& opt, Report& rep,
           bool allow_switch, bool* hit_floor) {
  const double t_end = times.back();
  const double h_floor = 1e-13 * std::max(1.0, t_end);

  // initial step: resolve the fastest scale or the first sample gap
  const double anorm = sys.A.cwiseAbs().rowwise().sum().maxCoeff();
  double h = std::min(t_end - t, 0.1 / std::max(anorm, 1.0 / t_end));
  if (next_sample < times.size()) {
    h = std::min(h, std::max(times[next_sample] - t, h_floor));
  }

  VectorXd ynew;
  while (t < t_end * (1.0 - 1e-15)) {
    if (rep.steps_accepted + rep.steps_rejected > opt.max_steps) {
      throw std::runtime_error("ode: step budget exhausted at t = " +
                               std::to_string(t));
    }
    bool clipped = false;
    double h_try = h;
    if (next_sample < times.size() && t + h_try >= times[next_sample]) {
      h_try = times[next_sample] - t;
      clipped = true;
    }
    if (h_try < h_floor) {
      if (allow_switch) {
        *hit_floor = true;
        return;
      }
      throw std::runtime_error("ode: step size underflow at t = " +
                               std::to_string(t));
    }

    const double err = stepper.step(y, h_try, ynew, opt);
    if (err <= 1.0) {
      t += h_try;
      y = ynew;
      stepper.accept();
      ++rep.steps_accepted;
      if (!y.allFinite()) {
        throw std::runtime_error("ode: non-finite state at t = " +
                                 std::to_string(t));
      }
      if (clipped && next_sample < times.size() &&
          t >= times[next_sample] * (1.0 - 1e-15)) {
        out.push_back(y);
        ++next_sample;
      }
      if (!clipped) {
        h = Stepper::next_h(h_try, err);
      }
      // else: keep the pre-clip h for the next step
    } else {
      ++rep.steps_rejected;
      h = std::min(Stepper::next_h(h_try, err), h_try);
      stepper.invalidate();
      if (h < h_floor) {
        if (allow_switch) {
          *hit_floor = true;
          return;
        }
        throw std::runtime_error("ode: step size underflow at t = " +
                                 std::to_string(t));
      }
    }
  }
}

}  // namespace

std::vector<VectorXd> solve_at(const AffineSystem& sys, const VectorXd& y0,
                               const std::vector<double>& times,
                               const Options& opt, Report* report) {
  if (sys.A.rows() != sys.A.cols() || sys.A.rows() != y0.size() ||
      sys.b.size() != y0.size()) {
    throw std::invalid_argument("ode: dimension mismatch");
  }
  if (times.empty()) return {};
  double prev = -1.0;
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0 || t <= prev) {
      throw std::invalid_argument("ode: times must be strictly increasing and >= 0");
    }
    prev = t;
  }
  if (!(opt.rtol > 1e-14 && opt.rtol < 1e-3)) {
    throw std::invalid_argument("ode: rtol must lie in (1e-14, 1e-3)");
  }

  Report rep;
  std::vector<VectorXd> out;
  out.reserve(times.size());
  VectorXd y = y0;
  double t = 0.0;
  std::size_t next_sample = 0;
  if (times[0] == 0.0) {
    out.push_back(y);
    next_sample = 1;
  }

  bool use_radau = opt.method == Method::Radau;
  if (opt.method == Method::Auto) {
    // stability-limited explicit step count estimate
    const double anorm = sys.A.cwiseAbs().rowwise().sum().maxCoeff();
    use_radau = anorm * times.back() / 3.0 > 2e4;
  }
  rep.method_used = use_radau ? "radau" : "dopri5";

  if (next_sample < times.size()) {
    if (!use_radau) {
      Dopri5Stepper st(sys);
      bool hit_floor = false;
      march(st, sys, y, t, times, next_sample, out, opt, rep,
            /*allow_switch=*/opt.method == Method::Auto, &hit_floor);
      if (hit_floor) {
        rep.stiffness_switch = true;
        rep.method_used = "dopri5+radau";
        use_radau = true;
      }
    }
    if (use_radau && next_sample < times.size()) {
      RadauStepper st(sys);
      march(st, sys, y, t, times, next_sample, out, opt, rep,
            /*allow_switch=*/false, nullptr);
    }
  }
  if (report) *report = rep;
  return out;
}

VectorXd advance_fixed(const AffineSystem& sys, const VectorXd& y0, double t,
                       int nsteps, Method method) {
  if (nsteps <= 0 || t <= 0.0) {
    throw std::invalid_argument("advance_fixed: need t > 0 and nsteps > 0");
  }
  const double h = t / nsteps;
  VectorXd y = y0;
  if (method == Method::Radau) {
    RadauStepper st(sys);
    for (int i = 0; i < nsteps; ++i) y = st.advance(y, h);
  } else {
    Options opt;
    Dopri5Stepper st(sys);
    VectorXd ynew;
    for (int i = 0; i < nsteps; ++i) {
      st.step(y, h, ynew, opt);
      st.accept();
      y = ynew;
    }
  }
  return y;
}

VectorXd propagate_exact(const AffineSystem& sys, const VectorXd& y0, double t) {
  const Eigen::Index n = sys.A.rows();
  MatrixXd aug = MatrixXd::Zero(n + 1, n + 1);
  aug.topLeftCorner(n, n) = sys.A * t;
  aug.topRightCorner(n, 1) = sys.b * t;
  const MatrixXd e = aug.exp();
  return e.topLeftCorner(n, n) * y0 + e.topRightCorner(n, 1);
}

}  // namespace spinpair::ode
