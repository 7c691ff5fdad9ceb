#include "spinpair/observables.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace spinpair {

namespace {

struct ObservableBasis {
  // Measurement operators O_k (value = Tr[O_k rho]) and dual operators B_k
  // (rho = I/4 + sum_k v_k B_k), both in block ordering.
  std::array<Operator, 15> meas;
  std::array<Operator, 15> dual;
};

const ObservableBasis& basis() {
  static const ObservableBasis b = [] {
    ObservableBasis out;
    const Operator sx1 = pauli(PauliAxis::X, 1), sx2 = pauli(PauliAxis::X, 2);
    const Operator sy1 = pauli(PauliAxis::Y, 1), sy2 = pauli(PauliAxis::Y, 2);
    const Operator sz1 = pauli(PauliAxis::Z, 1), sz2 = pauli(PauliAxis::Z, 2);
    const Operator xx = sx1 * sx2, yy = sy1 * sy2, zz = sz1 * sz2;
    const Operator xy = sx1 * sy2, yx = sy1 * sx2;
    const Operator xz = sx1 * sz2, zx = sz1 * sx2;
    const Operator yz = sy1 * sz2, zy = sz1 * sy2;

    auto set = [&out](int k, const Operator& m, const Operator& d) {
      out.meas[static_cast<std::size_t>(k)] = m;
      out.dual[static_cast<std::size_t>(k)] = d;
    };
    // block 1: Mz, Mzz, Mc
    set(0, 0.5 * (sz1 + sz2), 0.25 * (sz1 + sz2));
    set(1, 0.25 * zz, zz);
    set(2, 0.25 * (xx + yy), 0.5 * (xx + yy));
    // block 2: Mx, My, Mxz, Myz
    set(3, 0.5 * (sx1 + sx2), 0.25 * (sx1 + sx2));
    set(4, 0.5 * (sy1 + sy2), 0.25 * (sy1 + sy2));
    set(5, 0.25 * (xz + zx), 0.5 * (xz + zx));
    set(6, 0.25 * (yz + zy), 0.5 * (yz + zy));
    // block 3: Mxy, Ac
    set(7, 0.25 * (xy + yx), 0.5 * (xy + yx));
    set(8, 0.25 * (xx - yy), 0.5 * (xx - yy));
    // block 4: Axy, Az
    set(9, 0.25 * (xy - yx), 0.5 * (xy - yx));
    set(10, 0.5 * (sz1 - sz2), 0.25 * (sz1 - sz2));
    // block 5: Ax, Ay, Axz, Ayz
    set(11, 0.5 * (sx1 - sx2), 0.25 * (sx1 - sx2));
    set(12, 0.5 * (sy1 - sy2), 0.25 * (sy1 - sy2));
    set(13, 0.25 * (xz - zx), 0.5 * (xz - zx));
    set(14, 0.25 * (yz - zy), 0.5 * (yz - zy));
    return out;
  }();
  return b;
}

}  // namespace

Eigen::Vector<double, 15> ObservableVector::block_vector() const {
  Eigen::Vector<double, 15> v;
  v << Mz, Mzz, Mc, Mx, My, Mxz, Myz, Mxy, Ac, Axy, Az, Ax, Ay, Axz, Ayz;
  return v;
}

ObservableVector ObservableVector::from_block_vector(
    const Eigen::Vector<double, 15>& v) {
  ObservableVector o;
  o.Mz = v(0); o.Mzz = v(1); o.Mc = v(2);
  o.Mx = v(3); o.My = v(4); o.Mxz = v(5); o.Myz = v(6);
  o.Mxy = v(7); o.Ac = v(8);
  o.Axy = v(9); o.Az = v(10);
  o.Ax = v(11); o.Ay = v(12); o.Axz = v(13); o.Ayz = v(14);
  return o;
}

double ObservableVector::max_non_block1() const {
  const Eigen::Vector<double, 15> v = block_vector();
  return v.tail<12>().cwiseAbs().maxCoeff();
}

ObservableVector rho_to_observables(const Operator& rho) {
  const double tr = rho.trace().real();
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("rho_to_observables: trace must be 1 (got " +
                                std::to_string(tr) + ")");
  }
  const auto& b = basis();
  Eigen::Vector<double, 15> v;
  for (int k = 0; k < 15; ++k) {
    v(k) = (b.meas[static_cast<std::size_t>(k)] * rho).trace().real();
  }
  return ObservableVector::from_block_vector(v);
}

Operator observables_to_rho(const ObservableVector& o) {
  const auto& b = basis();
  Operator rho = 0.25 * Operator::Identity();
  const Eigen::Vector<double, 15> v = o.block_vector();
  for (int k = 0; k < 15; ++k) {
    rho += v(k) * b.dual[static_cast<std::size_t>(k)];
  }
  return rho;
}

ObservableVector singlet_observables() {
  ObservableVector o;
  o.Mzz = -0.25;
  o.Mc = -0.5;
  return o;
}

ObservableVector triplet_observables() {
  ObservableVector o;
  o.Mzz = -0.25;
  o.Mc = 0.5;
  return o;
}

ObservableVector dipolar_order_observables() {
  ObservableVector o;
  o.Mzz = -0.25;
  return o;
}

ObservableVector thermal_observables(double M0) {
  ObservableVector o;
  o.Mz = M0;
  o.Mzz = 0.25 * M0 * M0;
  return o;
}

ObservableVector zero_observables() { return {}; }

Eigen::Matrix<double, 15, 15> BlockSystem::full_matrix() const {
  Eigen::Matrix<double, 15, 15> m = Eigen::Matrix<double, 15, 15>::Zero();
  m.block<3, 3>(0, 0) = L1;
  m.block<4, 4>(3, 3) = L2;
  m.block<2, 2>(7, 7) = L3;
  m.block<2, 2>(9, 9) = L4;
  m.block<4, 4>(11, 11) = L5;
  return m;
}

Eigen::Vector<double, 15> BlockSystem::inhomogeneity() const {
  Eigen::Vector<double, 15> v = Eigen::Vector<double, 15>::Zero();
  v.head<3>() = B1;
  return v;
}

BlockSystem BlockSystem::scaled(double J) const {
  BlockSystem s = *this;
  s.L1 /= J; s.B1 /= J; s.L2 /= J; s.L3 /= J; s.L4 /= J; s.L5 /= J;
  return s;
}

BlockSystem build_block_system(const Model& m) {
  m.validate();
  const double J = m.J, M0 = m.M0, al = m.alpha, dw = m.delta_omega;
  const double k0 = m.rates.kappa[0], k1 = m.rates.kappa[1], k2 = m.rates.kappa[2];
  const double dk1 = m.rates.delta_kappa[1], dk2 = m.rates.delta_kappa[2];
  const double wd0 = m.rates.omega_d0;

  BlockSystem b;

  b.L1 << -(2 * J + k1 + 4 * k2), 0, 4 * M0 * al * J,
          M0 * J, -(4 * J + 2 * k1), 2 * al * J + k1,
          -M0 * al * J, 4 * al * J + 2 * k1, -(2 * J + k1);
  b.B1 << 2 * M0 * J, 0, 0;

  // collective shift entering every +-1-quantum rotation
  const double s = 0.5 * dk1 + dk2 - dw;
  const double d2a = -(2.5 * k1 + k2 + 9 * k0 + J);
  const double d2b = -(0.5 * k1 + k2 + 9 * k0 + 3 * J + 2 * J * al);
  const double g2 = 2 * M0 * al * dw + 6 * wd0;
  const double c2 = M0 * J * (1 + 0.5 * al);
  const double h2 = 0.5 * M0 * al * dw + 1.5 * wd0;
  b.L2 << d2a, -s, -2 * M0 * J * al, g2,
          s, d2a, -g2, -2 * M0 * J * al,
          c2, h2, d2b, -s,
          -h2, c2, s, d2b;

  b.L3 << -(k1 + 2 * k2 + 2 * J), 2 * s,
          -2 * s, -(k1 + 2 * k2 + 2 * J);

  const double g4 = M0 * al * dw + wd0;
  b.L4 << -(k1 + 4 * k0 + 2 * J), g4,
          -4 * g4, -(k1 + 4 * k0 + 2 * J);

  const double d5a = -(0.5 * k1 + k2 + k0 + J);
  const double d5b = -(0.5 * k1 + k2 + k0 + 3 * J - 2 * J * al);
  const double g5 = -2 * M0 * al * dw + 2 * wd0;
  const double c5 = M0 * J * (1 - 0.5 * al);
  const double h5 = -0.5 * M0 * al * dw + 0.5 * wd0;
  b.L5 << d5a, -s, 2 * M0 * J * al, g5,
          s, d5a, -g5, 2 * M0 * J * al,
          c5, h5, d5b, -s,
          -h5, c5, s, d5b;

  return b;
}

void reduce_superoperator(const Superoperator& gen,
                          Eigen::Matrix<double, 15, 15>& E,
                          Eigen::Vector<double, 15>& e) {
  const auto& b = basis();
  const Vec16 img0 = gen * vectorize(0.25 * Operator::Identity());
  const Operator m0 = devectorize(img0);
  for (int i = 0; i < 15; ++i) {
    e(i) = (b.meas[static_cast<std::size_t>(i)] * m0).trace().real();
  }
  for (int j = 0; j < 15; ++j) {
    const Operator img = devectorize(gen * vectorize(b.dual[static_cast<std::size_t>(j)]));
    for (int i = 0; i < 15; ++i) {
      E(i, j) = (b.meas[static_cast<std::size_t>(i)] * img).trace().real();
    }
  }
}

}  // namespace spinpair
