#include "spinpair/master_equation.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace spinpair {

namespace {

constexpr Complex kI{0.0, 1.0};

using Matrix16 = Superoperator;

Matrix16 kron16(const Operator& a, const Operator& b) {
  return Matrix16(Eigen::kroneckerProduct(a, b));
}

}  // namespace

Vec16 vectorize(const Operator& m) {
  Vec16 v;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      v(i + 4 * j) = m(i, j);
    }
  }
  return v;
}

Operator devectorize(const Vec16& v) {
  Operator m;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      m(i, j) = v(i + 4 * j);
    }
  }
  return m;
}

Superoperator left_multiplier(const Operator& a) {
  return kron16(Operator::Identity(), a);
}

Superoperator right_multiplier(const Operator& b) {
  return kron16(b.transpose(), Operator::Identity());
}

Superoperator hamiltonian_superop(const Operator& h) {
  return -kI * (left_multiplier(h) - right_multiplier(h));
}

Superoperator lindblad_term(const Operator& jump) {
  const Operator jd = jump.adjoint();
  const Operator jdj = jd * jump;
  return left_multiplier(jump) * right_multiplier(jd) -
         0.5 * (left_multiplier(jdj) + right_multiplier(jdj));
}

Operator build_coherent_part(const Model& m) {
  m.validate();
  const Operator sp[2] = {pauli(PauliAxis::Plus, 1), pauli(PauliAxis::Plus, 2)};
  const Operator sm[2] = {pauli(PauliAxis::Minus, 1), pauli(PauliAxis::Minus, 2)};

  Operator h = calibration::kSecularShift * m.rates.omega_d0 * build_t2(0);

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double pref = m.delta_omega * (i == j ? 1.0 : m.alpha);
      h += 0.5 * pref *
           ((1.0 + m.M0) * sm[i] * sp[j] - (1.0 - m.M0) * sp[i] * sm[j]);
    }
  }

  // dipolar second-order shift, nonsecular orders only
  for (int mm : {1, 2}) {
    const double dk = m.rates.delta_kappa[static_cast<std::size_t>(mm)];
    const double w = calibration::kDdsWeight[mm - 1];
    const Operator tp = build_t2(mm);
    const Operator tn = build_t2(-mm);
    // m and -m terms of -sum_m dkappa_m T_m T_{-m}, with dkappa odd in m
    h += -w * dk * (tp * tn - tn * tp);
  }
  return h;
}

Superoperator build_dissipator_D(const Model& m) {
  m.validate();
  const Operator sp[2] = {pauli(PauliAxis::Plus, 1), pauli(PauliAxis::Plus, 2)};
  const Operator sm[2] = {pauli(PauliAxis::Minus, 1), pauli(PauliAxis::Minus, 2)};

  Superoperator d = Superoperator::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double pref = m.J * (i == j ? 1.0 : m.alpha);
      // pair bracket A rho B^dag - 1/2 {B^dag A, rho}, A on qubit i, B on qubit j;
      // the (1 + M0) sector pumps toward spin-up
      const Operator bu = sm[j] * sp[i];
      d += pref * (1.0 + m.M0) *
           (left_multiplier(sp[i]) * right_multiplier(sm[j]) -
            0.5 * (left_multiplier(bu) + right_multiplier(bu)));
      const Operator bd = sp[j] * sm[i];
      d += pref * (1.0 - m.M0) *
           (left_multiplier(sm[i]) * right_multiplier(sp[j]) -
            0.5 * (left_multiplier(bd) + right_multiplier(bd)));
    }
  }
  return d;
}

Superoperator build_dissipator_Q(const RateSet& r) {
  r.validate();
  Superoperator q = Superoperator::Zero();
  for (int mm = -2; mm <= 2; ++mm) {
    const int a = std::abs(mm);
    const double rate =
        calibration::kQWeight[a] * r.kappa[static_cast<std::size_t>(a)];
    if (rate == 0.0) continue;
    q += rate * lindblad_term(build_t2(-mm));
  }
  return q;
}

Superoperator assemble_liouvillian(const Model& m) {
  return hamiltonian_superop(build_coherent_part(m)) + build_dissipator_D(m) +
         build_dissipator_Q(m.rates);
}

}  // namespace spinpair
