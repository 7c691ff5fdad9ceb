#include "spinpair/spin_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace spinpair {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd sigma_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Operator embed(const Eigen::Matrix2cd& op, int qubit) {
  if (qubit != 1 && qubit != 2) {
    throw std::invalid_argument("pauli: qubit index must be 1 or 2");
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return qubit == 1 ? Operator(Eigen::kroneckerProduct(op, id))
                    : Operator(Eigen::kroneckerProduct(id, op));
}

}  // namespace

Eigen::Matrix2cd pauli_matrix(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return sigma_x();
    case PauliAxis::Y: return sigma_y();
    case PauliAxis::Z: return sigma_z();
    case PauliAxis::Plus: return 0.5 * (sigma_x() + kI * sigma_y());
    case PauliAxis::Minus: return 0.5 * (sigma_x() - kI * sigma_y());
  }
  throw std::invalid_argument("pauli_matrix: bad axis");
}

Operator pauli(PauliAxis axis, int qubit) {
  return embed(pauli_matrix(axis), qubit);
}

Complex spherical_harmonic_y2(int m, const AngularConfig& ang) {
  const double pi = std::numbers::pi;
  const double st = std::sin(ang.theta);
  const double ct = std::cos(ang.theta);
  const Complex eip = std::exp(kI * ang.phi);
  switch (m) {
    case 0:
      return std::sqrt(5.0 / (16.0 * pi)) * (3.0 * ct * ct - 1.0);
    case 1:
      return -std::sqrt(15.0 / (8.0 * pi)) * st * ct * eip;
    case -1:
      return std::sqrt(15.0 / (8.0 * pi)) * st * ct * std::conj(eip);
    case 2:
      return std::sqrt(15.0 / (32.0 * pi)) * st * st * eip * eip;
    case -2:
      return std::sqrt(15.0 / (32.0 * pi)) * st * st * std::conj(eip * eip);
    default:
      throw std::invalid_argument("spherical_harmonic_y2: order must be in {-2..2}");
  }
}

Operator build_t2(int m) {
  const Operator sp1 = pauli(PauliAxis::Plus, 1);
  const Operator sp2 = pauli(PauliAxis::Plus, 2);
  const Operator sm1 = pauli(PauliAxis::Minus, 1);
  const Operator sm2 = pauli(PauliAxis::Minus, 2);
  const Operator sz1 = pauli(PauliAxis::Z, 1);
  const Operator sz2 = pauli(PauliAxis::Z, 2);
  switch (m) {
    case 2:
      return 0.5 * sp1 * sp2;
    case 1:
      return -0.25 * (sp1 * sz2 + sz1 * sp2);
    case 0:
      return (3.0 * sz1 * sz2 -
              (pauli(PauliAxis::X, 1) * pauli(PauliAxis::X, 2) +
               pauli(PauliAxis::Y, 1) * pauli(PauliAxis::Y, 2) + sz1 * sz2)) /
             (4.0 * std::sqrt(6.0));
    case -1:
      return 0.25 * (sm1 * sz2 + sz1 * sm2);
    case -2:
      return 0.5 * sm1 * sm2;
    default:
      throw std::invalid_argument("build_t2: order must be in {-2..2}");
  }
}

DipolarHamiltonian dipolar_hamiltonian(double omega_d, const AngularConfig& ang) {
  if (omega_d < 0.0) {
    throw std::invalid_argument("dipolar_hamiltonian: omega_d must be >= 0");
  }
  DipolarHamiltonian out;
  out.h.setZero();
  for (int m = -2; m <= 2; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const Complex c = sign * spherical_harmonic_y2(-m, ang) * omega_d;
    const auto idx = static_cast<std::size_t>(m + 2);
    out.omega_dm[idx] = c;
    out.h += c * build_t2(m);
  }
  return out;
}

}  // namespace spinpair
