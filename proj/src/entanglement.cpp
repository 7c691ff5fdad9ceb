#include "spinpair/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinpair {

namespace {

constexpr double kNegEigTol = -1e-9;

const Operator& spin_flip_conjugator() {
  static const Operator yy = pauli(PauliAxis::Y, 1) * pauli(PauliAxis::Y, 2);
  return yy;
}

}  // namespace

ConcurrenceResult concurrence_wootters(const Operator& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("concurrence: rho must be Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) {
    throw std::invalid_argument("concurrence: rho must have unit trace");
  }
  {
    Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < kNegEigTol) {
      throw std::invalid_argument(
          "concurrence: rho is not positive semidefinite (min eigenvalue " +
          std::to_string(es.eigenvalues().minCoeff()) + ")");
    }
  }

  const Operator& yy = spin_flip_conjugator();
  const Operator rho_tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Operator> es(rho * rho_tilde, false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("concurrence: eigensolver failed");
  }

  ConcurrenceResult out;
  out.route = ConcurrenceRoute::Wootters;
  for (int k = 0; k < 4; ++k) {
    double ev = es.eigenvalues()(k).real();
    if (ev < kNegEigTol) {
      throw std::invalid_argument(
          "concurrence: rho*rho~ has eigenvalue " + std::to_string(ev) +
          " below tolerance; state is unphysical");
    }
    out.lambdas[static_cast<std::size_t>(k)] = std::sqrt(std::max(ev, 0.0));
  }
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<double>());
  const double c =
      out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3];
  out.value = std::max(0.0, c);
  if (out.value > 1.0 + 1e-10) {
    throw std::runtime_error("concurrence: value " + std::to_string(out.value) +
                             " exceeds 1");
  }
  out.value = std::min(out.value, 1.0);
  return out;
}

ConcurrenceResult concurrence_closed_form(double Mz, double Mzz, double Mc) {
  const double a = 1.0 + 4.0 * Mzz;
  const double disc = a * a - 4.0 * Mz * Mz;
  if (disc < 0.0) {
    throw std::invalid_argument(
        "concurrence_closed_form: (1 + 4 Mzz)^2 < 4 Mz^2; no physical state");
  }
  ConcurrenceResult out;
  out.route = ConcurrenceRoute::ClosedForm;
  out.value = std::max(0.0, 2.0 * std::abs(Mc) - 0.5 * std::sqrt(disc));

  // spectral quantities of the reconstructed X-state, for route comparison
  const double b = 0.25 - Mzz;
  const double root = 0.25 * std::sqrt(disc);
  out.lambdas = {b + std::abs(Mc), std::abs(b - std::abs(Mc)), root, root};
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<double>());
  return out;
}

ConcurrenceResult concurrence_guard(const ObservableVector& v) {
  const ConcurrenceResult w = concurrence_wootters(observables_to_rho(v));
  if (v.max_non_block1() < 1e-9) {
    const ConcurrenceResult cf = concurrence_closed_form(v.Mz, v.Mzz, v.Mc);
    if (std::abs(cf.value - w.value) > 1e-9) {
      throw std::runtime_error(
          "concurrence_guard: closed form and Wootters disagree (" +
          std::to_string(cf.value) + " vs " + std::to_string(w.value) + ")");
    }
  }
  return w;
}

}  // namespace spinpair
