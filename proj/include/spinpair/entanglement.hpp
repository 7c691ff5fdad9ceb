#pragma once

#include <array>

#include "spinpair/observables.hpp"
#include "spinpair/spin_algebra.hpp"

namespace spinpair {

enum class ConcurrenceRoute { Wootters, ClosedForm };

struct ConcurrenceResult {
  double value = 0.0;  // in [0, 1]
  ConcurrenceRoute route = ConcurrenceRoute::Wootters;
  std::array<double, 4> lambdas = {0, 0, 0, 0};  // sorted decreasing
};

// General construction: lambda_i are the square roots of the eigenvalues of
// rho * (sy x sy) rho^* (sy x sy), sorted decreasing;
// value = max{0, l1 - l2 - l3 - l4}.  Requires rho Hermitian, unit trace,
// positive semidefinite down to -1e-9; eigenvalues of rho rho~ below -1e-9
// raise, values in (-1e-9, 0) are clamped.
ConcurrenceResult concurrence_wootters(const Operator& rho);

// Closed form on the (Mz, Mzz, Mc) manifold:
// max{0, 2|Mc| - 1/2 sqrt((1 + 4 Mzz)^2 - 4 Mz^2)}.
// Rejects (1 + 4 Mzz)^2 < 4 Mz^2 (no physical state there).
ConcurrenceResult concurrence_closed_form(double Mz, double Mzz, double Mc);

// Reconstructs rho and evaluates Wootters; when every observable outside
// block 1 is below 1e-9 the closed form is evaluated too and must agree
// within 1e-9, otherwise a consistency error is raised.
ConcurrenceResult concurrence_guard(const ObservableVector& v);

}  // namespace spinpair
