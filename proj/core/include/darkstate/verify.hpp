#pragma once

#include <vector>

#include "darkstate/hilbert.hpp"
#include "darkstate/operators.hpp"

namespace darkstate {

enum class OperatorFamily { su2, sud };

/// Max over the family of ||collective ladder . psi||. Family su2 is
/// {J+, J-}; sud is all 2d(d-1) collective SU(d) ladders.
double annihilation_residuals(const StateVector& psi, OperatorFamily family);

struct Verdict {
  bool pass = false;
  double max_deviation = 0;
  int worst_trial = -1;  // trial index attaining max_deviation
  int trials = 0;
};

/// Randomized invariance under U^(x)N for Haar U in SU(d). The deviation is
/// 1 - |<psi|U^(x)N|psi>| (global phase ignored, per the dark-state
/// convention); with `strict` it is |<psi|U^(x)N|psi> - 1| (eigenvalue
/// exactly 1). Deterministic given the rng state.
Verdict is_dark_random(const StateVector& psi, int trials, double tol, Rng& rng,
                       bool strict = false);

/// As is_dark_random but sampling SU(2) rotations in the spin-(d-1)/2
/// representation (random axis and angle; the family generates the group).
Verdict is_semidark_random(const StateVector& psi, int trials, double tol,
                           Rng& rng, bool strict = false);

/// Max Frobenius deviation ||W rho W^dag - rho|| over sampled collective
/// unitaries W = U^(x)N; no phase freedom for density matrices.
Verdict density_invariance(const DensityMatrix& rho, OperatorFamily group,
                           int trials, double tol, Rng& rng);

/// Normalizes a1*psi + a2*phi and runs is_dark_random on it.
Verdict superposition_closure_check(const StateVector& psi, const StateVector& phi,
                                    Complex a1, Complex a2, int trials,
                                    double tol, Rng& rng);

struct CollapseVerdict {
  double remnant_norm = 0;
  bool vacuous = false;  // zero remnant: nothing to certify
  Verdict dark;          // verdict on the normalized remnant, when nonzero
  bool pass = false;     // vacuous or dark.pass
};

/// Collapse psi_n onto phi_m on the named sites and certify the remnant.
/// A remnant of norm <= tol is reported as vacuously dark.
CollapseVerdict theorem5_check(const StateVector& psi_n, const StateVector& phi_m,
                               const std::vector<int>& parties, int trials,
                               double tol, Rng& rng);

}  // namespace darkstate
