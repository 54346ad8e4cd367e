#include "darkstate/verify.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace darkstate {

double annihilation_residuals(const StateVector& psi, OperatorFamily family) {
  const int d = psi.d();
  auto locals = (family == OperatorFamily::su2)
                    ? std::vector<LocalOperator>{spin_ladder(d, Ladder::raise),
                                                 spin_ladder(d, Ladder::lower)}
                    : sud_ladder_family(d);
  double worst = 0;
  for (const auto& local : locals) {
    CollectiveOperator op(local, psi.n());
    worst = std::max(worst, op.apply(psi).norm());
  }
  return worst;
}

namespace {

Verdict invariance_trials(const StateVector& psi, int trials, double tol,
                          bool strict,
                          const std::function<ComplexMatrix()>& sample) {
  if (trials < 1) throw std::invalid_argument("invariance check: trials must be >= 1");
  Verdict v;
  v.trials = trials;
  for (int t = 0; t < trials; ++t) {
    ComplexMatrix u = sample();
    Complex overlap = inner(psi, apply_local_all_sites(u, psi));
    double dev = strict ? std::abs(overlap - Complex(1, 0))
                        : 1.0 - std::abs(overlap);
    if (dev > v.max_deviation) {
      v.max_deviation = dev;
      v.worst_trial = t;
    }
  }
  v.pass = v.max_deviation <= tol;
  return v;
}

}  // namespace

Verdict is_dark_random(const StateVector& psi, int trials, double tol, Rng& rng,
                       bool strict) {
  const int d = psi.d();
  return invariance_trials(psi, trials, tol, strict,
                           [&] { return haar_special_unitary(d, rng); });
}

Verdict is_semidark_random(const StateVector& psi, int trials, double tol,
                           Rng& rng, bool strict) {
  const int d = psi.d();
  return invariance_trials(psi, trials, tol, strict,
                           [&] { return random_su2_rotation(d, rng); });
}

Verdict density_invariance(const DensityMatrix& rho, OperatorFamily group,
                           int trials, double tol, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("density_invariance: trials must be >= 1");
  const int d = rho.d();
  Verdict v;
  v.trials = trials;
  for (int t = 0; t < trials; ++t) {
    ComplexMatrix u = (group == OperatorFamily::sud)
                          ? haar_special_unitary(d, rng)
                          : random_su2_rotation(d, rng);
    ComplexMatrix w = u;
    for (int s = 1; s < rho.n(); ++s) w = kron(w, u);
    double dev = (w * rho.entries() * w.adjoint() - rho.entries()).norm();
    if (dev > v.max_deviation) {
      v.max_deviation = dev;
      v.worst_trial = t;
    }
  }
  v.pass = v.max_deviation <= tol;
  return v;
}

Verdict superposition_closure_check(const StateVector& psi, const StateVector& phi,
                                    Complex a1, Complex a2, int trials,
                                    double tol, Rng& rng) {
  StateVector combo(psi.d(), psi.n(), a1 * psi.amps() + a2 * phi.amps());
  if (combo.norm() < 1e-12)
    throw std::invalid_argument("superposition_closure_check: zero superposition");
  return is_dark_random(combo.normalized(), trials, tol, rng);
}

CollapseVerdict theorem5_check(const StateVector& psi_n, const StateVector& phi_m,
                               const std::vector<int>& parties, int trials,
                               double tol, Rng& rng) {
  StateVector remnant = collapse(psi_n, phi_m, parties);
  CollapseVerdict out;
  out.remnant_norm = remnant.norm();
  if (out.remnant_norm <= tol) {
    out.vacuous = true;
    out.pass = true;
    return out;
  }
  out.dark = is_dark_random(remnant.normalized(), trials, tol, rng);
  out.pass = out.dark.pass;
  return out;
}

}  // namespace darkstate
