// Acceptance suite: one line per criterion, pass/fail, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "darkstate/construction.hpp"
#include "darkstate/dfs.hpp"
#include "darkstate/solver.hpp"
#include "darkstate/verify.hpp"

using namespace darkstate;

namespace {

int g_failures = 0;

void report(int criterion, const char* label, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label,
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

StateVector random_state(int d, int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(product_dim(d, n));
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return StateVector(d, n, v / v.norm());
}

double outside_residual(const StateVector& v, const std::vector<StateVector>& basis) {
  ComplexVector r = v.amps();
  for (const auto& b : basis) r -= b.amps().dot(r) * b.amps();
  return r.norm();
}

// ---- criterion 1: Theorem 1 ------------------------------------------------
void criterion1() {
  Rng rng(101);
  bool ok = true;
  std::string detail;
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    auto sub = semidark_basis(n, d);
    for (const auto& v : sub.basis)
      if (!is_semidark_random(v, 50, 1e-8, rng).pass) {
        ok = false;
        detail = "in-span vector failed at (" + std::to_string(n) + "," + std::to_string(d) + ")";
      }
    if (sub.dim() == 0) continue;
    for (int t = 0; t < 3; ++t) {
      // Unit vector with a component of exactly 0.1 outside the subspace.
      StateVector w = random_state(d, n, rng);
      ComplexVector r = w.amps();
      for (const auto& b : sub.basis) r -= b.amps().dot(r) * b.amps();
      if (r.norm() < 1e-6) continue;
      r /= r.norm();
      ComplexVector inside = sub.basis[0].amps();
      StateVector tilted(d, n, std::sqrt(1 - 0.01) * inside + 0.1 * r);
      if (is_semidark_random(tilted.normalized(), 50, 1e-8, rng).pass) {
        ok = false;
        detail = "out-of-span vector passed at (" + std::to_string(n) + "," + std::to_string(d) + ")";
      }
    }
  }
  report(1, "singlet equivalence (Theorem 1)", ok, detail);
}

// ---- criterion 2: Theorem 2 ------------------------------------------------
void criterion2() {
  Rng rng(102);
  std::vector<StateVector> suite{pair_singlet(), psi3(), psi4(),
                                 qutrit_semidark_example(),
                                 pairing_singlet_product({{1, 2}, {3, 4}}),
                                 pairing_singlet_product({{1, 3}, {2, 4}}),
                                 random_state(2, 4, rng), random_state(3, 2, rng)};
  auto [d0, d1] = four_qubit_dark_pair();
  suite.push_back(d0);
  suite.push_back(d1);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 3}})
    for (const auto& v : dark_basis(n, d).basis) suite.push_back(v);
  for (const auto& v : semidark_basis(2, 3).basis) suite.push_back(v);

  bool ok = true;
  std::string detail;
  for (const auto& psi : suite) {
    bool residual_zero = annihilation_residuals(psi, OperatorFamily::sud) <= 1e-10;
    bool verdict = is_dark_random(psi, 25, 1e-8, rng).pass;
    if (residual_zero != verdict) {
      ok = false;
      detail = "residual/verdict disagreement on a suite state";
    }
  }
  report(2, "dark criterion (Theorem 2)", ok, detail);
}

// ---- criterion 3: non-existence --------------------------------------------
void criterion3() {
  bool ok = true;
  std::string detail;
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}, {4, 3}, {5, 3}}) {
    if (dark_basis(n, d).dim() != 0 || dark_dimension_oracle(n, d) != 0) {
      ok = false;
      detail = "nonzero at (" + std::to_string(n) + "," + std::to_string(d) + ")";
    }
  }
  // All instances with d^N <= 4096 and d not dividing N. N >= 2 forces
  // d <= 64; the N = 1 cases are included for every d up to 64 as well
  // (beyond that the solver's dense local operators are pointless for a
  // trivially empty kernel).
  for (int d = 2; d <= 64; ++d) {
    Index dim = d;
    for (int n = 1; dim <= 4096; ++n, dim *= d) {
      if (n % d == 0) continue;
      Index numeric = dark_basis(n, d).dim();
      long oracle = dark_dimension_oracle(n, d);
      if (numeric != 0 || oracle != 0) {
        ok = false;
        detail = "nonzero at (" + std::to_string(n) + "," + std::to_string(d) + ")";
      }
    }
  }
  report(3, "non-existence for d not dividing N", ok, detail);
}

// ---- criterion 4: existence (Theorem 3) ------------------------------------
void criterion4() {
  Rng rng(104);
  auto d33 = dark_basis(3, 3);
  bool ok = d33.dim() == 1;
  std::string detail;
  if (ok) {
    double overlap = std::abs(inner(d33.basis[0], psi3()));
    ok = overlap >= 1 - 1e-9;
    if (!ok) detail = "overlap with psi3 = " + std::to_string(overlap);
  } else {
    detail = "dim(3,3) = " + std::to_string(d33.dim());
  }
  if (!is_dark_random(psi4(), 25, 1e-8, rng).pass) {
    ok = false;
    detail = "psi4 failed the SU(4) invariance check";
  }
  report(4, "existence at N = d (Theorem 3)", ok, detail);
}

// ---- criterion 5: four-qubit structure -------------------------------------
void criterion5() {
  auto census = su2_multiplet_census(4, 2);
  bool ok = census.size() == 3 && census[0] == std::pair{2.0, 1L} &&
            census[1] == std::pair{1.0, 3L} && census[2] == std::pair{0.0, 2L};
  std::string detail = ok ? "" : "census mismatch";

  auto solved = dark_basis(4, 2);
  if (solved.dim() != 2) {
    ok = false;
    detail = "dark dim(4,2) = " + std::to_string(solved.dim());
  }
  auto [d0, d1] = four_qubit_dark_pair();
  if (std::abs(inner(d0, d1)) > 1e-10) {
    ok = false;
    detail = "printed pair not orthogonal";
  }
  if (outside_residual(d0, solved.basis) > 1e-9 ||
      outside_residual(d1, solved.basis) > 1e-9) {
    ok = false;
    detail = "printed pair does not span the solved subspace";
  }
  report(5, "four-qubit structure 5+3+3+3+1+1", ok, detail);
}

// ---- criterion 6: Theorem 4 ------------------------------------------------
void criterion6() {
  Rng rng(106);
  auto [d0, d1] = four_qubit_dark_pair();
  bool ok = true;
  std::string detail;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    Complex a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    if (!superposition_closure_check(d0, d1, a, b, 25, 1e-8, rng).pass) {
      ok = false;
      detail = "coherent superposition failed";
    }
  }
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int t = 0; t < 10; ++t) {
    double p = unif(rng);
    ComplexMatrix mix = p * (d0.amps() * d0.amps().adjoint()) +
                        (1 - p) * (d1.amps() * d1.amps().adjoint());
    if (!density_invariance(DensityMatrix(2, 4, mix), OperatorFamily::sud, 25, 1e-8, rng).pass) {
      ok = false;
      detail = "convex mixture failed";
    }
  }
  report(6, "superposition closure (Theorem 4)", ok, detail);
}

// ---- criterion 7: Theorem 5 ------------------------------------------------
void criterion7() {
  Rng rng(107);
  auto [d0, d1] = four_qubit_dark_pair();
  std::vector<StateVector> darks{d0, d1, pairing_singlet_product({{1, 2}, {3, 4}}),
                                 pairing_singlet_product({{1, 3}, {2, 4}}),
                                 pairing_singlet_product({{1, 4}, {2, 3}})};
  std::vector<std::vector<int>> parties{{1, 2}, {1, 3}, {2, 4}, {3, 4}, {1, 4}};
  bool ok = true;
  std::string detail;
  int vacuous = 0;
  for (int t = 0; t < 10; ++t) {
    const auto& psi = darks[t % darks.size()];
    const auto& p = parties[t % parties.size()];
    auto cv = theorem5_check(psi, pair_singlet(), p, 25, 1e-8, rng);
    if (cv.vacuous) {
      ++vacuous;
      continue;
    }
    if (!cv.pass) {
      ok = false;
      detail = "nonzero remnant failed the darkness check";
    }
  }
  report(7, "collapse remnants stay dark (Theorem 5)", ok,
         detail.empty() ? std::to_string(vacuous) + " vacuous outcomes" : detail);
}

// ---- criterion 8: conjecture audit -----------------------------------------
void criterion8() {
  struct Case { int d, m; long expected; };
  // Expected values confirmed against the brute-force null space below.
  std::vector<Case> cases{{2, 1, 1}, {2, 2, 2}, {2, 3, 5}, {3, 1, 1}, {3, 2, 5}};
  bool ok = true;
  std::string detail;
  for (auto [d, m, expected] : cases) {
    auto rep = conjecture_check(d, m);
    if (rep.numeric_dim != expected || !rep.matches_oracle || !rep.conjecture_holds) {
      ok = false;
      detail = "(d=" + std::to_string(d) + ", m=" + std::to_string(m) +
               ") numeric=" + std::to_string(rep.numeric_dim) +
               " oracle=" + std::to_string(rep.oracle_dim);
    }
  }
  report(8, "conjecture audit (m orthogonal dark states at N = md)", ok, detail);
}

// ---- criterion 9: Werner invariance ----------------------------------------
void criterion9() {
  Rng rng(109);
  bool ok = true;
  std::string detail;
  for (int d = 2; d <= 3; ++d) {
    auto [lo, hi] = werner_beta_range(d);
    for (double beta : {lo, hi / 2, hi}) {
      if (!density_invariance(werner_state(d, beta), OperatorFamily::sud, 50, 1e-9, rng).pass) {
        ok = false;
        detail = "invariance failed at d=" + std::to_string(d);
      }
    }
  }
  // Expansion oracle for the singlet projector: |Psi-><Psi-| = (I - V)/2,
  // i.e. the Werner state at beta = -1/2.
  ComplexMatrix proj = pair_singlet().amps() * pair_singlet().amps().adjoint();
  if ((werner_state(2, -0.5).entries() - proj).cwiseAbs().maxCoeff() > 1e-12) {
    ok = false;
    detail = "singlet projector is not the beta = -1/2 Werner state";
  }
  report(9, "Werner invariance (Eqs. 2-3)", ok, detail);
}

// ---- criterion 10: DFS simulation ------------------------------------------
void criterion10() {
  std::vector<std::pair<Complex, Complex>> inputs{{1, 0}, {0, 1}, {1, 1}, {1, Complex(0, 1)}};
  DfsReport rep = dfs_experiment(inputs, {NoiseGroup::sud, 10000}, 4242);
  DfsReport again = dfs_experiment(inputs, {NoiseGroup::sud, 10000}, 4242);
  bool ok = rep.encoded_min_fidelity >= 1 - 1e-9 &&
            std::abs(rep.bare_mean_fidelity - 0.5) <= 0.02 &&
            rep.encoded_min_fidelity == again.encoded_min_fidelity &&
            rep.bare_mean_fidelity == again.bare_mean_fidelity;
  char buf[128];
  std::snprintf(buf, sizeof buf, "encoded_min=%.3e bare_mean=%.4f",
                1 - rep.encoded_min_fidelity, rep.bare_mean_fidelity);
  report(10, "decoherence-free qubit simulation", ok, buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "OK" : "FAILURES",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
