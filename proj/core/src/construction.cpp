#include "darkstate/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "darkstate/operators.hpp"

namespace darkstate {

StateVector pair_singlet() {
  std::vector<Term> terms{
      {BasisState::from_labels(2, {0.5, -0.5}), 1.0},
      {BasisState::from_labels(2, {-0.5, 0.5}), -1.0},
  };
  return state_from_terms(2, 2, terms, true);
}

namespace {
int permutation_sign(const std::vector<int>& perm) {
  // Count inversions; parity gives the sign.
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}
}  // namespace

StateVector p_all_state(int d) {
  if (d < 2) throw std::invalid_argument("p_all_state: d must be >= 2");
  // Descending distinct labels, doubled: d-1, d-3, ..., -(d-1).
  std::vector<int> seed(d);
  for (int s = 0; s < d; ++s) seed[s] = d - 1 - 2 * s;

  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::vector<int> twice(d);
    for (int s = 0; s < d; ++s) twice[s] = seed[perm[s]];
    terms.emplace_back(BasisState(d, std::move(twice)),
                       static_cast<double>(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return state_from_terms(d, d, terms, true);
}

StateVector partial_singlet(const StateVector& psi, int j, int k) {
  if (j == k) throw std::invalid_argument("partial_singlet: sites must differ");
  StateVector swapped = swap_sites(psi, j, k);
  return StateVector(psi.d(), psi.n(), psi.amps() - swapped.amps());
}

StateVector psi3() { return p_all_state(3); }
StateVector psi4() { return p_all_state(4); }

std::pair<StateVector, StateVector> four_qubit_dark_pair() {
  auto ket = [](int b1, int b2, int b3, int b4) {
    // printed 0 -> +1/2, 1 -> -1/2
    auto lab = [](int b) { return b == 0 ? 0.5 : -0.5; };
    return BasisState::from_labels(2, {lab(b1), lab(b2), lab(b3), lab(b4)});
  };
  std::vector<Term> t0{
      {ket(0, 0, 1, 1), 1.0},  {ket(1, 1, 0, 0), 1.0},
      {ket(0, 1, 1, 0), 1.0},  {ket(1, 0, 0, 1), 1.0},
      {ket(0, 1, 0, 1), -2.0}, {ket(1, 0, 1, 0), -2.0},
  };
  std::vector<Term> t1{
      {ket(0, 0, 1, 1), 1.0}, {ket(1, 1, 0, 0), 1.0},
      {ket(0, 1, 1, 0), -1.0}, {ket(1, 0, 0, 1), -1.0},
  };
  return {state_from_terms(2, 4, t0, true), state_from_terms(2, 4, t1, true)};
}

StateVector pairing_singlet_product(
    const std::vector<std::pair<int, int>>& pairing) {
  if (pairing.empty())
    throw std::invalid_argument("pairing_singlet_product: empty matching");
  const int n = 2 * static_cast<int>(pairing.size());
  std::vector<bool> seen(n + 1, false);
  for (auto [a, b] : pairing) {
    if (a < 1 || a > n || b < 1 || b > n || a == b || seen[a] || seen[b])
      throw std::invalid_argument("pairing_singlet_product: not a perfect matching of 1..N");
    seen[a] = seen[b] = true;
  }
  StateVector product = pair_singlet();
  for (size_t p = 1; p < pairing.size(); ++p) product = tensor(product, pair_singlet());
  // Tensor slot 2p-1,2p holds pair p; route slots to the matched sites.
  std::vector<int> slot_of_site(n + 1, 0);
  int slot = 1;
  for (auto [a, b] : pairing) {
    slot_of_site[a] = slot++;
    slot_of_site[b] = slot++;
  }
  std::vector<int> perm(n);
  for (int site = 1; site <= n; ++site) perm[site - 1] = slot_of_site[site];
  return permute_sites(product, perm);
}

StateVector qutrit_semidark_example() {
  std::vector<Term> terms{
      {BasisState::from_labels(3, {1, -1}), 1.0},
      {BasisState::from_labels(3, {-1, 1}), 1.0},
      {BasisState::from_labels(3, {0, 0}), -1.0},
  };
  return state_from_terms(3, 2, terms, true);
}

std::pair<double, double> werner_beta_range(int d) {
  return {-1.0 / (d * (d - 1.0)), 1.0 / (d * (d + 1.0))};
}

DensityMatrix werner_state(int d, double beta) {
  if (d < 2) throw std::invalid_argument("werner_state: d must be >= 2");
  auto [lo, hi] = werner_beta_range(d);
  if (beta < lo - 1e-12 || beta > hi + 1e-12)
    throw std::invalid_argument("werner_state: beta outside the PSD range");
  const double alpha = (1.0 - beta * d) / (d * d);
  ComplexMatrix rho = alpha * ComplexMatrix::Identity(d * d, d * d) +
                      beta * flip_operator(d);
  return DensityMatrix(d, 2, std::move(rho));
}

}  // namespace darkstate
