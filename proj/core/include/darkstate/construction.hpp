#pragma once

#include <utility>
#include <vector>

#include "darkstate/hilbert.hpp"

namespace darkstate {

/// (|+1/2,-1/2> - |-1/2,+1/2>)/sqrt(2), the two-qubit singlet.
StateVector pair_singlet();

/// The fully antisymmetrized d-party d-level state: sum over all d!
/// permutations of the distinct labels with the permutation sign,
/// normalized by 1/sqrt(d!). Seed ordering is descending labels.
StateVector p_all_state(int d);

/// Identity minus the site swap on sites j and k (1-based), term-wise.
/// Output is unnormalized.
StateVector partial_singlet(const StateVector& psi, int j, int k);

StateVector psi3();  // p_all_state(3)
StateVector psi4();  // p_all_state(4)

/// The two orthogonal 4-qubit dark states, normalized. Printed kets map
/// 0 -> +1/2, 1 -> -1/2.
std::pair<StateVector, StateVector> four_qubit_dark_pair();

/// Product of two-qubit singlets routed to the matched sites.
/// `pairing` is a perfect matching of {1..N} (1-based site pairs).
StateVector pairing_singlet_product(const std::vector<std::pair<int, int>>& pairing);

/// (|1,-1> + |-1,1> - |0,0>)/sqrt(3): a two-qutrit singlet that is
/// semi-dark but not dark.
StateVector qutrit_semidark_example();

/// Werner state rho = alpha*I + beta*V on two qudits, with alpha fixed by
/// trace normalization: alpha = (1 - beta*d)/d^2. Throws when beta is
/// outside the positive-semidefinite range
/// [-1/(d(d-1)), 1/(d(d+1))].
DensityMatrix werner_state(int d, double beta);

/// PSD range of beta for werner_state.
std::pair<double, double> werner_beta_range(int d);

}  // namespace darkstate
