#pragma once

#include <utility>
#include <vector>

#include "darkstate/hilbert.hpp"
#include "darkstate/operators.hpp"

namespace darkstate {

enum class SubspaceKind { dark, semidark };

/// Which collective ladder family defines the dark kernel: the d-1 adjacent
/// pairs (sufficient by the SU(2)_{j,j+1} decomposition) or all 2d(d-1)
/// ladders (used as a cross-check).
enum class LadderFamily { adjacent, full };

struct DarkSubspace {
  int d = 0;
  int n = 0;
  SubspaceKind kind = SubspaceKind::dark;
  double tol = 0;
  std::vector<StateVector> basis;  // orthonormal

  Index dim() const { return static_cast<Index>(basis.size()); }
};

/// Joint kernel of the collective spin ladders J+ and J-, i.e. the singlet
/// subspace. J0 annihilation follows from the commutator and is asserted,
/// not imposed.
DarkSubspace semidark_basis(int n, int d, double tol = 1e-9);

/// Joint kernel of the collective SU(d) ladder family.
DarkSubspace dark_basis(int n, int d, double tol = 1e-9,
                        LadderFamily family = LadderFamily::adjacent);

/// Combinatorial cross-check, independent of the numerics: 0 when d does
/// not divide N, else the number of standard Young tableaux of the
/// d x (N/d) rectangle (hook-length formula, via Schur-Weyl duality).
long dark_dimension_oracle(int n, int d);

struct ConjectureReport {
  int d = 0;
  int m = 0;
  int n = 0;
  Index numeric_dim = 0;
  long oracle_dim = 0;
  bool conjecture_holds = false;   // numeric_dim >= m
  bool matches_oracle = false;     // numeric_dim == oracle_dim
};

/// Evaluate the "m orthogonal dark states at N = m*d" claim numerically.
ConjectureReport conjecture_check(int d, int m, double tol = 1e-9);

/// Decomposition of the collective spin representation into (j, multiplicity)
/// pairs, by highest-weight counting: mult(j) = #{J0 = j states killed by J+}.
std::vector<std::pair<double, long>> su2_multiplet_census(int n, int d);

}  // namespace darkstate
