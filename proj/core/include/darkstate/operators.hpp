#pragma once

#include <array>
#include <vector>

#include "darkstate/hilbert.hpp"
#include "darkstate/numkernel.hpp"

namespace darkstate {

enum class Ladder { raise, lower };

/// A d x d single-site operator.
struct LocalOperator {
  int d;
  ComplexMatrix mat;
};

/// Spin ladder in the spin-(d-1)/2 irreducible representation:
/// <m+-1| J+- |m> = sqrt(j(j+1) - m(m+-1)), j = (d-1)/2.
LocalOperator spin_ladder(int d, Ladder dir);

/// J0 = (1/2)[J+, J-] = diag of the site labels.
LocalOperator spin_j0(int d);

/// SU(d) ladder coupling levels h and j (1-based; level 1 carries the
/// highest label): raise is the matrix unit E_{hj} sending level j to
/// level h, lower its adjoint. There are d(d-1) raising members.
LocalOperator sud_ladder(int d, int h, int j, Ladder dir);

/// All 2d(d-1) collective SU(d) ladder generators as local operators.
std::vector<LocalOperator> sud_ladder_family(int d);

/// The adjacent subfamily {J_{+-(j,j+1)} : 1 <= j <= d-1}.
std::vector<LocalOperator> adjacent_ladder_family(int d);

/// Sum of one fixed single-site operator over all N sites.
class CollectiveOperator {
 public:
  CollectiveOperator(LocalOperator local, int n);

  int d() const { return local_.d; }
  int n() const { return n_; }
  const LocalOperator& local() const { return local_; }

  /// Full d^N x d^N matrix (materialized on demand).
  ComplexMatrix matrix() const;

  /// Action on a state without materializing the full matrix.
  StateVector apply(const StateVector& psi) const;

 private:
  LocalOperator local_;
  int n_;
};

/// exp(i(bx Jx + by Jy + bz Jz)) in the spin-(d-1)/2 representation.
/// Unitary with determinant 1.
ComplexMatrix su2_rotation(int d, const std::array<double, 3>& beta);

/// Rotation about a uniformly random axis by a uniform angle in [0, 2pi).
/// Not exact Haar on SU(2); the family is continuously connected to the
/// identity and generates the full group, which is all the randomized
/// invariance checks need.
ComplexMatrix random_su2_rotation(int d, Rng& rng);

/// The d^2 x d^2 flip operator: V (phi (x) psi) = psi (x) phi.
ComplexMatrix flip_operator(int d);

/// Permutation unitary exchanging levels h and j (1-based), identity
/// elsewhere. Determinant -1.
ComplexMatrix level_swap(int d, int h, int j);

}  // namespace darkstate
