#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darkstate/numkernel.hpp"

namespace darkstate {

/// Hard cap on the product-space dimension d^N.
inline constexpr Index kDimCap = Index{1} << 20;

/// d^N with the cap enforced. Throws std::invalid_argument beyond the cap.
Index product_dim(int d, int n);

/// A computational basis state of N qudits. Site labels run over
/// {-(d-1)/2, ..., (d-1)/2} — integers for odd d, half-integers for even d.
/// Labels are stored doubled (2a) so half-integers stay exact.
class BasisState {
 public:
  BasisState(int d, std::vector<int> twice_labels);
  /// Convenience: labels given as doubles (e.g. {0.5, -0.5}).
  static BasisState from_labels(int d, const std::vector<double>& labels);

  int d() const { return d_; }
  int n() const { return static_cast<int>(twice_.size()); }
  int twice_label(int site) const { return twice_[site]; }       // 0-based
  double label(int site) const { return twice_[site] / 2.0; }
  const std::vector<int>& twice_labels() const { return twice_; }

 private:
  int d_;
  std::vector<int> twice_;
};

/// Canonical flat index. Site 1 is the most significant digit; within a
/// site, labels descend from +(d-1)/2, so digit = (d-1)/2 - a.
Index index_of(const BasisState& b);
BasisState label_of(int d, int n, Index idx);

/// Sum of the site labels, exact (computed on doubled labels).
double total_label_sum(const BasisState& b);

/// Per-site digit helpers shared by the operator machinery.
inline int digit_of_twice_label(int d, int twice_a) { return (d - 1 - twice_a) / 2; }
inline int twice_label_of_digit(int d, int digit) { return d - 1 - 2 * digit; }

/// Complex amplitude vector over the d^N product basis in index_of order.
class StateVector {
 public:
  StateVector(int d, int n);                       // zero vector
  StateVector(int d, int n, ComplexVector amps);   // takes ownership

  int d() const { return d_; }
  int n() const { return n_; }
  Index dim() const { return amps_.size(); }
  const ComplexVector& amps() const { return amps_; }
  ComplexVector& amps() { return amps_; }
  Complex operator[](Index i) const { return amps_(i); }

  double norm() const { return amps_.norm(); }
  StateVector normalized() const;

 private:
  int d_, n_;
  ComplexVector amps_;
};

using Term = std::pair<BasisState, Complex>;

/// Assemble a state from (basis state, coefficient) terms. Repeated basis
/// states accumulate. With normalize set, the result is scaled to unit norm
/// (throws on an empty term list or a cancelled-out zero vector).
StateVector state_from_terms(int d, int n, const std::vector<Term>& terms,
                             bool normalize);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

StateVector tensor(const StateVector& a, const StateVector& b);

/// Full-matrix application; no implicit normalization.
StateVector apply(const ComplexMatrix& op, const StateVector& psi);

/// Apply a single-site operator (d x d) to one site (1-based).
StateVector apply_local(const ComplexMatrix& op, int site, const StateVector& psi);

/// Apply the same single-site unitary to every site: U^(x)N |psi>.
StateVector apply_local_all_sites(const ComplexMatrix& op, const StateVector& psi);

/// Exchange the labels on two sites (1-based).
StateVector swap_sites(const StateVector& psi, int site_j, int site_k);

/// Reorder sites: new site s carries what old site perm[s-1] carried
/// (perm is a 1-based permutation of 1..N).
StateVector permute_sites(const StateVector& psi, const std::vector<int>& perm);

/// Partial inner product <phi_M| psi_N taken on the named sites (1-based,
/// distinct; `parties[i]` holds site i of phi). The remaining N-M sites keep
/// their original relative order. Result is unnormalized, possibly zero.
StateVector collapse(const StateVector& psi_n, const StateVector& phi_m,
                     const std::vector<int>& parties);

/// d^N x d^N mixed state.
class DensityMatrix {
 public:
  DensityMatrix(int d, int n, ComplexMatrix entries);
  static DensityMatrix pure(const StateVector& psi);

  int d() const { return d_; }
  int n() const { return n_; }
  const ComplexMatrix& entries() const { return mat_; }
  ComplexMatrix& entries() { return mat_; }

  /// Hermitian within 1e-10, trace 1 within 1e-10, min eigenvalue >= -1e-9.
  bool is_valid(double herm_tol = 1e-10, double trace_tol = 1e-10,
                double psd_tol = 1e-9) const;

 private:
  int d_, n_;
  ComplexMatrix mat_;
};

}  // namespace darkstate
