#pragma once

#include <random>
#include <vector>

#include "darkstate/hilbert.hpp"
#include "darkstate/numkernel.hpp"

namespace darkstate::testing {

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline StateVector random_state(int d, int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(product_dim(d, n));
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return StateVector(d, n, v / v.norm());
}

// Residual of v against the span of `basis` (assumed orthonormal):
// norm of the component outside the span.
inline double outside_span_residual(const StateVector& v,
                                    const std::vector<StateVector>& basis) {
  ComplexVector r = v.amps();
  for (const auto& b : basis) r -= b.amps().dot(r) * b.amps();
  return r.norm();
}

// Unit vector orthogonal to the span of `basis`, built from a random draw.
inline StateVector random_orthogonal_complement(const std::vector<StateVector>& basis,
                                                int d, int n, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    StateVector w = random_state(d, n, rng);
    ComplexVector r = w.amps();
    for (const auto& b : basis) r -= b.amps().dot(r) * b.amps();
    if (r.norm() > 1e-6) return StateVector(d, n, r / r.norm());
  }
  throw std::runtime_error("complement draw failed: span is (nearly) everything");
}

}  // namespace darkstate::testing
