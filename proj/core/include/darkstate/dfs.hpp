#pragma once

#include <utility>
#include <vector>

#include "darkstate/hilbert.hpp"

namespace darkstate {

enum class NoiseGroup { su2, sud };

struct ChannelSpec {
  NoiseGroup group = NoiseGroup::sud;
  int samples = 1;  // independent collective unitaries, one per shot
};

/// Logical qubit encoded in the two orthogonal 4-qubit dark states.
class LogicalEncoding {
 public:
  LogicalEncoding();  // from four_qubit_dark_pair

  const StateVector& basis0() const { return basis0_; }
  const StateVector& basis1() const { return basis1_; }

  /// a*basis0 + b*basis1, unit norm. Throws when a = b = 0.
  StateVector encode(Complex a, Complex b) const;

  /// Project rho onto span(basis0, basis1) and read the logical amplitudes
  /// back out (principal eigenvector of the 2x2 logical block), up to a
  /// global phase.
  std::pair<Complex, Complex> decode(const DensityMatrix& rho) const;

 private:
  StateVector basis0_, basis1_;
};

/// Ensemble average (1/K) sum_s W_s |psi><psi| W_s^dag over K independent
/// collective unitaries W_s = U_s^(x)N.
DensityMatrix collective_channel(const StateVector& psi, const ChannelSpec& spec,
                                 Rng& rng);

/// <psi|rho|psi>, clipped to [0,1].
double fidelity(const DensityMatrix& rho, const StateVector& psi);

struct DfsReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double encoded_min_fidelity = 1;
  double encoded_mean_fidelity = 1;
  double bare_min_fidelity = 1;
  double bare_mean_fidelity = 1;
};

/// For each logical input (a,b): fidelity of the DFS-encoded 4-qubit state
/// and of a bare single qubit a|+1/2> + b|-1/2> under the same channel
/// family. The bare-qubit baseline is this artifact's choice of comparison.
DfsReport dfs_experiment(const std::vector<std::pair<Complex, Complex>>& inputs,
                         const ChannelSpec& spec, std::uint64_t seed);

struct QuditFeasibility {
  int d = 0;
  int n = 0;           // d^2 sites
  long oracle_dim = 0; // hook-length count of orthogonal dark states
  Index numeric_dim = -1;  // -1 when too large to solve numerically
  bool feasible = false;   // oracle_dim >= d
};

/// Feasibility of a decoherence-free qudit at N = d^2, reported from the
/// solver dimensions (numeric confirmation only where affordable).
QuditFeasibility qudit_feasibility(int d);

}  // namespace darkstate
