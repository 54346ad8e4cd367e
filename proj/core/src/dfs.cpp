#include "darkstate/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "darkstate/construction.hpp"
#include "darkstate/operators.hpp"
#include "darkstate/solver.hpp"

namespace darkstate {

LogicalEncoding::LogicalEncoding()
    : basis0_(2, 4), basis1_(2, 4) {
  auto pair = four_qubit_dark_pair();
  basis0_ = std::move(pair.first);
  basis1_ = std::move(pair.second);
}

StateVector LogicalEncoding::encode(Complex a, Complex b) const {
  double scale = std::sqrt(std::norm(a) + std::norm(b));
  if (scale < 1e-300)
    throw std::invalid_argument("LogicalEncoding::encode: zero logical state");
  return StateVector(2, 4, (a * basis0_.amps() + b * basis1_.amps()) / scale);
}

std::pair<Complex, Complex> LogicalEncoding::decode(const DensityMatrix& rho) const {
  Eigen::Matrix2cd block;
  const StateVector* basis[2] = {&basis0_, &basis1_};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      block(i, j) = basis[i]->amps().dot(rho.entries() * basis[j]->amps());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
  Eigen::Vector2cd v = es.eigenvectors().col(1);  // largest eigenvalue
  return {v(0), v(1)};
}

DensityMatrix collective_channel(const StateVector& psi, const ChannelSpec& spec,
                                 Rng& rng) {
  if (spec.samples < 1)
    throw std::invalid_argument("collective_channel: samples must be >= 1");
  const Index dim = psi.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < spec.samples; ++s) {
    ComplexMatrix u = (spec.group == NoiseGroup::sud)
                          ? haar_special_unitary(psi.d(), rng)
                          : random_su2_rotation(psi.d(), rng);
    StateVector out = apply_local_all_sites(u, psi);
    acc += out.amps() * out.amps().adjoint();
  }
  acc /= static_cast<double>(spec.samples);
  return DensityMatrix(psi.d(), psi.n(), std::move(acc));
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.d() != psi.d() || rho.n() != psi.n())
    throw std::invalid_argument("fidelity: shape mismatch");
  double f = std::real(psi.amps().dot(rho.entries() * psi.amps()));
  return std::clamp(f, 0.0, 1.0);
}

DfsReport dfs_experiment(const std::vector<std::pair<Complex, Complex>>& inputs,
                         const ChannelSpec& spec, std::uint64_t seed) {
  if (inputs.empty()) throw std::invalid_argument("dfs_experiment: no inputs");
  DfsReport rep;
  rep.samples = spec.samples;
  rep.seed = seed;
  LogicalEncoding enc;
  double enc_sum = 0, bare_sum = 0;
  rep.encoded_min_fidelity = 1;
  rep.bare_min_fidelity = 1;
  for (size_t i = 0; i < inputs.size(); ++i) {
    auto [a, b] = inputs[i];
    // Derived per-input streams keep results independent of input order.
    Rng rng_enc(seed ^ (0x9e3779b97f4a7c15ull * (2 * i + 1)));
    Rng rng_bare(seed ^ (0x9e3779b97f4a7c15ull * (2 * i + 2)));

    StateVector encoded = enc.encode(a, b);
    double f_enc = fidelity(collective_channel(encoded, spec, rng_enc), encoded);

    double scale = std::sqrt(std::norm(a) + std::norm(b));
    std::vector<Term> bare_terms{
        {BasisState::from_labels(2, {0.5}), a / scale},
        {BasisState::from_labels(2, {-0.5}), b / scale},
    };
    StateVector bare = state_from_terms(2, 1, bare_terms, false);
    double f_bare = fidelity(collective_channel(bare, spec, rng_bare), bare);

    enc_sum += f_enc;
    bare_sum += f_bare;
    rep.encoded_min_fidelity = std::min(rep.encoded_min_fidelity, f_enc);
    rep.bare_min_fidelity = std::min(rep.bare_min_fidelity, f_bare);
  }
  rep.encoded_mean_fidelity = enc_sum / static_cast<double>(inputs.size());
  rep.bare_mean_fidelity = bare_sum / static_cast<double>(inputs.size());
  return rep;
}

QuditFeasibility qudit_feasibility(int d) {
  QuditFeasibility rep;
  rep.d = d;
  rep.n = d * d;
  rep.oracle_dim = dark_dimension_oracle(rep.n, d);
  if (d == 2) rep.numeric_dim = dark_basis(rep.n, d).dim();
  rep.feasible = rep.oracle_dim >= d;
  return rep;
}

}  // namespace darkstate
