#include "darkstate/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace darkstate {

LocalOperator spin_ladder(int d, Ladder dir) {
  if (d < 2) throw std::invalid_argument("spin_ladder: d must be >= 2");
  const double j = (d - 1) / 2.0;
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);
  // digit g carries label a = (d-1)/2 - g; raising sends a -> a+1,
  // i.e. digit g -> g-1.
  for (int g = 1; g < d; ++g) {
    double a = j - g;
    raise(g - 1, g) = std::sqrt(j * (j + 1) - a * (a + 1));
  }
  if (dir == Ladder::raise) return {d, raise};
  return {d, raise.adjoint()};
}

LocalOperator spin_j0(int d) {
  if (d < 2) throw std::invalid_argument("spin_j0: d must be >= 2");
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int g = 0; g < d; ++g) m(g, g) = (d - 1) / 2.0 - g;
  return {d, m};
}

LocalOperator sud_ladder(int d, int h, int j, Ladder dir) {
  if (h < 1 || h > d || j < 1 || j > d)
    throw std::invalid_argument("sud_ladder: level index out of range");
  if (h == j) throw std::invalid_argument("sud_ladder: levels must differ");
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(h - 1, j - 1) = 1.0;
  if (dir == Ladder::raise) return {d, m};
  return {d, m.adjoint()};
}

std::vector<LocalOperator> sud_ladder_family(int d) {
  std::vector<LocalOperator> fam;
  for (int h = 1; h <= d; ++h)
    for (int j = 1; j <= d; ++j) {
      if (h == j) continue;
      fam.push_back(sud_ladder(d, h, j, Ladder::raise));
      fam.push_back(sud_ladder(d, h, j, Ladder::lower));
    }
  return fam;
}

std::vector<LocalOperator> adjacent_ladder_family(int d) {
  std::vector<LocalOperator> fam;
  for (int j = 1; j < d; ++j) {
    fam.push_back(sud_ladder(d, j, j + 1, Ladder::raise));
    fam.push_back(sud_ladder(d, j, j + 1, Ladder::lower));
  }
  return fam;
}

CollectiveOperator::CollectiveOperator(LocalOperator local, int n)
    : local_(std::move(local)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("CollectiveOperator: N must be >= 1");
}

ComplexMatrix CollectiveOperator::matrix() const {
  const Index dim = product_dim(local_.d, n_);
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  const ComplexMatrix eye = ComplexMatrix::Identity(local_.d, local_.d);
  for (int k = 1; k <= n_; ++k) {
    ComplexMatrix term = (k == 1) ? local_.mat : eye;
    for (int s = 2; s <= n_; ++s) term = kron(term, s == k ? local_.mat : eye);
    total += term;
  }
  return total;
}

StateVector CollectiveOperator::apply(const StateVector& psi) const {
  if (psi.d() != local_.d || psi.n() != n_)
    throw std::invalid_argument("CollectiveOperator::apply: shape mismatch");
  StateVector out(psi.d(), psi.n());
  for (int k = 1; k <= n_; ++k)
    out.amps() += apply_local(local_.mat, k, psi).amps();
  return out;
}

ComplexMatrix su2_rotation(int d, const std::array<double, 3>& beta) {
  const ComplexMatrix jp = spin_ladder(d, Ladder::raise).mat;
  const ComplexMatrix jm = spin_ladder(d, Ladder::lower).mat;
  const ComplexMatrix jz = spin_j0(d).mat;
  const Complex i(0, 1);
  ComplexMatrix h = beta[0] * 0.5 * (jp + jm) + beta[1] * (jp - jm) / (2.0 * i) +
                    beta[2] * jz;
  return expm_i_hermitian(h);
}

ComplexMatrix random_su2_rotation(int d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uangle(0.0, 2.0 * std::numbers::pi);
  std::array<double, 3> axis{gauss(rng), gauss(rng), gauss(rng)};
  double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (len < 1e-12) { axis = {0, 0, 1}; len = 1; }
  double angle = uangle(rng);
  return su2_rotation(d, {angle * axis[0] / len, angle * axis[1] / len,
                          angle * axis[2] / len});
}

ComplexMatrix flip_operator(int d) {
  if (d < 2) throw std::invalid_argument("flip_operator: d must be >= 2");
  ComplexMatrix v = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) v(b * d + a, a * d + b) = 1.0;
  return v;
}

ComplexMatrix level_swap(int d, int h, int j) {
  if (h < 1 || h > d || j < 1 || j > d)
    throw std::invalid_argument("level_swap: level index out of range");
  if (h == j) throw std::invalid_argument("level_swap: levels must differ");
  ComplexMatrix w = ComplexMatrix::Identity(d, d);
  w(h - 1, h - 1) = 0;
  w(j - 1, j - 1) = 0;
  w(h - 1, j - 1) = 1;
  w(j - 1, h - 1) = 1;
  return w;
}

}  // namespace darkstate
