#include "darkstate/solver.hpp"

#include <map>
#include <stdexcept>

namespace darkstate {

namespace {

// Full indices whose doubled label sum equals twice_sum.
std::vector<Index> sector_indices(int n, int d, int twice_sum) {
  const Index dim = product_dim(d, n);
  std::vector<Index> out;
  for (Index idx = 0; idx < dim; ++idx) {
    Index r = idx;
    int sum2 = 0;
    for (int s = 0; s < n; ++s) {
      sum2 += twice_label_of_digit(d, static_cast<int>(r % d));
      r /= d;
    }
    if (sum2 == twice_sum) out.push_back(idx);
  }
  return out;
}

// Collective op applied to a basis index, as a sparse (index, value) map.
void collective_on_basis(const LocalOperator& local, int n, Index idx,
                         std::map<Index, Complex>& out) {
  const int d = local.d;
  Index stride = 1;
  for (int site = n; site >= 1; --site) {
    const int g = static_cast<int>((idx / stride) % d);
    for (int h = 0; h < d; ++h) {
      const Complex v = local.mat(h, g);
      if (v == Complex(0, 0)) continue;
      out[idx + static_cast<Index>(h - g) * stride] += v;
    }
    stride *= d;
  }
}

// Family of collective operators restricted to the given columns, with
// all-zero rows dropped, stacked vertically.
ComplexMatrix stacked_restricted(const std::vector<LocalOperator>& family, int n,
                                 const std::vector<Index>& cols) {
  const Index ncols = static_cast<Index>(cols.size());
  std::vector<ComplexMatrix> blocks;
  Index total_rows = 0;
  for (const auto& local : family) {
    std::vector<std::map<Index, Complex>> col_entries(ncols);
    std::map<Index, Index> row_compact;
    for (Index c = 0; c < ncols; ++c) {
      collective_on_basis(local, n, cols[c], col_entries[c]);
      for (const auto& [row, v] : col_entries[c])
        row_compact.emplace(row, 0);
    }
    Index r = 0;
    for (auto& [row, compact] : row_compact) compact = r++;
    ComplexMatrix block = ComplexMatrix::Zero(r, ncols);
    for (Index c = 0; c < ncols; ++c)
      for (const auto& [row, v] : col_entries[c])
        block(row_compact[row], c) = v;
    total_rows += r;
    blocks.push_back(std::move(block));
  }
  ComplexMatrix stacked(total_rows, ncols);
  Index at = 0;
  for (const auto& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return stacked;
}

std::vector<StateVector> kernel_states(const std::vector<LocalOperator>& family,
                                       int n, int d,
                                       const std::vector<Index>& cols, double tol) {
  ComplexMatrix stacked = stacked_restricted(family, n, cols);
  std::vector<ComplexVector> kernel = nullspace(stacked, tol);
  std::vector<StateVector> states;
  states.reserve(kernel.size());
  const Index dim = product_dim(d, n);
  for (const auto& v : kernel) {
    ComplexVector full = ComplexVector::Zero(dim);
    for (Index c = 0; c < static_cast<Index>(cols.size()); ++c) full(cols[c]) = v(c);
    states.emplace_back(d, n, std::move(full));
  }
  return states;
}

}  // namespace

DarkSubspace semidark_basis(int n, int d, double tol) {
  // The kernel of {J+, J-} lies in the J0 = 0 sector: J0 = (1/2)[J+, J-]
  // is diagonal with entry total_label_sum, so solving there loses nothing.
  auto cols = sector_indices(n, d, 0);
  std::vector<LocalOperator> family{spin_ladder(d, Ladder::raise),
                                    spin_ladder(d, Ladder::lower)};
  DarkSubspace sub;
  sub.d = d;
  sub.n = n;
  sub.kind = SubspaceKind::semidark;
  sub.tol = tol;
  sub.basis = kernel_states(family, n, d, cols, tol);
  return sub;
}

DarkSubspace dark_basis(int n, int d, double tol, LadderFamily family) {
  // Dark states are in particular singlets (the spin ladders are linear
  // combinations of the adjacent matrix units), so the J0 = 0 sector
  // restriction applies here as well.
  auto cols = sector_indices(n, d, 0);
  auto ops = (family == LadderFamily::adjacent) ? adjacent_ladder_family(d)
                                                : sud_ladder_family(d);
  DarkSubspace sub;
  sub.d = d;
  sub.n = n;
  sub.kind = SubspaceKind::dark;
  sub.tol = tol;
  sub.basis = kernel_states(ops, n, d, cols, tol);
  return sub;
}

long dark_dimension_oracle(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("dark_dimension_oracle: bad (N,d)");
  if (n % d != 0) return 0;
  const int m = n / d;
  if (n > 20) throw std::invalid_argument("dark_dimension_oracle: N too large for exact arithmetic");
  unsigned __int128 num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<unsigned>(k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < m; ++j)
      den *= static_cast<unsigned>((d - 1 - i) + (m - 1 - j) + 1);
  return static_cast<long>(num / den);
}

ConjectureReport conjecture_check(int d, int m, double tol) {
  ConjectureReport rep;
  rep.d = d;
  rep.m = m;
  rep.n = m * d;
  rep.numeric_dim = dark_basis(rep.n, d, tol).dim();
  rep.oracle_dim = dark_dimension_oracle(rep.n, d);
  rep.conjecture_holds = rep.numeric_dim >= m;
  rep.matches_oracle = rep.numeric_dim == rep.oracle_dim;
  return rep;
}

std::vector<std::pair<double, long>> su2_multiplet_census(int n, int d) {
  product_dim(d, n);  // enforce cap
  std::vector<std::pair<double, long>> census;
  std::vector<LocalOperator> raise{spin_ladder(d, Ladder::raise)};
  // Highest weights with J0 = j live in the doubled-sum = 2j sector.
  const int max_twice = n * (d - 1);
  for (int t = max_twice; t >= 0; t -= 2) {
    auto cols = sector_indices(n, d, t);
    if (cols.empty()) continue;
    ComplexMatrix stacked = stacked_restricted(raise, n, cols);
    const long mult = static_cast<long>(nullspace(stacked).size());
    if (mult > 0) census.emplace_back(t / 2.0, mult);
  }
  return census;
}

}  // namespace darkstate
