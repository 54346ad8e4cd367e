#include "darkstate/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace darkstate {

Index product_dim(int d, int n) {
  if (d < 2) throw std::invalid_argument("product_dim: d must be >= 2");
  if (n < 1) throw std::invalid_argument("product_dim: n must be >= 1");
  Index dim = 1;
  for (int k = 0; k < n; ++k) {
    if (dim > kDimCap / d)
      throw std::invalid_argument("product_dim: d^N exceeds the 2^20 size cap");
    dim *= d;
  }
  return dim;
}

BasisState::BasisState(int d, std::vector<int> twice_labels)
    : d_(d), twice_(std::move(twice_labels)) {
  if (d_ < 2) throw std::invalid_argument("BasisState: d must be >= 2");
  if (twice_.empty()) throw std::invalid_argument("BasisState: N must be >= 1");
  for (int t : twice_) {
    if (std::abs(t) > d_ - 1 || ((t - (d_ - 1)) % 2) != 0)
      throw std::invalid_argument("BasisState: label off the {-(d-1)/2..(d-1)/2} lattice");
  }
}

BasisState BasisState::from_labels(int d, const std::vector<double>& labels) {
  std::vector<int> twice;
  twice.reserve(labels.size());
  for (double a : labels) {
    double t = 2.0 * a;
    if (t != std::round(t))
      throw std::invalid_argument("BasisState: label is not integer or half-integer");
    twice.push_back(static_cast<int>(std::lround(t)));
  }
  return BasisState(d, std::move(twice));
}

Index index_of(const BasisState& b) {
  Index idx = 0;
  for (int s = 0; s < b.n(); ++s)
    idx = idx * b.d() + digit_of_twice_label(b.d(), b.twice_label(s));
  return idx;
}

BasisState label_of(int d, int n, Index idx) {
  if (idx < 0 || idx >= product_dim(d, n))
    throw std::invalid_argument("label_of: index out of range");
  std::vector<int> twice(n);
  for (int s = n - 1; s >= 0; --s) {
    twice[s] = twice_label_of_digit(d, static_cast<int>(idx % d));
    idx /= d;
  }
  return BasisState(d, std::move(twice));
}

double total_label_sum(const BasisState& b) {
  long sum2 = 0;
  for (int s = 0; s < b.n(); ++s) sum2 += b.twice_label(s);
  return sum2 / 2.0;
}

StateVector::StateVector(int d, int n)
    : d_(d), n_(n), amps_(ComplexVector::Zero(product_dim(d, n))) {}

StateVector::StateVector(int d, int n, ComplexVector amps)
    : d_(d), n_(n), amps_(std::move(amps)) {
  if (amps_.size() != product_dim(d, n))
    throw std::invalid_argument("StateVector: amplitude count is not d^N");
}

StateVector StateVector::normalized() const {
  double nrm = norm();
  if (nrm < 1e-300)
    throw std::invalid_argument("StateVector: cannot normalize the zero vector");
  return StateVector(d_, n_, amps_ / nrm);
}

StateVector state_from_terms(int d, int n, const std::vector<Term>& terms,
                             bool normalize) {
  if (normalize && terms.empty())
    throw std::invalid_argument("state_from_terms: nothing to normalize");
  StateVector psi(d, n);
  for (const auto& [b, c] : terms) {
    if (b.d() != d || b.n() != n)
      throw std::invalid_argument("state_from_terms: term shape mismatch");
    psi.amps()(index_of(b)) += c;
  }
  return normalize ? psi.normalized() : psi;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.d() != b.d() || a.n() != b.n())
    throw std::invalid_argument("inner: shape mismatch");
  return a.amps().dot(b.amps());  // Eigen's dot conjugates the first factor
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.d() != b.d()) throw std::invalid_argument("tensor: local dimension mismatch");
  ComplexVector out(a.dim() * b.dim());
  for (Index i = 0; i < a.dim(); ++i)
    out.segment(i * b.dim(), b.dim()) = a[i] * b.amps();
  return StateVector(a.d(), a.n() + b.n(), std::move(out));
}

StateVector apply(const ComplexMatrix& op, const StateVector& psi) {
  if (op.cols() != psi.dim())
    throw std::invalid_argument("apply: operator/state shape mismatch");
  if (op.rows() != psi.dim())
    throw std::invalid_argument("apply: operator must be square on the state space");
  return StateVector(psi.d(), psi.n(), op * psi.amps());
}

namespace {
Index site_stride(int d, int n, int site) {  // 1-based site
  Index s = 1;
  for (int k = 0; k < n - site; ++k) s *= d;
  return s;
}
}  // namespace

StateVector apply_local(const ComplexMatrix& op, int site, const StateVector& psi) {
  const int d = psi.d();
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("apply_local: operator is not d x d");
  if (site < 1 || site > psi.n())
    throw std::invalid_argument("apply_local: site out of range");
  const Index stride = site_stride(d, psi.n(), site);
  ComplexVector out = ComplexVector::Zero(psi.dim());
  for (Index base = 0; base < psi.dim(); base += stride * d)
    for (Index off = 0; off < stride; ++off)
      for (int g = 0; g < d; ++g) {
        Complex amp = psi[base + g * stride + off];
        if (amp == Complex(0, 0)) continue;
        for (int h = 0; h < d; ++h)
          out(base + h * stride + off) += op(h, g) * amp;
      }
  return StateVector(psi.d(), psi.n(), std::move(out));
}

StateVector apply_local_all_sites(const ComplexMatrix& op, const StateVector& psi) {
  StateVector out = psi;
  for (int site = 1; site <= psi.n(); ++site) out = apply_local(op, site, out);
  return out;
}

StateVector swap_sites(const StateVector& psi, int site_j, int site_k) {
  std::vector<int> perm(psi.n());
  for (int s = 1; s <= psi.n(); ++s) perm[s - 1] = s;
  std::swap(perm[site_j - 1], perm[site_k - 1]);
  return permute_sites(psi, perm);
}

StateVector permute_sites(const StateVector& psi, const std::vector<int>& perm) {
  const int n = psi.n();
  const int d = psi.d();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_sites: permutation length mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p])
      throw std::invalid_argument("permute_sites: not a permutation of 1..N");
    seen[p] = true;
  }
  ComplexVector out(psi.dim());
  std::vector<int> digits(n);
  for (Index idx = 0; idx < psi.dim(); ++idx) {
    Index rest = idx;
    for (int s = n - 1; s >= 0; --s) {
      digits[s] = static_cast<int>(rest % d);
      rest /= d;
    }
    Index src = 0;
    for (int s = 0; s < n; ++s) src = src * d + digits[perm[s] - 1];
    out(idx) = psi[src];
  }
  return StateVector(d, n, std::move(out));
}

StateVector collapse(const StateVector& psi_n, const StateVector& phi_m,
                     const std::vector<int>& parties) {
  const int d = psi_n.d();
  const int n = psi_n.n();
  const int m = phi_m.n();
  if (phi_m.d() != d) throw std::invalid_argument("collapse: local dimension mismatch");
  if (static_cast<int>(parties.size()) != m)
    throw std::invalid_argument("collapse: parties list must name one site per phi party");
  if (m >= n) throw std::invalid_argument("collapse: need M < N");
  std::vector<bool> taken(n + 1, false);
  for (int p : parties) {
    if (p < 1 || p > n) throw std::invalid_argument("collapse: site index out of range");
    if (taken[p]) throw std::invalid_argument("collapse: duplicate site index");
    taken[p] = true;
  }
  std::vector<int> rest;  // remaining sites in original order
  for (int s = 1; s <= n; ++s)
    if (!taken[s]) rest.push_back(s);

  StateVector out(d, n - m);
  std::vector<int> digits(n);
  for (Index idx = 0; idx < psi_n.dim(); ++idx) {
    Complex amp = psi_n[idx];
    if (amp == Complex(0, 0)) continue;
    Index r = idx;
    for (int s = n - 1; s >= 0; --s) {
      digits[s] = static_cast<int>(r % d);
      r /= d;
    }
    Index sub = 0;
    for (int p : parties) sub = sub * d + digits[p - 1];
    Index rem = 0;
    for (int p : rest) rem = rem * d + digits[p - 1];
    out.amps()(rem) += std::conj(phi_m[sub]) * amp;
  }
  return out;
}

DensityMatrix::DensityMatrix(int d, int n, ComplexMatrix entries)
    : d_(d), n_(n), mat_(std::move(entries)) {
  Index dim = product_dim(d, n);
  if (mat_.rows() != dim || mat_.cols() != dim)
    throw std::invalid_argument("DensityMatrix: entries are not d^N x d^N");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.d(), psi.n(), psi.amps() * psi.amps().adjoint());
}

bool DensityMatrix::is_valid(double herm_tol, double trace_tol, double psd_tol) const {
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > herm_tol) return false;
  if (std::abs(mat_.trace() - Complex(1, 0)) > trace_tol) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -psd_tol;
}

}  // namespace darkstate
