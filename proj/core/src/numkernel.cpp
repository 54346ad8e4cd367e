#include "darkstate/numkernel.hpp"

#include <cmath>
#include <stdexcept>

namespace darkstate {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<ComplexVector> nullspace(const ComplexMatrix& a, double tol) {
  if (tol <= 0) throw std::invalid_argument("nullspace: tol must be positive");
  const Index n = a.cols();
  std::vector<ComplexVector> basis;
  if (n == 0) return basis;
  if (a.rows() == 0) {
    for (Index j = 0; j < n; ++j) basis.push_back(ComplexVector::Unit(n, j));
    return basis;
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  // Singular values come out sorted descending; rank-deficient directions
  // are the trailing columns of V.
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  for (Index j = rank; j < n; ++j) basis.push_back(svd.matrixV().col(j));
  return basis;
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("expm_i_hermitian: matrix must be square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("expm_i_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd& lam = es.eigenvalues();
  ComplexVector phases(lam.size());
  for (Index k = 0; k < lam.size(); ++k)
    phases(k) = std::polar(1.0, lam(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix haar_unitary(Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: multiply each column by the phase of the matching
  // R diagonal so the distribution is Haar (Mezzadri's recipe).
  for (Index j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix haar_special_unitary(Index n, Rng& rng) {
  ComplexMatrix u = haar_unitary(n, rng);
  Complex det = u.determinant();
  u *= std::exp(-std::log(det) / static_cast<double>(n));
  return u;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  ComplexMatrix r = u.adjoint() * u;
  r -= ComplexMatrix::Identity(u.rows(), u.cols());
  return r.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace darkstate
