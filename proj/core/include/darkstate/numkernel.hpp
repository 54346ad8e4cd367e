#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace darkstate {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

/// Kronecker product, row-major index semantics:
/// entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Orthonormal basis of the (numerical) right null space of `a`.
/// A singular value s counts as zero when s <= tol * s_max.
/// A matrix with zero rows has the full space as its kernel.
std::vector<ComplexVector> nullspace(const ComplexMatrix& a, double tol = 1e-9);

/// exp(i*h) for Hermitian h, via spectral decomposition. The result is
/// unitary up to round-off. Throws std::invalid_argument when h is not
/// Hermitian within 1e-10.
ComplexMatrix expm_i_hermitian(const ComplexMatrix& h);

/// Haar-distributed element of U(n): QR of a complex Gaussian matrix with
/// the R-diagonal phase correction (plain QR is not Haar).
ComplexMatrix haar_unitary(Index n, Rng& rng);

/// Haar-distributed element of SU(n): haar_unitary rescaled by an n-th
/// root of its determinant.
ComplexMatrix haar_special_unitary(Index n, Rng& rng);

/// max-entry |U^dag U - 1| <= tol
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

}  // namespace darkstate
