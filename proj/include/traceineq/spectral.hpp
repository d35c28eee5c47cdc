#pragma once

#include <vector>

#include "traceineq/complex_matrix.hpp"
#include "traceineq/scalar_function.hpp"

namespace traceineq {

// Tolerance conventions used throughout:
//   Hermitian admission   : max |M - M*| <= 1e-12 * max|M|
//   PSD admission         : min eigenvalue >= -1e-10 * spectral radius
//   Jacobi convergence    : off-diagonal Frobenius mass <= 1e-14 * ||M||_F
inline constexpr double kHermTolFactor = 1e-12;
inline constexpr double kPsdTolFactor = 1e-10;
inline constexpr double kJacobiConvergenceFactor = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Eigenvalues (real, ascending) and an orthonormal eigenbasis: column k of
// `eigenvectors` pairs with eigenvalues[k].
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// A matrix certified equal to its conjugate transpose. Construction checks
// max |M - M*| against the tolerance above and then symmetrizes exactly,
// M <- (M + M*)/2.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }

  private:
    ComplexMatrix m_;
};

// A Hermitian matrix certified positive semidefinite. Construction runs the
// eigensolver once and caches the decomposition; eigenvalues inside
// [-psd_tol, 0) are clamped to 0 in the cache, anything below throws
// NegativeEigenvalue.
class PsdMatrix {
  public:
    explicit PsdMatrix(const HermitianMatrix& m);

    const HermitianMatrix& hermitian() const { return m_; }
    const ComplexMatrix& matrix() const { return m_.matrix(); }
    // Clamped spectrum; this is what every power computation consumes.
    const SpectralDecomposition& decomposition() const { return eig_; }
    int dim() const { return m_.dim(); }

  private:
    PsdMatrix(HermitianMatrix m, SpectralDecomposition eig);

    friend PsdMatrix fractional_power(const PsdMatrix& t, double p);

    HermitianMatrix m_;
    SpectralDecomposition eig_;
};

// Cyclic complex Jacobi diagonalization. Deterministic for a fixed input:
// fixed sweep order, and each eigenvector column is phase-normalized so its
// largest-magnitude entry is real positive. Throws ConvergenceFailure if the
// off-diagonal mass has not dropped below 1e-14 * ||M||_F after 100 sweeps.
SpectralDecomposition hermitian_eig(const HermitianMatrix& m);

// U diag(f(lambda)) U*. Throws DomainViolation naming the first eigenvalue
// outside the domain of f.
HermitianMatrix matrix_function(const SpectralDecomposition& d, const ScalarFunction& f);

// Spectral power T^p for p >= 0, with 0^p = 0 for p > 0 and 0^0 = 1.
// p == 1 returns T itself.
PsdMatrix fractional_power(const PsdMatrix& t, double p);

namespace detail {

// x^p under the PSD clamping convention: x in [-slack, 0) acts as 0.
double clamped_pow(double x, double p);

// T^p as a raw matrix, sharing one decomposition across calls. p == 0 yields
// the exact identity, p == 1 a copy of T.
ComplexMatrix psd_power_matrix(const PsdMatrix& t, double p);

// U diag(vals) U*.
ComplexMatrix reconstruct(const ComplexMatrix& u, const std::vector<double>& vals);

}  // namespace detail

}  // namespace traceineq
