#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace traceineq {

using complex_t = std::complex<double>;

// Dense square complex matrix, row-major storage. The universal carrier for
// everything in this library. Dimensions 1..64 are accepted; all the
// interesting content lives at n in {2, 3, 4}.
class ComplexMatrix {
  public:
    static constexpr int kMaxDim = 64;

    explicit ComplexMatrix(int dim);  // zero-filled
    ComplexMatrix(int dim, std::vector<complex_t> entries);  // row-major, validated finite

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<double>& d);
    static ComplexMatrix diagonal(const std::vector<complex_t>& d);

    int dim() const { return dim_; }

    complex_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const complex_t& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * dim_ + j];
    }

    ComplexMatrix adjoint() const;  // conjugate transpose

    double max_norm() const;        // max |a_ij|
    double frobenius_norm() const;

    bool all_finite() const;
    bool is_hermitian(double tol) const;  // max |a_ij - conj(a_ji)| <= tol

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(complex_t s);

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

  private:
    int dim_;
    std::vector<complex_t> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(complex_t s, ComplexMatrix a);

// Standard dense product. Throws DimensionMismatch on shape disagreement.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

// Sum of the diagonal.
complex_t trace(const ComplexMatrix& m);

}  // namespace traceineq
