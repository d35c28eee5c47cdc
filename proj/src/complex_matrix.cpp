#include "traceineq/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "traceineq/errors.hpp"

namespace traceineq {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > ComplexMatrix::kMaxDim)
        throw DimensionMismatch("matrix dimension " + std::to_string(dim) +
                                " outside supported range [1, " +
                                std::to_string(ComplexMatrix::kMaxDim) + "]");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    a_.assign(static_cast<std::size_t>(dim) * dim, complex_t{});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<complex_t> entries)
    : dim_(dim), a_(std::move(entries)) {
    check_dim(dim);
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
        throw DimensionMismatch("entry count does not match dim*dim");
    if (!all_finite()) throw InvalidInput("matrix contains a non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    if (!m.all_finite()) throw InvalidInput("diagonal contains a non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<complex_t>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    if (!m.all_finite()) throw InvalidInput("diagonal contains a non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

double ComplexMatrix::max_norm() const {
    double m = 0.0;
    for (const complex_t& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const complex_t& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const complex_t& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch("operator+=: dims differ");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch("operator-=: dims differ");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex_t s) {
    for (complex_t& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(complex_t s, ComplexMatrix a) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("matmul: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const complex_t aik = a(i, k);
            if (aik == complex_t{}) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

complex_t trace(const ComplexMatrix& m) {
    complex_t t{};
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

}  // namespace traceineq
