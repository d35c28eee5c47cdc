#include "traceineq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "traceineq/errors.hpp"

namespace traceineq {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m.dim()) {
    const double tol = kHermTolFactor * m.max_norm();
    if (!m.is_hermitian(tol))
        throw InvalidInput("matrix is not Hermitian within tolerance " + std::to_string(tol));
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        m_(i, i) = complex_t(m(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const complex_t v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = v;
            m_(j, i) = std::conj(v);
        }
    }
}

PsdMatrix::PsdMatrix(const HermitianMatrix& m) : m_(m), eig_(hermitian_eig(m)) {
    double radius = 0.0;
    for (double lam : eig_.eigenvalues) radius = std::max(radius, std::abs(lam));
    const double tol = kPsdTolFactor * radius;
    for (double& lam : eig_.eigenvalues) {
        if (lam < -tol)
            throw NegativeEigenvalue("eigenvalue " + std::to_string(lam) +
                                     " below PSD band -" + std::to_string(tol));
        if (lam < 0.0) lam = 0.0;
    }
}

PsdMatrix::PsdMatrix(HermitianMatrix m, SpectralDecomposition eig)
    : m_(std::move(m)), eig_(std::move(eig)) {}

SpectralDecomposition hermitian_eig(const HermitianMatrix& m) {
    const int n = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix u = ComplexMatrix::identity(n);
    const double thresh = kJacobiConvergenceFactor * a.frobenius_norm();

    auto off_mass = [&a, n]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    int sweeps = 0;
    while (off_mass() > thresh) {
        if (sweeps++ >= kJacobiMaxSweeps)
            throw ConvergenceFailure("Jacobi did not converge in " +
                                     std::to_string(kJacobiMaxSweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const complex_t apq = a(p, q);
                const double abspq = std::abs(apq);
                if (abspq == 0.0) continue;

                // Unitary 2x2 rotation V = [[c, -conj(s)], [s, c]] on the
                // (p, q) plane annihilating a_pq. With a_pq = |a_pq| e^{i phi}
                // and theta = (a_qq - a_pp) / (2 |a_pq|), the stable root of
                // the annihilation quadratic t^2 - 2 theta t - 1 = 0 is
                // t = -sign(theta) / (|theta| + sqrt(theta^2 + 1)).
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * abspq);
                const double t =
                    (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const complex_t s = t * c * std::conj(apq / abspq);

                for (int r = 0; r < n; ++r) {  // A <- A V
                    const complex_t arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp + s * arq;
                    a(r, q) = -std::conj(s) * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {  // A <- V* A
                    const complex_t apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr + std::conj(s) * aqr;
                    a(q, r) = -s * apr + c * aqr;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = complex_t(a(p, p).real(), 0.0);
                a(q, q) = complex_t(a(q, q).real(), 0.0);
                for (int r = 0; r < n; ++r) {  // U <- U V
                    const complex_t urp = u(r, p), urq = u(r, q);
                    u(r, p) = c * urp + s * urq;
                    u(r, q) = -std::conj(s) * urp + c * urq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition d{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        d.eigenvalues[static_cast<std::size_t>(k)] = a(src, src).real();
        int rmax = 0;
        double best = -1.0;
        for (int r = 0; r < n; ++r) {
            const double mag = std::abs(u(r, src));
            if (mag > best) {
                best = mag;
                rmax = r;
            }
        }
        const complex_t phase = u(rmax, src) / best;
        for (int r = 0; r < n; ++r) d.eigenvectors(r, k) = u(r, src) * std::conj(phase);
    }
    return d;
}

HermitianMatrix matrix_function(const SpectralDecomposition& d, const ScalarFunction& f) {
    const std::size_t n = d.eigenvalues.size();
    std::vector<double> vals(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!f.in_domain(d.eigenvalues[k]))
            throw DomainViolation("matrix_function: eigenvalue " +
                                  std::to_string(d.eigenvalues[k]) + " outside domain of " +
                                  f.name());
        vals[k] = f(d.eigenvalues[k]);
    }
    return HermitianMatrix(detail::reconstruct(d.eigenvectors, vals));
}

PsdMatrix fractional_power(const PsdMatrix& t, double p) {
    if (!(p >= 0.0))
        throw InvalidInput("fractional_power: exponent must be >= 0, got " + std::to_string(p));
    if (p == 1.0) return t;
    const SpectralDecomposition& d = t.decomposition();
    std::vector<double> powered(d.eigenvalues.size());
    for (std::size_t k = 0; k < powered.size(); ++k)
        powered[k] = detail::clamped_pow(d.eigenvalues[k], p);
    // x^p is nondecreasing on [0, inf) for p >= 0, so the powered spectrum is
    // still ascending and the eigenbasis is unchanged.
    ComplexMatrix raw = detail::psd_power_matrix(t, p);
    return PsdMatrix(HermitianMatrix(raw),
                     SpectralDecomposition{std::move(powered), d.eigenvectors});
}

namespace detail {

double clamped_pow(double x, double p) {
    if (x < -ScalarFunction::kPowerDomainSlack)
        throw NegativeEigenvalue("clamped_pow: negative base " + std::to_string(x));
    if (x <= 0.0) return p == 0.0 ? 1.0 : 0.0;
    return std::pow(x, p);
}

ComplexMatrix psd_power_matrix(const PsdMatrix& t, double p) {
    if (p == 0.0) return ComplexMatrix::identity(t.dim());
    if (p == 1.0) return t.matrix();
    const SpectralDecomposition& d = t.decomposition();
    std::vector<double> powered(d.eigenvalues.size());
    for (std::size_t k = 0; k < powered.size(); ++k)
        powered[k] = clamped_pow(d.eigenvalues[k], p);
    return reconstruct(d.eigenvectors, powered);
}

ComplexMatrix reconstruct(const ComplexMatrix& u, const std::vector<double>& vals) {
    const int n = u.dim();
    ComplexMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            complex_t s{};
            for (int k = 0; k < n; ++k)
                s += u(i, k) * vals[static_cast<std::size_t>(k)] * std::conj(u(j, k));
            b(i, j) = s;
        }
    return b;
}

}  // namespace detail

}  // namespace traceineq
