#include "traceineq/cycles.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "traceineq/errors.hpp"

namespace traceineq {

IndexCycle::IndexCycle(std::vector<int> idx) : indices(std::move(idx)) {
    if (indices.empty()) throw InvalidInput("index cycle must have length >= 1");
    for (int v : indices)
        if (v != 0 && v != 1) throw InvalidInput("index cycle entries must be 0 or 1");
}

ArcDecomposition arc_parity(const IndexCycle& c) {
    const int m = c.length();
    ArcDecomposition d;
    for (int j = 0; j < m; ++j) {
        const int prev = (j + m - 1) % m;
        if (c.indices[static_cast<std::size_t>(j)] == c.indices[static_cast<std::size_t>(prev)])
            ++d.same_count;
        else
            ++d.diff_count;
    }
    if (d.diff_count % 2 != 0)
        throw std::logic_error("arc parity violated: odd diff_count");  // lemma: cannot happen
    return d;
}

complex_t chain_phase_product(const PsdMatrix& a, const ComplexMatrix& basis,
                              const IndexCycle& c) {
    if (a.dim() != 2 || basis.dim() != 2)
        throw DimensionMismatch("chain_phase_product: dimension must be exactly 2");
    const ComplexMatrix b = matmul(matmul(basis.adjoint(), a.matrix()), basis);
    const int m = c.length();
    complex_t prod = 1.0;
    for (int j = 0; j < m; ++j) {
        const int prev = (j + m - 1) % m;
        prod *= b(c.indices[static_cast<std::size_t>(prev)], c.indices[static_cast<std::size_t>(j)]);
    }
    return prod;
}

complex_t chain_spectral_sum(const SpectralDecomposition& d, const ComplexMatrix& a,
                             std::span<const double> weights) {
    const int n = d.eigenvectors.dim();
    if (n != 2 || a.dim() != 2)
        throw DimensionMismatch("chain_spectral_sum: dimension must be exactly 2");
    const int m = static_cast<int>(weights.size());
    if (m < 1 || m > 24) throw InvalidInput("chain_spectral_sum: need 1 <= m <= 24");

    const ComplexMatrix b = matmul(matmul(d.eigenvectors.adjoint(), a), d.eigenvectors);
    complex_t sum{};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        double coef = 1.0;
        complex_t phase = 1.0;
        for (int k = 0; k < m; ++k) {
            const int ik = static_cast<int>((mask >> k) & 1u);
            const int inext = static_cast<int>((mask >> ((k + 1) % m)) & 1u);
            coef *= detail::clamped_pow(d.eigenvalues[static_cast<std::size_t>(ik)],
                                        weights[static_cast<std::size_t>(k)]);
            phase *= b(ik, inext);
        }
        sum += coef * phase;
    }
    return sum;
}

}  // namespace traceineq
