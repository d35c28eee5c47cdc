#include "traceineq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "traceineq/errors.hpp"

namespace traceineq {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void check_sample_dim(int n) {
    if (n < 2 || n > ComplexMatrix::kMaxDim)
        throw InvalidInput("sample dimension " + std::to_string(n) + " outside [2, " +
                           std::to_string(ComplexMatrix::kMaxDim) + "]");
}

ComplexMatrix sample_ginibre(int n, SplitMix64& rng) {
    ComplexMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = rng.next_gaussian();
            const double im = rng.next_gaussian();
            g(i, j) = complex_t(re, im);
        }
    return g;
}

PsdMatrix psd_from_spectrum(int n, Seed basis_seed, std::vector<double> lambdas) {
    const SpectralDecomposition d = hermitian_eig(sample_hermitian(n, basis_seed));
    std::sort(lambdas.begin(), lambdas.end());
    return PsdMatrix(HermitianMatrix(detail::reconstruct(d.eigenvectors, lambdas)));
}

}  // namespace

std::uint64_t SplitMix64::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SplitMix64::next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitMix64::next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

double SplitMix64::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Seed derive_subseed(Seed base, Stream stream, std::uint64_t index) {
    std::uint64_t h = base.value;
    h = mix64(h ^ (0xA0761D6478BD642Full * (static_cast<std::uint64_t>(stream) + 1)));
    h = mix64(h ^ (0xE7037ED1A0B428DBull * (index + 1)));
    return Seed{h};
}

HermitianMatrix sample_hermitian(int n, Seed seed) {
    check_sample_dim(n);
    SplitMix64 rng(seed);
    const ComplexMatrix g = sample_ginibre(n, rng);
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return HermitianMatrix(m);
}

PsdMatrix sample_psd(int n, Seed seed, double ridge) {
    check_sample_dim(n);
    if (ridge < 0.0) throw InvalidInput("ridge must be >= 0");
    SplitMix64 rng(seed);
    const ComplexMatrix g = sample_ginibre(n, rng);
    ComplexMatrix m = matmul(g, g.adjoint());
    for (int i = 0; i < n; ++i) m(i, i) += ridge;
    return PsdMatrix(HermitianMatrix(m));
}

PsdMatrix sample_psd_illconditioned(int n, Seed seed, double log10_spread) {
    check_sample_dim(n);
    SplitMix64 rng(derive_subseed(seed, Stream::scalar, 0));
    std::vector<double> lambdas(static_cast<std::size_t>(n));
    for (double& lam : lambdas)
        lam = std::pow(10.0, rng.next_uniform(-log10_spread, log10_spread));
    return psd_from_spectrum(n, derive_subseed(seed, Stream::hermitian, 0), std::move(lambdas));
}

PsdMatrix sample_psd_near_singular(int n, Seed seed, double floor_ratio) {
    check_sample_dim(n);
    SplitMix64 rng(derive_subseed(seed, Stream::scalar, 1));
    std::vector<double> lambdas(static_cast<std::size_t>(n));
    for (double& lam : lambdas) lam = std::pow(10.0, rng.next_uniform(-1.0, 1.0));
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.front() *= floor_ratio;
    return psd_from_spectrum(n, derive_subseed(seed, Stream::hermitian, 1), std::move(lambdas));
}

WeightVector sample_weights(int m, Seed seed) {
    if (m < 1) throw InvalidInput("sample_weights: m must be >= 1");
    SplitMix64 rng(seed);
    std::vector<double> e(static_cast<std::size_t>(m));
    double sum = 0.0;
    for (double& v : e) {
        v = -std::log(rng.next_unit_open());
        sum += v;
    }
    for (double& v : e) v /= sum;
    return WeightVector(std::move(e));
}

}  // namespace traceineq
