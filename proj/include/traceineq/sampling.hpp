#pragma once

#include <cstdint>

#include "traceineq/spectral.hpp"
#include "traceineq/weights.hpp"

namespace traceineq {

// Seed for the library PRNG. The same seed always reproduces the same sample
// stream; batch sample j uses the sub-seed derive_subseed(seed, stream, j),
// so batches can be split or parallelized without changing the draws.
struct Seed {
    std::uint64_t value = 0;
};

// SplitMix64 (Steele, Lea, Flood 2014). Small, portable, and splittable;
// doubles take the top 53 bits, gaussians come from the Box-Muller transform
// (pairs cached). The exact construction is documented in the README so
// ports can replicate the streams.
class SplitMix64 {
  public:
    explicit SplitMix64(Seed s) : state_(s.value) {}

    std::uint64_t next_u64();
    double next_unit();       // [0, 1)
    double next_unit_open();  // (0, 1)
    double next_uniform(double lo, double hi);
    double next_gaussian();   // standard normal

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

enum class Stream : std::uint64_t {
    hermitian = 1,
    psd = 2,
    weights = 3,
    scalar = 4,
    search_t = 5,
    search_a = 6,
    search_w = 7,
    suite_row = 8,
    suite_sample = 9,
};

Seed derive_subseed(Seed base, Stream stream, std::uint64_t index);

// (G + G*)/2 for G with i.i.d. standard-normal real and imaginary parts.
// Exactly Hermitian by construction. Requires 2 <= n <= 64.
HermitianMatrix sample_hermitian(int n, Seed seed);

// G G* for a Ginibre G, optionally ridged by `ridge` * I when a test needs
// certified invertibility.
PsdMatrix sample_psd(int n, Seed seed, double ridge = 0.0);

// Stress ensembles for the conjecture search: eigenvalue ratios up to
// 10^(2*log10_spread) on a random eigenbasis, and a near-rank-deficient
// variant with its smallest eigenvalue scaled down by floor_ratio.
PsdMatrix sample_psd_illconditioned(int n, Seed seed, double log10_spread = 3.0);
PsdMatrix sample_psd_near_singular(int n, Seed seed, double floor_ratio = 1e-8);

// Normalized i.i.d. exponentials: strictly positive, sums to 1.
WeightVector sample_weights(int m, Seed seed);

}  // namespace traceineq
