#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "traceineq/checkers.hpp"
#include "traceineq/sampling.hpp"

namespace traceineq {

// The two open questions: with T, A PSD and weights p summing to 1,
//   (i)  Tr[(T^{1/m}A)^m] <= Re{ Tr[T^{p_1}A ... T^{p_m}A] }
//   (ii) |Tr[T^{p_1}A ... T^{p_m}A]| <= Tr[T A^m]
// Neither is known to hold for n >= 3; a violation found by the search is a
// mathematical finding, not a bug, and is persisted for replay.
enum class Conjecture { i, ii };

std::string to_string(Conjecture c);
Conjecture conjecture_from_string(const std::string& s);

struct ConjectureSample {
    InequalityReport report;
    complex_t chain;
};

ConjectureSample conjecture_sample(Conjecture which, const PsdMatrix& t,
                                   const HermitianMatrix& a, const WeightVector& w,
                                   double tol_factor = kDefaultTolFactor);

// (i): Re(chain) - Tr[(T^{1/m}A)^m].  (ii): Tr[TA^m] - |chain|.
double conjecture_slack(Conjecture which, const PsdMatrix& t, const PsdMatrix& a,
                        const WeightVector& w);

struct SearchOptions {
    bool stress = false;               // ill-conditioned T, near-singular A
    bool relax_a_to_hermitian = false; // exploratory only; not the stated hypotheses
    bool force_identity_t = false;     // testing hook: T = I exactly
    double tol_factor = kDefaultTolFactor;
};

struct WorstInstance {
    std::uint64_t sample_index = 0;
    ComplexMatrix t;
    ComplexMatrix a;
    std::vector<double> weights;
    double slack = 0.0;
    complex_t chain{};
};

struct SearchReport {
    Conjecture conjecture = Conjecture::i;
    int n = 0;
    int m = 0;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;  // samples with slack < -tol
    std::uint64_t errors = 0;      // samples that threw; excluded from slack stats
    double min_slack = 0.0;
    Seed seed;
    std::optional<WorstInstance> worst;
    double elapsed_seconds = 0.0;  // timing only; not part of the deterministic content
};

// Evaluates `samples` independent instances, sample j drawn from the
// sub-seeds derive_subseed(seed, search_*, j). Deterministic for a fixed
// seed (elapsed_seconds aside).
SearchReport run_search(Conjecture which, int n, int m, std::uint64_t samples, Seed seed,
                        const SearchOptions& opts = {});

// The published 3x3 instance whose chain is genuinely complex:
// T = diag(1,2,3), A = [[2,i,i],[-i,2,i],[-i,-i,2]], p = (1/6, 1/3, 1/2).
struct CounterexampleInstance {
    PsdMatrix t;
    PsdMatrix a;
    WeightVector w;
};

CounterexampleInstance counterexample_instance();

inline constexpr double kCounterexampleGoldenRe = 116.037;
inline constexpr double kCounterexampleGoldenIm = 0.00260306;
inline constexpr double kCounterexampleTolRe = 5e-3;   // matches the 6 printed figures
inline constexpr double kCounterexampleTolIm = 5e-8;

// Recomputes the instance above and checks it against the golden value.
// Throws GoldenMismatch outside the published precision.
complex_t reproduce_counterexample();

}  // namespace traceineq
