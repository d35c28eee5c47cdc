#pragma once

#include <span>
#include <vector>

#include "traceineq/complex_matrix.hpp"
#include "traceineq/spectral.hpp"

namespace traceineq {

// A cyclic binary index sequence i_1..i_m, each entry 0 or 1. The cyclic
// shift pi sends position j to its predecessor (1 -> m, 2 -> 1, ...).
struct IndexCycle {
    explicit IndexCycle(std::vector<int> idx);

    int length() const { return static_cast<int>(indices.size()); }

    std::vector<int> indices;
};

// Split of the cycle into positions that agree with their predecessor
// (same_count = |S|) and those that do not. The parity lemma: diff_count is
// always even.
struct ArcDecomposition {
    int same_count = 0;
    int diff_count = 0;
};

ArcDecomposition arc_parity(const IndexCycle& c);

// The cycle phase product prod_j <psi_{i_pi(j)} | A | psi_{i_j}> for a 2x2
// PSD A in the orthonormal basis given by the columns of `basis`. Real and
// nonnegative up to roundoff, and factorizes as the diagonal part over S
// times |<psi_0|A|psi_1>|^{diff_count}.
complex_t chain_phase_product(const PsdMatrix& a, const ComplexMatrix& basis,
                              const IndexCycle& c);

// The proof-side expansion of the 2x2 trace chain: the sum over all index
// tuples in {0,1}^m of the lambda^p coefficient times the cycle phase
// product. Agrees with trace_chain for PSD 2x2 input.
complex_t chain_spectral_sum(const SpectralDecomposition& d, const ComplexMatrix& a,
                             std::span<const double> weights);

}  // namespace traceineq
