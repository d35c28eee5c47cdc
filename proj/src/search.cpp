#include "traceineq/search.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "traceineq/errors.hpp"

namespace traceineq {

std::string to_string(Conjecture c) { return c == Conjecture::i ? "i" : "ii"; }

Conjecture conjecture_from_string(const std::string& s) {
    if (s == "i" || s == "1") return Conjecture::i;
    if (s == "ii" || s == "2") return Conjecture::ii;
    throw InvalidInput("unknown conjecture: " + s + " (expected i or ii)");
}

ConjectureSample conjecture_sample(Conjecture which, const PsdMatrix& t,
                                   const HermitianMatrix& a, const WeightVector& w,
                                   double tol_factor) {
    const int m = w.m();
    const complex_t chain = trace_chain(t, a, w);
    if (which == Conjecture::i) {
        const complex_t power_chain =
            detail::chain_raw(t, a.matrix(), WeightVector::uniform(m).values());
        const complex_t rhs(chain.real(), 0.0);  // the conjecture compares Re{chain}
        return {InequalityReport::evaluate("conjecture_i", power_chain, rhs, tol_factor),
                chain};
    }
    ComplexMatrix am = a.matrix();
    for (int i = 1; i < m; ++i) am = matmul(am, a.matrix());
    const complex_t upper = trace(matmul(t.matrix(), am));
    const complex_t lhs(std::abs(chain), 0.0);
    return {InequalityReport::evaluate("conjecture_ii", lhs, upper, tol_factor), chain};
}

double conjecture_slack(Conjecture which, const PsdMatrix& t, const PsdMatrix& a,
                        const WeightVector& w) {
    return conjecture_sample(which, t, a.hermitian(), w).report.slack;
}

SearchReport run_search(Conjecture which, int n, int m, std::uint64_t samples, Seed seed,
                        const SearchOptions& opts) {
    if (samples < 1) throw InvalidInput("run_search: samples must be >= 1");
    if (m < 1) throw InvalidInput("run_search: m must be >= 1");
    if (n < 2 || n > ComplexMatrix::kMaxDim)
        throw InvalidInput("run_search: n outside supported range");

    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.conjecture = which;
    rep.n = n;
    rep.m = m;
    rep.samples = samples;
    rep.seed = seed;
    rep.min_slack = std::numeric_limits<double>::infinity();

    for (std::uint64_t j = 0; j < samples; ++j) {
        try {
            const PsdMatrix t =
                opts.force_identity_t
                    ? PsdMatrix(HermitianMatrix(ComplexMatrix::identity(n)))
                    : (opts.stress
                           ? sample_psd_illconditioned(n, derive_subseed(seed, Stream::search_t, j))
                           : sample_psd(n, derive_subseed(seed, Stream::search_t, j)));
            const Seed a_seed = derive_subseed(seed, Stream::search_a, j);
            const HermitianMatrix a =
                opts.relax_a_to_hermitian
                    ? sample_hermitian(n, a_seed)
                    : (opts.stress ? sample_psd_near_singular(n, a_seed).hermitian()
                                   : sample_psd(n, a_seed).hermitian());
            const WeightVector w = sample_weights(m, derive_subseed(seed, Stream::search_w, j));

            const ConjectureSample s = conjecture_sample(which, t, a, w, opts.tol_factor);
            if (s.report.slack < -s.report.tol) ++rep.violations;
            if (s.report.slack < rep.min_slack) {
                rep.min_slack = s.report.slack;
                rep.worst = WorstInstance{j,      t.matrix(),     a.matrix(),
                                          w.values(), s.report.slack, s.chain};
            }
        } catch (const Error&) {
            ++rep.errors;
        }
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CounterexampleInstance counterexample_instance() {
    const ComplexMatrix t = ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0, 3.0});
    ComplexMatrix a(3);
    const complex_t i{0.0, 1.0};
    a(0, 0) = 2.0; a(0, 1) = i;    a(0, 2) = i;
    a(1, 0) = -i;  a(1, 1) = 2.0;  a(1, 2) = i;
    a(2, 0) = -i;  a(2, 1) = -i;   a(2, 2) = 2.0;
    return {PsdMatrix(HermitianMatrix(t)), PsdMatrix(HermitianMatrix(a)),
            WeightVector({1.0 / 6.0, 1.0 / 3.0, 1.0 / 2.0})};
}

complex_t reproduce_counterexample() {
    const CounterexampleInstance inst = counterexample_instance();
    const complex_t chain = trace_chain(inst.t, inst.a.hermitian(), inst.w);
    if (std::abs(chain.real() - kCounterexampleGoldenRe) > kCounterexampleTolRe ||
        std::abs(chain.imag() - kCounterexampleGoldenIm) > kCounterexampleTolIm)
        throw GoldenMismatch("chain " + std::to_string(chain.real()) + " + " +
                             std::to_string(chain.imag()) + "i disagrees with golden " +
                             std::to_string(kCounterexampleGoldenRe) + " + " +
                             std::to_string(kCounterexampleGoldenIm) + "i");
    return chain;
}

}  // namespace traceineq
