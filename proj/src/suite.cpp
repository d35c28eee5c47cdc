#include "traceineq/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "traceineq/checkers.hpp"
#include "traceineq/cycles.hpp"
#include "traceineq/errors.hpp"

namespace traceineq {

namespace {

struct FgPick {
    ScalarFunction f;
    ScalarFunction g;
    bool needs_psd;  // power(1/2) or power(2) alignment wants a PSD spectrum
};

ScalarFunction pool_function(int which, SplitMix64& rng) {
    switch (which) {
        case 0: return ScalarFunction::identity();
        case 1: return ScalarFunction::power(2.0);
        case 2: return ScalarFunction::power(0.5);
        default:
            return ScalarFunction::affine(rng.next_uniform(0.2, 2.5),
                                          rng.next_uniform(-1.0, 1.0));
    }
}

FgPick pick_fg(SplitMix64& rng) {
    const int fi = static_cast<int>(rng.next_u64() % 4);
    const int gi = static_cast<int>(rng.next_u64() % 4);
    ScalarFunction f = pool_function(fi, rng);
    ScalarFunction g = pool_function(gi, rng);
    return {std::move(f), std::move(g), fi == 2 || gi == 2};
}

HermitianMatrix spectrum_matched(int dim, Seed seed, bool needs_psd) {
    if (needs_psd) return sample_psd(dim, seed).hermitian();
    return sample_hermitian(dim, seed);
}

// g = f + c, uniformly above f; keeps the ordered-pair hypothesis true by
// construction.
ScalarFunction shifted_up(const ScalarFunction& f, double c) {
    return ScalarFunction::custom(f.name() + "+" + std::to_string(c), f.domain_lo(),
                                  f.domain_hi(), [f, c](double x) { return f(x) + c; });
}

using SampleFn = std::function<std::vector<InequalityReport>(std::uint64_t, int, Seed)>;

CheckerRow run_row(const std::string& name, const VerifyConfig& cfg, std::uint64_t row_tag,
                   const SampleFn& fn) {
    CheckerRow row;
    row.name = name;
    bool have_worst = false;
    for (std::uint64_t j = 0; j < cfg.samples; ++j) {
        const int dim = cfg.dims[j % cfg.dims.size()];
        const Seed sub = derive_subseed(derive_subseed(cfg.seed, Stream::suite_row, row_tag),
                                        Stream::suite_sample, j);
        for (InequalityReport& rep : fn(j, dim, sub)) {
            ++row.samples;
            if (rep.verdict == Verdict::fail) ++row.fails;
            if (rep.verdict == Verdict::degenerate) ++row.degenerates;
            row.max_imag_residual = std::max(row.max_imag_residual, rep.imag_residual);
            if (!have_worst || rep.slack < row.min_slack) {
                row.min_slack = rep.slack;
                row.worst = std::move(rep);
                have_worst = true;
            }
        }
    }
    return row;
}

std::vector<InequalityReport> lemmas_sample(int /*dim*/, Seed sub, double tol_factor) {
    std::vector<InequalityReport> out;
    SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));

    // Cycle phase product on a random PSD matrix and random eigenbasis.
    const PsdMatrix a = sample_psd(2, derive_subseed(sub, Stream::psd, 0));
    const ComplexMatrix basis =
        hermitian_eig(sample_hermitian(2, derive_subseed(sub, Stream::hermitian, 0)))
            .eigenvectors;
    const int m = 1 + static_cast<int>(rng.next_u64() % 8);
    std::vector<int> bits(static_cast<std::size_t>(m));
    for (int& b : bits) b = static_cast<int>(rng.next_u64() & 1u);
    const IndexCycle cycle(bits);

    const complex_t direct = chain_phase_product(a, basis, cycle);
    const ArcDecomposition arcs = arc_parity(cycle);

    const ComplexMatrix b = matmul(matmul(basis.adjoint(), a.matrix()), basis);
    double factorized = 1.0;
    for (int j = 0; j < m; ++j) {
        const int prev = (j + m - 1) % m;
        if (cycle.indices[static_cast<std::size_t>(j)] ==
            cycle.indices[static_cast<std::size_t>(prev)])
            factorized *= b(cycle.indices[static_cast<std::size_t>(j)],
                            cycle.indices[static_cast<std::size_t>(j)])
                              .real();
    }
    factorized *= std::pow(std::abs(b(0, 1)), arcs.diff_count);

    // Nonnegativity of the product, with the factorized form and the arc
    // parity folded in as hard assertions.
    InequalityReport phase =
        InequalityReport::evaluate("lemmas", complex_t{}, direct, tol_factor);
    const double denom = std::max({std::abs(direct), std::abs(factorized), 1.0});
    if (std::abs(direct - factorized) > 1e-10 * denom) phase.verdict = Verdict::fail;
    if (arcs.diff_count % 2 != 0 || arcs.same_count + arcs.diff_count != m)
        phase.verdict = Verdict::fail;
    out.push_back(std::move(phase));

    // Weighted AM-GM on random positive scalars.
    const int k = 2 + static_cast<int>(rng.next_u64() % 4);
    std::vector<double> vals(static_cast<std::size_t>(k));
    for (double& v : vals) v = rng.next_uniform(0.1, 10.0);
    const WeightVector p = sample_weights(k, derive_subseed(sub, Stream::weights, 0));
    const AmGm mg = amgm_weighted(vals, p);
    out.push_back(InequalityReport::evaluate("lemmas", complex_t(mg.geometric, 0.0),
                                             complex_t(mg.arithmetic, 0.0), tol_factor));
    return out;
}

}  // namespace

std::vector<CheckerRow> run_verify_suite(const VerifyConfig& cfg) {
    if (cfg.samples < 1) throw InvalidInput("verify: samples must be >= 1");
    if (cfg.dims.empty()) throw InvalidInput("verify: need at least one dimension");
    for (int d : cfg.dims)
        if (d < 2 || d > ComplexMatrix::kMaxDim)
            throw InvalidInput("verify: dimension outside [2, 64]");
    const double tf = cfg.tol_factor;

    std::vector<CheckerRow> rows;

    rows.push_back(run_row("p1", cfg, 0, [tf](std::uint64_t, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const FgPick fg = pick_fg(rng);
        const PsdMatrix l = sample_psd(dim, derive_subseed(sub, Stream::psd, 0));
        const HermitianMatrix a =
            spectrum_matched(dim, derive_subseed(sub, Stream::hermitian, 0), fg.needs_psd);
        return std::vector{check_p1(fg.f, fg.g, l, a, tf)};
    }));

    rows.push_back(run_row("p2", cfg, 1, [tf](std::uint64_t, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const FgPick fg = pick_fg(rng);
        const HermitianMatrix l = sample_hermitian(dim, derive_subseed(sub, Stream::psd, 0));
        const HermitianMatrix a =
            spectrum_matched(dim, derive_subseed(sub, Stream::hermitian, 0), fg.needs_psd);
        return std::vector{check_p2(fg.f, fg.g, l, a, tf)};
    }));

    rows.push_back(run_row("rhs_order", cfg, 2, [tf](std::uint64_t, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const FgPick fg = pick_fg(rng);
        const HermitianMatrix l = sample_hermitian(dim, derive_subseed(sub, Stream::psd, 0));
        const HermitianMatrix a =
            spectrum_matched(dim, derive_subseed(sub, Stream::hermitian, 0), fg.needs_psd);
        return std::vector{check_rhs_order(fg.f, fg.g, l, a, tf)};
    }));

    rows.push_back(run_row("ordered_fg", cfg, 3, [tf](std::uint64_t, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const FgPick fg = pick_fg(rng);
        const ScalarFunction g = shifted_up(fg.f, rng.next_uniform(0.1, 2.0));
        const HermitianMatrix l = sample_hermitian(dim, derive_subseed(sub, Stream::psd, 0));
        const HermitianMatrix a =
            spectrum_matched(dim, derive_subseed(sub, Stream::hermitian, 0), fg.needs_psd);
        return std::vector{check_ordered_fg(fg.f, g, l, a, tf)};
    }));

    rows.push_back(run_row("araki", cfg, 4, [tf](std::uint64_t j, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const PsdMatrix x = sample_psd(dim, derive_subseed(sub, Stream::psd, 0));
        const PsdMatrix y = sample_psd(dim, derive_subseed(sub, Stream::psd, 1));
        const double r = rng.next_unit();
        const double p = (j % 2 == 0) ? static_cast<double>(1 + rng.next_u64() % 4)
                                      : rng.next_uniform(0.2, 3.0);
        return std::vector{check_araki(x, y, r, p, tf)};
    }));

    rows.push_back(run_row("power_chain_m", cfg, 5, [tf](std::uint64_t, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const PsdMatrix t = sample_psd(dim, derive_subseed(sub, Stream::psd, 0));
        const PsdMatrix a = sample_psd(dim, derive_subseed(sub, Stream::psd, 1));
        const int m = 1 + static_cast<int>(rng.next_u64() % 6);
        return std::vector{check_power_chain_m(t, a, m, tf)};
    }));

    rows.push_back(run_row("alpha_interp", cfg, 6, [tf](std::uint64_t, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const PsdMatrix t = sample_psd(dim, derive_subseed(sub, Stream::psd, 0));
        const HermitianMatrix a = sample_hermitian(dim, derive_subseed(sub, Stream::hermitian, 0));
        const BoundPair pair = check_alpha_interp(t, a, rng.next_unit(), tf);
        return std::vector{pair.lower, pair.upper};
    }));

    rows.push_back(run_row("bourin_fujii", cfg, 7, [tf](std::uint64_t j, int dim, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        // Cycle through aligned pairs on general/PSD spectra, plus an
        // anti-aligned decreasing pair.
        const int variant = static_cast<int>(j % 4);
        const bool needs_psd = variant == 1 || variant == 2;
        const HermitianMatrix a =
            spectrum_matched(dim, derive_subseed(sub, Stream::hermitian, 0), needs_psd);
        const HermitianMatrix x = sample_hermitian(dim, derive_subseed(sub, Stream::hermitian, 1));
        ScalarFunction f = ScalarFunction::identity();
        ScalarFunction g = ScalarFunction::identity();
        bool aligned = true;
        switch (variant) {
            case 0:
                g = ScalarFunction::affine(rng.next_uniform(0.2, 2.5),
                                           rng.next_uniform(-1.0, 1.0));
                break;
            case 1: f = ScalarFunction::power(2.0); break;
            case 2: f = ScalarFunction::power(0.5); break;
            default:
                g = ScalarFunction::affine(-rng.next_uniform(0.2, 2.5),
                                           rng.next_uniform(-1.0, 1.0));
                aligned = false;
                break;
        }
        return std::vector{check_bourin_fujii(f, g, a, x, aligned, tf)};
    }));

    rows.push_back(run_row("thm_2x2", cfg, 8, [tf](std::uint64_t, int, Seed sub) {
        SplitMix64 rng(derive_subseed(sub, Stream::scalar, 0));
        const PsdMatrix t = sample_psd(2, derive_subseed(sub, Stream::psd, 0));
        const PsdMatrix a = sample_psd(2, derive_subseed(sub, Stream::psd, 1));
        const int m = 2 + static_cast<int>(rng.next_u64() % 7);
        const WeightVector w = sample_weights(m, derive_subseed(sub, Stream::weights, 0));
        const BoundPair pair = check_thm_2x2(t, a, w, tf);
        return std::vector{pair.lower, pair.upper};
    }));

    rows.push_back(run_row("lemmas", cfg, 9, [tf](std::uint64_t, int dim, Seed sub) {
        return lemmas_sample(dim, sub, tf);
    }));

    std::sort(rows.begin(), rows.end(),
              [](const CheckerRow& a, const CheckerRow& b) { return a.name < b.name; });
    return rows;
}

}  // namespace traceineq
