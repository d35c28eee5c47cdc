#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "traceineq/checkers.hpp"
#include "traceineq/errors.hpp"
#include "traceineq/sampling.hpp"
#include "traceineq/suite.hpp"

using namespace traceineq;

namespace {

PsdMatrix psd_of(std::initializer_list<double> diag) {
    return PsdMatrix{HermitianMatrix(ComplexMatrix::diagonal(std::vector<double>(diag)))};
}

PsdMatrix ones2x2() {
    ComplexMatrix m(2);
    m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 1.0;
    return PsdMatrix{HermitianMatrix(m)};
}

}  // namespace

TEST_CASE("trace_chain with T = I collapses to Tr[A^m]") {
    const PsdMatrix eye{HermitianMatrix(ComplexMatrix::identity(3))};
    const HermitianMatrix a = sample_hermitian(3, Seed{2});
    const WeightVector w = sample_weights(4, Seed{3});
    ComplexMatrix am = a.matrix();
    for (int i = 1; i < 4; ++i) am = matmul(am, a.matrix());
    CHECK(trace_chain(eye, a, w) == trace(am));
}

TEST_CASE("trace_chain matches the closed-form 2x2 oracle") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const PsdMatrix t = sample_psd(2, derive_subseed(Seed{10}, Stream::psd, 2 * s));
        const PsdMatrix a = sample_psd(2, derive_subseed(Seed{10}, Stream::psd, 2 * s + 1));
        const WeightVector w =
            sample_weights(2 + static_cast<int>(s % 5), derive_subseed(Seed{10}, Stream::weights, s));
        const complex_t got = trace_chain(t, a.hermitian(), w);
        const complex_t want = oracle::chain2x2(t.matrix(), a.matrix(), w.values());
        CHECK(oracle::rel_err(got, want) <= 1e-10);
    }
}

TEST_CASE("trace_chain reproduces the published 3x3 complex value") {
    const PsdMatrix t = psd_of({1.0, 2.0, 3.0});
    ComplexMatrix am(3);
    const complex_t i{0.0, 1.0};
    am(0, 0) = 2.0; am(0, 1) = i;   am(0, 2) = i;
    am(1, 0) = -i;  am(1, 1) = 2.0; am(1, 2) = i;
    am(2, 0) = -i;  am(2, 1) = -i;  am(2, 2) = 2.0;
    const HermitianMatrix a(am);
    const complex_t c = trace_chain(t, a, WeightVector({1.0 / 6, 1.0 / 3, 1.0 / 2}));
    CHECK(std::abs(c.real() - 116.037) <= 5e-3);
    CHECK(std::abs(c.imag() - 0.00260306) <= 5e-8);
    // frozen from the independent pre-build oracle
    CHECK(oracle::rel_err(c, complex_t(116.03674351228129, 0.0026030590508896445)) <= 1e-9);
}

TEST_CASE("check_p1: f = g gives exactly zero slack") {
    const PsdMatrix l = sample_psd(3, Seed{20});
    const HermitianMatrix a = sample_hermitian(3, Seed{21});
    const InequalityReport r =
        check_p1(ScalarFunction::power(2.0), ScalarFunction::power(2.0), l, a);
    CHECK(r.slack == 0.0);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_p1: L = 0 gives lhs = rhs = 0") {
    const PsdMatrix zero{HermitianMatrix(ComplexMatrix(3))};
    const HermitianMatrix a = sample_hermitian(3, Seed{22});
    const InequalityReport r = check_p1(ScalarFunction::identity(), ScalarFunction::power(2.0),
                                        zero, a);
    CHECK(r.lhs == complex_t{});
    CHECK(r.rhs == complex_t{});
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_p1 passes and matches the spectral-sum oracle on random input") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const PsdMatrix l = sample_psd(3, derive_subseed(Seed{23}, Stream::psd, s));
        const HermitianMatrix a = sample_hermitian(3, derive_subseed(Seed{23}, Stream::hermitian, s));
        const InequalityReport r =
            check_p1(ScalarFunction::power(2.0), ScalarFunction::identity(), l, a);
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.slack >= -r.tol);

        const SpectralDecomposition d = hermitian_eig(a);
        const ComplexMatrix lb =
            matmul(matmul(d.eigenvectors.adjoint(), l.matrix()), d.eigenvectors);
        auto f = [](double x) { return x * x; };
        auto g = [](double x) { return x; };
        const double lhs = oracle::trace_flgl_spectral(d.eigenvalues, lb, f, g);
        const double rhs = 0.5 * (oracle::trace_flgl_spectral(d.eigenvalues, lb, f, f) +
                                  oracle::trace_flgl_spectral(d.eigenvalues, lb, g, g));
        CHECK(oracle::rel_err(r.lhs, complex_t(lhs, 0.0)) <= 1e-10);
        CHECK(oracle::rel_err(r.rhs, complex_t(rhs, 0.0)) <= 1e-10);

        // the two proposition bounds are themselves ordered on every instance
        const InequalityReport p2 = check_p2(ScalarFunction::power(2.0),
                                             ScalarFunction::identity(), l.hermitian(), a);
        CHECK(r.rhs.real() <= p2.rhs.real() + p2.tol);
    }
}

TEST_CASE("check_p2: scalar A reduces both sides to the same trace") {
    const HermitianMatrix l = sample_hermitian(3, Seed{24});
    const HermitianMatrix a{ComplexMatrix::identity(3)};
    const InequalityReport r = check_p2(ScalarFunction::power(2.0), ScalarFunction::power(2.0),
                                        l, a);
    CHECK(std::abs(r.slack) <= 1e-12 * std::max(std::abs(r.rhs), 1.0));
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_p2 holds for indefinite Hermitian L") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const HermitianMatrix l = sample_hermitian(3, derive_subseed(Seed{25}, Stream::psd, s));
        const HermitianMatrix a =
            sample_hermitian(3, derive_subseed(Seed{25}, Stream::hermitian, s));
        const InequalityReport r =
            check_p2(ScalarFunction::identity(), ScalarFunction::affine(2.0, 0.5), l, a);
        CHECK(r.verdict == Verdict::pass);
    }
}

TEST_CASE("check_p2 with f = g = identity is the note Tr[(AL)^2] <= Tr[A^2 L^2]") {
    const HermitianMatrix l = sample_hermitian(3, Seed{26});
    const HermitianMatrix a = sample_hermitian(3, Seed{27});
    const InequalityReport r = check_p2(ScalarFunction::identity(), ScalarFunction::identity(),
                                        l, a);
    const ComplexMatrix al = matmul(a.matrix(), l.matrix());
    const complex_t lhs = trace(matmul(al, al));
    const complex_t rhs = trace(matmul(matmul(a.matrix(), a.matrix()),
                                       matmul(l.matrix(), l.matrix())));
    CHECK(oracle::rel_err(r.lhs, lhs) <= 1e-12);
    CHECK(oracle::rel_err(r.rhs, rhs) <= 1e-12);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_rhs_order: commuting diagonals and L = I give zero slack") {
    const HermitianMatrix l{ComplexMatrix::diagonal(std::vector<double>{1.0, -2.0, 0.5})};
    const HermitianMatrix a{ComplexMatrix::diagonal(std::vector<double>{0.3, 1.0, 2.0})};
    const InequalityReport diag =
        check_rhs_order(ScalarFunction::identity(), ScalarFunction::identity(), l, a);
    CHECK(std::abs(diag.slack) <= 1e-12 * std::max(std::abs(diag.rhs), 1.0));

    const HermitianMatrix eye{ComplexMatrix::identity(3)};
    const HermitianMatrix rnda = sample_hermitian(3, Seed{28});
    const InequalityReport ident =
        check_rhs_order(ScalarFunction::power(2.0), ScalarFunction::identity(), eye, rnda);
    CHECK(ident.slack == 0.0);
}

TEST_CASE("check_rhs_order passes on random input and orders the proposition bounds") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const HermitianMatrix l = sample_hermitian(3, derive_subseed(Seed{29}, Stream::psd, s));
        const HermitianMatrix a =
            sample_hermitian(3, derive_subseed(Seed{29}, Stream::hermitian, s));
        const ScalarFunction f = ScalarFunction::power(2.0);
        const ScalarFunction g = ScalarFunction::identity();
        const InequalityReport r = check_rhs_order(f, g, l, a);
        CHECK(r.verdict == Verdict::pass);
        // RHS(p1) <= RHS(p2) on the same instance
        const InequalityReport p2 = check_p2(f, g, l, a);
        CHECK(r.lhs.real() <= p2.rhs.real() + p2.tol);
    }
}

TEST_CASE("check_ordered_fg examples") {
    const HermitianMatrix l = sample_hermitian(3, Seed{30});
    const HermitianMatrix a = sample_hermitian(3, Seed{31});
    SUBCASE("x vs x + 1 passes") {
        const InequalityReport r = check_ordered_fg(
            ScalarFunction::identity(), ScalarFunction::affine(1.0, 1.0), l, a);
        CHECK(r.verdict == Verdict::pass);
    }
    SUBCASE("f = g gives zero slack") {
        const InequalityReport r =
            check_ordered_fg(ScalarFunction::identity(), ScalarFunction::identity(), l, a);
        CHECK(r.slack == 0.0);
        CHECK(r.verdict == Verdict::pass);
    }
    SUBCASE("an unordered pair is degenerate, not a failure") {
        // x and x^2 cross at x = 1; the sampled spectrum straddles it
        const HermitianMatrix wide{ComplexMatrix::diagonal(std::vector<double>{0.5, 3.0})};
        const HermitianMatrix l2 = sample_hermitian(2, Seed{32});
        const InequalityReport r =
            check_ordered_fg(ScalarFunction::identity(), ScalarFunction::power(2.0), l2, wide);
        CHECK(r.verdict == Verdict::degenerate);
    }
}

TEST_CASE("check_ordered_fg slack equals the proof's spectral double sum") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const HermitianMatrix l = sample_hermitian(3, derive_subseed(Seed{33}, Stream::psd, s));
        const HermitianMatrix a =
            sample_hermitian(3, derive_subseed(Seed{33}, Stream::hermitian, s));
        SplitMix64 rng(Seed{s});
        const double shift = rng.next_uniform(0.1, 3.0);
        // g = f + exp(0.3 x) + shift dominates f everywhere
        const ScalarFunction f = ScalarFunction::identity();
        const ScalarFunction g = ScalarFunction::custom(
            "exp-like", -1e300, 1e300,
            [shift](double x) { return x + std::exp(0.3 * x) + shift; });
        const InequalityReport r = check_ordered_fg(f, g, l, a);
        CHECK(r.verdict == Verdict::pass);

        const SpectralDecomposition d = hermitian_eig(a);
        const ComplexMatrix lb =
            matmul(matmul(d.eigenvectors.adjoint(), l.matrix()), d.eigenvectors);
        auto diff = [&](double x) { return -(std::exp(0.3 * x) + shift); };
        const double slack_oracle =
            0.5 * oracle::trace_flgl_spectral(d.eigenvalues, lb, diff, diff);
        CHECK(slack_oracle >= 0.0);
        CHECK(oracle::rel_err(r.slack, slack_oracle) <= 1e-9);
    }
}

TEST_CASE("check_araki: r = 1 collapses to the same expression exactly") {
    const PsdMatrix x = sample_psd(3, Seed{40});
    const PsdMatrix y = sample_psd(3, Seed{41});
    const InequalityReport r = check_araki(x, y, 1.0, 2.5);
    CHECK(r.slack == 0.0);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_araki: commuting diagonals give equality") {
    const PsdMatrix x = psd_of({0.5, 1.0, 2.0});
    const PsdMatrix y = psd_of({3.0, 0.2, 1.5});
    const InequalityReport r = check_araki(x, y, 0.5, 3.0);
    CHECK(std::abs(r.slack) <= r.tol);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_araki passes with fractional outer power") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const PsdMatrix x = sample_psd(3, derive_subseed(Seed{42}, Stream::psd, 2 * s));
        const PsdMatrix y = sample_psd(3, derive_subseed(Seed{42}, Stream::psd, 2 * s + 1));
        const InequalityReport r = check_araki(x, y, 0.5, 2.0);
        CHECK(r.verdict == Verdict::pass);
        const InequalityReport frac = check_araki(x, y, 0.37, 1.61);
        CHECK(frac.verdict == Verdict::pass);
    }
}

TEST_CASE("check_power_chain_m: m = 1 is an exact identity") {
    const PsdMatrix t = sample_psd(3, Seed{43});
    const PsdMatrix a = sample_psd(3, Seed{44});
    const InequalityReport r = check_power_chain_m(t, a, 1);
    CHECK(r.slack == 0.0);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_power_chain_m: T = I is the equality case") {
    const PsdMatrix eye{HermitianMatrix(ComplexMatrix::identity(3))};
    const PsdMatrix a = sample_psd(3, Seed{45});
    const InequalityReport r = check_power_chain_m(eye, a, 4);
    CHECK(r.slack == 0.0);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_power_chain_m agrees with check_araki under the proof substitution") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const PsdMatrix t = sample_psd(3, derive_subseed(Seed{46}, Stream::psd, 2 * s));
        const PsdMatrix a = sample_psd(3, derive_subseed(Seed{46}, Stream::psd, 2 * s + 1));
        const int m = 2 + static_cast<int>(s % 4);
        const InequalityReport pc = check_power_chain_m(t, a, m);
        CHECK(pc.verdict == Verdict::pass);
        const InequalityReport ar = check_araki(fractional_power(a, m), t, 1.0 / m, m);
        CHECK(oracle::rel_err(pc.lhs, ar.lhs) <= 1e-10);
        CHECK(oracle::rel_err(pc.rhs, ar.rhs) <= 1e-10);
    }
}

TEST_CASE("check_alpha_interp: alpha = 1/2 collapses the lower bound exactly") {
    const PsdMatrix t = sample_psd(4, Seed{47});
    const HermitianMatrix a = sample_hermitian(4, Seed{48});
    const BoundPair r = check_alpha_interp(t, a, 0.5);
    CHECK(r.lower.slack == 0.0);
    CHECK(r.upper.verdict == Verdict::pass);
}

TEST_CASE("check_alpha_interp: endpoints collapse the upper bound") {
    const PsdMatrix t = sample_psd(4, Seed{49});
    const HermitianMatrix a = sample_hermitian(4, Seed{50});
    for (double alpha : {0.0, 1.0}) {
        const BoundPair r = check_alpha_interp(t, a, alpha);
        CHECK(std::abs(r.upper.slack) <= 1e-12 * std::max(std::abs(r.upper.rhs), 1.0));
        CHECK(r.lower.verdict == Verdict::pass);
    }
}

TEST_CASE("check_alpha_interp passes with a real middle term on random input") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const PsdMatrix t = sample_psd(4, derive_subseed(Seed{51}, Stream::psd, s));
        const HermitianMatrix a =
            sample_hermitian(4, derive_subseed(Seed{51}, Stream::hermitian, s));
        const BoundPair r = check_alpha_interp(t, a, 0.3);
        CHECK(r.lower.verdict == Verdict::pass);
        CHECK(r.upper.verdict == Verdict::pass);
        CHECK(r.lower.imag_residual <= r.lower.tol);
        // middle term against a direct product evaluation
        const ComplexMatrix mid = matmul(
            matmul(matmul(detail::psd_power_matrix(t, 0.3), a.matrix()),
                   detail::psd_power_matrix(t, 0.7)),
            a.matrix());
        CHECK(oracle::rel_err(r.lower.rhs, trace(mid)) <= 1e-10);
    }
}

TEST_CASE("check_bourin_fujii: identity pair is aligned and passes") {
    const HermitianMatrix a = sample_hermitian(3, Seed{52});
    const HermitianMatrix x = sample_hermitian(3, Seed{53});
    const InequalityReport r = check_bourin_fujii(ScalarFunction::identity(),
                                                  ScalarFunction::identity(), a, x, true);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_bourin_fujii: scalar spectrum gives zero slack") {
    const HermitianMatrix a{2.5 * ComplexMatrix::identity(3)};
    const HermitianMatrix x = sample_hermitian(3, Seed{54});
    const InequalityReport r = check_bourin_fujii(ScalarFunction::power(2.0),
                                                  ScalarFunction::identity(), a, x, true);
    CHECK(std::abs(r.slack) <= 1e-12 * std::max(std::abs(r.rhs), 1.0));
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_bourin_fujii matches the spectral-sum oracle on PSD spectra") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const PsdMatrix apsd = sample_psd(3, derive_subseed(Seed{55}, Stream::psd, s));
        const HermitianMatrix x =
            sample_hermitian(3, derive_subseed(Seed{55}, Stream::hermitian, s));
        const InequalityReport r = check_bourin_fujii(
            ScalarFunction::power(2.0), ScalarFunction::identity(), apsd.hermitian(), x, true);
        CHECK(r.verdict == Verdict::pass);

        const SpectralDecomposition d = hermitian_eig(apsd.hermitian());
        const ComplexMatrix xb =
            matmul(matmul(d.eigenvectors.adjoint(), x.matrix()), d.eigenvectors);
        auto f = [](double v) { return v * v; };
        auto g = [](double v) { return v; };
        auto fg = [](double v) { return v * v * v; };
        auto one = [](double) { return 1.0; };
        const double lhs = oracle::trace_flgl_spectral(d.eigenvalues, xb, f, g);
        const double rhs = oracle::trace_flgl_spectral(d.eigenvalues, xb, fg, one);
        CHECK(oracle::rel_err(r.lhs, complex_t(lhs, 0.0)) <= 1e-9);
        CHECK(oracle::rel_err(r.rhs, complex_t(rhs, 0.0)) <= 1e-9);
    }
}

TEST_CASE("check_bourin_fujii: anti-aligned pair reverses the inequality") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const HermitianMatrix a = sample_hermitian(3, derive_subseed(Seed{56}, Stream::psd, s));
        const HermitianMatrix x =
            sample_hermitian(3, derive_subseed(Seed{56}, Stream::hermitian, s));
        const InequalityReport r = check_bourin_fujii(
            ScalarFunction::identity(), ScalarFunction::affine(-1.5, 0.2), a, x, false);
        CHECK(r.verdict == Verdict::pass);
    }
}

TEST_CASE("check_bourin_fujii: a misdeclared alignment is degenerate") {
    const HermitianMatrix a{ComplexMatrix::diagonal(std::vector<double>{0.5, 2.0})};
    const HermitianMatrix x = sample_hermitian(2, Seed{57});
    // identity and -x are anti-aligned; declaring them aligned must not
    // produce a fail verdict
    const InequalityReport r = check_bourin_fujii(ScalarFunction::identity(),
                                                  ScalarFunction::affine(-1.0, 0.0), a, x, true);
    CHECK(r.verdict == Verdict::degenerate);
}

TEST_CASE("check_thm_2x2: T = kI is the equality case") {
    const PsdMatrix t{HermitianMatrix(2.0 * ComplexMatrix::identity(2))};
    const PsdMatrix a = ones2x2();
    const BoundPair r = check_thm_2x2(t, a, WeightVector({1.0 / 3, 2.0 / 3}));
    CHECK(std::abs(r.lower.slack) < 1e-10);
    CHECK(std::abs(r.upper.slack) < 1e-10);
    CHECK(r.lower.verdict == Verdict::pass);
    CHECK(r.upper.verdict == Verdict::pass);
}

TEST_CASE("check_thm_2x2: uniform weights make the lower bound an identity") {
    const PsdMatrix t = sample_psd(2, Seed{58});
    const PsdMatrix a = sample_psd(2, Seed{59});
    const BoundPair r = check_thm_2x2(t, a, WeightVector::uniform(5));
    CHECK(r.lower.slack == 0.0);
}

TEST_CASE("check_thm_2x2 passes on random weights and matches the proof expansion") {
    const WeightVector w({0.2, 0.3, 0.5});
    for (std::uint64_t s = 0; s < 200; ++s) {
        const PsdMatrix t = sample_psd(2, derive_subseed(Seed{60}, Stream::psd, 2 * s));
        const PsdMatrix a = sample_psd(2, derive_subseed(Seed{60}, Stream::psd, 2 * s + 1));
        const BoundPair r = check_thm_2x2(t, a, w);
        CHECK(r.lower.verdict == Verdict::pass);
        CHECK(r.upper.verdict == Verdict::pass);
        const complex_t proof = oracle::proof_sum_2x2(t.matrix(), a.matrix(), w.values());
        CHECK(oracle::rel_err(r.lower.rhs, proof) <= 1e-10);
    }
}

TEST_CASE("check_thm_2x2 rejects other dimensions") {
    const PsdMatrix t3 = sample_psd(3, Seed{61});
    const PsdMatrix a3 = sample_psd(3, Seed{62});
    CHECK_THROWS_AS(check_thm_2x2(t3, a3, WeightVector::uniform(2)), DimensionMismatch);
}

TEST_CASE("equality certification in both directions") {
    const PsdMatrix a = ones2x2();
    const WeightVector w({1.0 / 3, 2.0 / 3});
    const PsdMatrix t_eq{HermitianMatrix(2.0 * ComplexMatrix::identity(2))};
    const BoundPair eq = check_thm_2x2(t_eq, a, w);
    CHECK(std::abs(eq.lower.slack) < 1e-10);
    CHECK(std::abs(eq.upper.slack) < 1e-10);

    const PsdMatrix t_neq = psd_of({1.0, 2.0});
    const BoundPair neq = check_thm_2x2(t_neq, a, w);
    CHECK((neq.lower.slack > 1e-6 || neq.upper.slack > 1e-6));
    // goldens frozen from the independent pre-build oracle
    CHECK(oracle::rel_err(neq.lower.slack, 0.01889497711688204) <= 1e-9);
    CHECK(oracle::rel_err(neq.upper.slack, 0.15267789813692723) <= 1e-9);
}

TEST_CASE("scale equivariance: degree-m terms scale by c^m") {
    const WeightVector w({0.25, 0.35, 0.4});
    for (std::uint64_t s = 0; s < 50; ++s) {
        const PsdMatrix t = sample_psd(2, derive_subseed(Seed{63}, Stream::psd, 2 * s));
        const PsdMatrix a = sample_psd(2, derive_subseed(Seed{63}, Stream::psd, 2 * s + 1));
        SplitMix64 rng(Seed{s});
        const double c = rng.next_uniform(0.3, 2.5);
        const PsdMatrix ca{HermitianMatrix(complex_t(c, 0.0) * a.matrix())};
        const double scale = std::pow(c, 3);

        const complex_t chain = trace_chain(t, a.hermitian(), w);
        const complex_t chain_scaled = trace_chain(t, ca.hermitian(), w);
        CHECK(oracle::rel_err(chain_scaled, scale * chain) <= 1e-9);

        // slacks are differences of O(chain) traces, so compare them at the
        // chain's own scale
        const double band = 1e-9 * scale * std::max(std::abs(chain), 1.0);
        const BoundPair base = check_thm_2x2(t, a, w);
        const BoundPair scaled = check_thm_2x2(t, ca, w);
        CHECK(std::abs(scaled.lower.slack - scale * base.lower.slack) <= band);
        CHECK(std::abs(scaled.upper.slack - scale * base.upper.slack) <= band);
    }
}

TEST_CASE("amgm_weighted examples and errors") {
    SUBCASE("equal values meet with equality") {
        const AmGm r = amgm_weighted(std::array{1.7, 1.7, 1.7}, WeightVector::uniform(3));
        CHECK(oracle::rel_err(r.geometric, r.arithmetic) <= 1e-12);
    }
    SUBCASE("(1,2) with half weights") {
        const AmGm r = amgm_weighted(std::array{1.0, 2.0}, WeightVector::uniform(2));
        CHECK(r.geometric == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
        CHECK(r.arithmetic == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(r.geometric <= r.arithmetic);
    }
    SUBCASE("(1,4,16) with thirds") {
        const AmGm r = amgm_weighted(std::array{1.0, 4.0, 16.0}, WeightVector::uniform(3));
        CHECK(r.geometric == doctest::Approx(4.0).epsilon(1e-13));
        CHECK(r.arithmetic == doctest::Approx(7.0).epsilon(1e-14));
    }
    SUBCASE("nonpositive input is rejected") {
        CHECK_THROWS_AS(amgm_weighted(std::array{1.0, -0.5}, WeightVector::uniform(2)),
                        NonPositiveInput);
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(amgm_weighted(std::array{1.0, 2.0, 3.0}, WeightVector::uniform(2)),
                        DimensionMismatch);
    }
}

TEST_CASE("WeightVector validation") {
    CHECK_THROWS_AS(WeightVector({0.5, 0.6}), InvalidInput);
    CHECK_THROWS_AS(WeightVector({1.5, -0.5}), InvalidInput);
    CHECK_THROWS_AS(WeightVector(std::vector<double>{}), InvalidInput);
    CHECK(WeightVector::uniform(1).values() == std::vector<double>{1.0});
}

TEST_CASE("the full property suite is clean at a thousand samples per checker") {
    VerifyConfig cfg;
    cfg.samples = 1000;
    cfg.seed = Seed{20260809};
    const std::vector<CheckerRow> rows = run_verify_suite(cfg);
    REQUIRE(rows.size() == 10);
    for (const CheckerRow& r : rows) {
        INFO(r.name);
        CHECK(r.fails == 0);
        CHECK(r.samples >= 1000);
        CHECK(r.worst.slack >= -r.worst.tol);
    }
}

TEST_CASE("InequalityReport verdict rule") {
    const InequalityReport pass = InequalityReport::evaluate("x", 1.0, 2.0);
    CHECK(pass.verdict == Verdict::pass);
    CHECK(pass.slack == 1.0);

    const InequalityReport fail = InequalityReport::evaluate("x", 2.0, 1.0);
    CHECK(fail.verdict == Verdict::fail);

    // negative-but-within-band slack still passes
    const InequalityReport band =
        InequalityReport::evaluate("x", complex_t(1.0 + 1e-13, 0.0), 1.0);
    CHECK(band.verdict == Verdict::pass);

    // an imaginary residual beyond the band is a hard failure even with
    // positive slack
    const InequalityReport imag =
        InequalityReport::evaluate("x", complex_t(1.0, 1e-3), complex_t(2.0, 0.0));
    CHECK(imag.verdict == Verdict::fail);
    CHECK(imag.imag_residual == doctest::Approx(1e-3));

    const InequalityReport degen = InequalityReport::degenerate_case("x", 2.0, 1.0);
    CHECK(degen.verdict == Verdict::degenerate);
}
