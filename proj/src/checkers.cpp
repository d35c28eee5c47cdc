#include "traceineq/checkers.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "traceineq/errors.hpp"

namespace traceineq {

namespace detail {

complex_t chain_raw(const PsdMatrix& t, const ComplexMatrix& a, std::span<const double> exps) {
    if (t.dim() != a.dim()) throw DimensionMismatch("trace chain: T and A dims differ");
    ComplexMatrix acc = ComplexMatrix::identity(t.dim());
    for (double e : exps) acc = matmul(matmul(acc, psd_power_matrix(t, e)), a);
    return trace(acc);
}

complex_t trace_psd_power(const ComplexMatrix& m, double e) {
    const int n = m.dim();
    if (e == std::floor(e) && e >= 0.0 && e <= 64.0) {
        const int k = static_cast<int>(e);
        if (k == 0) return complex_t(n, 0.0);
        ComplexMatrix acc = m;
        for (int i = 1; i < k; ++i) acc = matmul(acc, m);
        return trace(acc);
    }
    const PsdMatrix psd{HermitianMatrix(m)};
    double s = 0.0;
    for (double lam : psd.decomposition().eigenvalues) s += clamped_pow(lam, e);
    return complex_t(s, 0.0);
}

}  // namespace detail

complex_t trace_chain(const PsdMatrix& t, const HermitianMatrix& a, const WeightVector& w) {
    return detail::chain_raw(t, a.matrix(), w.values());
}

namespace {

// Grouped as Tr[(F L) (G L)] so the f = g case hits bit-identical products
// on both sides of the propositions.
complex_t trace_flgl(const ComplexMatrix& fl, const ComplexMatrix& gl) {
    return trace(matmul(fl, gl));
}

struct FgMatrices {
    ComplexMatrix f_of_a;
    ComplexMatrix g_of_a;
};

FgMatrices apply_fg(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a) {
    const SpectralDecomposition d = hermitian_eig(a);
    return {matrix_function(d, f).matrix(), matrix_function(d, g).matrix()};
}

}  // namespace

InequalityReport check_p1(const ScalarFunction& f, const ScalarFunction& g, const PsdMatrix& l,
                          const HermitianMatrix& a, double tol_factor) {
    auto [fa, ga] = apply_fg(f, g, a);
    const ComplexMatrix fl = matmul(fa, l.matrix());
    const ComplexMatrix gl = matmul(ga, l.matrix());
    const complex_t lhs = trace_flgl(fl, gl);
    const complex_t rhs = 0.5 * (trace_flgl(fl, fl) + trace_flgl(gl, gl));
    return InequalityReport::evaluate("p1", lhs, rhs, tol_factor);
}

InequalityReport check_p2(const ScalarFunction& f, const ScalarFunction& g,
                          const HermitianMatrix& l, const HermitianMatrix& a,
                          double tol_factor) {
    auto [fa, ga] = apply_fg(f, g, a);
    const ComplexMatrix fl = matmul(fa, l.matrix());
    const ComplexMatrix gl = matmul(ga, l.matrix());
    const ComplexMatrix l2 = matmul(l.matrix(), l.matrix());
    const complex_t lhs = trace_flgl(fl, gl);
    const complex_t rhs =
        0.5 * (trace(matmul(matmul(fa, fa), l2)) + trace(matmul(matmul(ga, ga), l2)));
    return InequalityReport::evaluate("p2", lhs, rhs, tol_factor);
}

InequalityReport check_rhs_order(const ScalarFunction& f, const ScalarFunction& g,
                                 const HermitianMatrix& l, const HermitianMatrix& a,
                                 double tol_factor) {
    auto [fa, ga] = apply_fg(f, g, a);
    const ComplexMatrix fl = matmul(fa, l.matrix());
    const ComplexMatrix gl = matmul(ga, l.matrix());
    const ComplexMatrix l2 = matmul(l.matrix(), l.matrix());
    const complex_t lhs = 0.5 * (trace_flgl(fl, fl) + trace_flgl(gl, gl));
    const complex_t rhs =
        0.5 * (trace(matmul(matmul(fa, fa), l2)) + trace(matmul(matmul(ga, ga), l2)));
    return InequalityReport::evaluate("rhs_order", lhs, rhs, tol_factor);
}

InequalityReport check_ordered_fg(const ScalarFunction& f, const ScalarFunction& g,
                                  const HermitianMatrix& l, const HermitianMatrix& a,
                                  double tol_factor) {
    const SpectralDecomposition d = hermitian_eig(a);
    bool leq = true, geq = true;
    for (double lam : d.eigenvalues) {
        const double fv = f(lam), gv = g(lam);
        const double band = 1e-12 * (std::abs(fv) + std::abs(gv) + 1.0);
        if (fv > gv + band) leq = false;
        if (fv < gv - band) geq = false;
    }
    const ComplexMatrix fa = matrix_function(d, f).matrix();
    const ComplexMatrix ga = matrix_function(d, g).matrix();
    const ComplexMatrix fl = matmul(fa, l.matrix());
    const ComplexMatrix gl = matmul(ga, l.matrix());
    const complex_t lhs = trace_flgl(fl, gl);
    const complex_t rhs = 0.5 * (trace_flgl(fl, fl) + trace_flgl(gl, gl));
    if (!leq && !geq)
        return InequalityReport::degenerate_case("ordered_fg", lhs, rhs, tol_factor);
    return InequalityReport::evaluate("ordered_fg", lhs, rhs, tol_factor);
}

InequalityReport check_araki(const PsdMatrix& x, const PsdMatrix& y, double r, double p,
                             double tol_factor) {
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidInput("araki: r must lie in [0, 1]");
    if (!(p > 0.0)) throw InvalidInput("araki: p must be positive");
    if (x.dim() != y.dim()) throw DimensionMismatch("araki: X and Y dims differ");

    const ComplexMatrix yr2 = detail::psd_power_matrix(y, r / 2.0);
    const ComplexMatrix xr = detail::psd_power_matrix(x, r);
    const ComplexMatrix inner = matmul(matmul(yr2, xr), yr2);
    const complex_t lhs = detail::trace_psd_power(inner, p);

    const ComplexMatrix y12 = detail::psd_power_matrix(y, 0.5);
    const ComplexMatrix outer = matmul(matmul(y12, x.matrix()), y12);
    const complex_t rhs = detail::trace_psd_power(outer, r * p);
    return InequalityReport::evaluate("araki", lhs, rhs, tol_factor);
}

InequalityReport check_power_chain_m(const PsdMatrix& t, const PsdMatrix& a, int m,
                                     double tol_factor) {
    if (m < 1) throw InvalidInput("power chain: m must be >= 1");
    if (t.dim() != a.dim()) throw DimensionMismatch("power chain: T and A dims differ");
    const complex_t lhs =
        detail::chain_raw(t, a.matrix(), WeightVector::uniform(m).values());
    ComplexMatrix am = a.matrix();
    for (int i = 1; i < m; ++i) am = matmul(am, a.matrix());
    const complex_t rhs = trace(matmul(t.matrix(), am));
    return InequalityReport::evaluate("power_chain_m", lhs, rhs, tol_factor);
}

BoundPair check_alpha_interp(const PsdMatrix& t, const HermitianMatrix& a, double alpha,
                             double tol_factor) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in [0, 1]");
    if (t.dim() != a.dim()) throw DimensionMismatch("alpha interp: T and A dims differ");
    const double half[] = {0.5, 0.5};
    const double split[] = {alpha, 1.0 - alpha};
    const complex_t lower_lhs = detail::chain_raw(t, a.matrix(), half);
    const complex_t mid = detail::chain_raw(t, a.matrix(), split);
    const complex_t upper_rhs =
        trace(matmul(matmul(t.matrix(), a.matrix()), a.matrix()));
    return {InequalityReport::evaluate("alpha_interp_lower", lower_lhs, mid, tol_factor),
            InequalityReport::evaluate("alpha_interp_upper", mid, upper_rhs, tol_factor)};
}

InequalityReport check_bourin_fujii(const ScalarFunction& f, const ScalarFunction& g,
                                    const HermitianMatrix& a, const HermitianMatrix& x,
                                    bool aligned, double tol_factor) {
    const SpectralDecomposition d = hermitian_eig(a);
    const std::size_t n = d.eigenvalues.size();
    bool hypothesis = true;
    for (std::size_t i = 0; i < n && hypothesis; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double fi = f(d.eigenvalues[i]), fj = f(d.eigenvalues[j]);
            const double gi = g(d.eigenvalues[i]), gj = g(d.eigenvalues[j]);
            const double prod = (fi - fj) * (gi - gj);
            const double band =
                1e-12 * ((std::abs(fi) + std::abs(fj)) * (std::abs(gi) + std::abs(gj)) + 1.0);
            if (aligned ? prod < -band : prod > band) {
                hypothesis = false;
                break;
            }
        }
    const ComplexMatrix fa = matrix_function(d, f).matrix();
    const ComplexMatrix ga = matrix_function(d, g).matrix();
    const complex_t mixed =
        trace(matmul(matmul(fa, x.matrix()), matmul(ga, x.matrix())));
    const complex_t product =
        trace(matmul(matmul(fa, ga), matmul(x.matrix(), x.matrix())));
    const complex_t lhs = aligned ? mixed : product;
    const complex_t rhs = aligned ? product : mixed;
    if (!hypothesis)
        return InequalityReport::degenerate_case("bourin_fujii", lhs, rhs, tol_factor);
    return InequalityReport::evaluate("bourin_fujii", lhs, rhs, tol_factor);
}

BoundPair check_thm_2x2(const PsdMatrix& t, const PsdMatrix& a, const WeightVector& w,
                        double tol_factor) {
    if (t.dim() != 2 || a.dim() != 2)
        throw DimensionMismatch("thm_2x2 requires dimension exactly 2");
    const int m = w.m();
    const complex_t chain = trace_chain(t, a.hermitian(), w);
    const complex_t power_chain =
        detail::chain_raw(t, a.matrix(), WeightVector::uniform(m).values());
    ComplexMatrix am = a.matrix();
    for (int i = 1; i < m; ++i) am = matmul(am, a.matrix());
    const complex_t upper_rhs = trace(matmul(t.matrix(), am));
    return {InequalityReport::evaluate("thm_2x2_lower", power_chain, chain, tol_factor),
            InequalityReport::evaluate("thm_2x2_upper", chain, upper_rhs, tol_factor)};
}

AmGm amgm_weighted(std::span<const double> a, const WeightVector& p) {
    if (static_cast<int>(a.size()) != p.m())
        throw DimensionMismatch("amgm: value and weight counts differ");
    double geo = 1.0, arith = 0.0;
    for (int i = 0; i < p.m(); ++i) {
        const double ai = a[static_cast<std::size_t>(i)];
        if (!(ai > 0.0)) throw NonPositiveInput("amgm: values must be strictly positive");
        geo *= std::pow(ai, p[i]);
        arith += p[i] * ai;
    }
    return {geo, arith};
}

}  // namespace traceineq
