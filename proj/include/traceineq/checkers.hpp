#pragma once

#include <span>

#include "traceineq/report.hpp"
#include "traceineq/scalar_function.hpp"
#include "traceineq/spectral.hpp"
#include "traceineq/weights.hpp"

namespace traceineq {

// Tr[T^{p_1} A T^{p_2} A ... T^{p_m} A]. Every power comes from the one
// cached decomposition of T. The value is genuinely complex in general for
// n >= 3; at n = 2 it is real up to roundoff.
complex_t trace_chain(const PsdMatrix& t, const HermitianMatrix& a, const WeightVector& w);

// Tr[f(A) L g(A) L] <= 1/2 Tr[(f(A)L)^2 + (g(A)L)^2], L PSD, A Hermitian,
// any real-valued f, g on the spectrum of A.
InequalityReport check_p1(const ScalarFunction& f, const ScalarFunction& g, const PsdMatrix& l,
                          const HermitianMatrix& a, double tol_factor = kDefaultTolFactor);

// Tr[f(A) L g(A) L] <= 1/2 Tr[f(A)^2 L^2 + g(A)^2 L^2]; L only Hermitian.
InequalityReport check_p2(const ScalarFunction& f, const ScalarFunction& g,
                          const HermitianMatrix& l, const HermitianMatrix& a,
                          double tol_factor = kDefaultTolFactor);

// The right-hand sides of the two propositions are themselves ordered:
// 1/2 Tr[(f(A)L)^2 + (g(A)L)^2] <= 1/2 Tr[f(A)^2 L^2 + g(A)^2 L^2].
InequalityReport check_rhs_order(const ScalarFunction& f, const ScalarFunction& g,
                                 const HermitianMatrix& l, const HermitianMatrix& a,
                                 double tol_factor = kDefaultTolFactor);

// The squared bound of check_p1 with L merely Hermitian, valid when f <= g
// or f >= g pointwise. The ordering is verified on the realized spectrum of
// A; if it fails the verdict is degenerate (hypothesis unmet, not a
// counterexample).
InequalityReport check_ordered_fg(const ScalarFunction& f, const ScalarFunction& g,
                                  const HermitianMatrix& l, const HermitianMatrix& a,
                                  double tol_factor = kDefaultTolFactor);

// Araki: Tr[(Y^{r/2} X^r Y^{r/2})^p] <= Tr[(Y^{1/2} X Y^{1/2})^{rp}] for
// PSD X, Y, p > 0, 0 <= r <= 1. Integer outer exponents use repeated
// multiplication, fractional ones the spectral power of the PSD congruence.
InequalityReport check_araki(const PsdMatrix& x, const PsdMatrix& y, double r, double p,
                             double tol_factor = kDefaultTolFactor);

// Tr[(T^{1/m} A)^m] <= Tr[T A^m] for PSD T, A and natural m.
InequalityReport check_power_chain_m(const PsdMatrix& t, const PsdMatrix& a, int m,
                                     double tol_factor = kDefaultTolFactor);

struct BoundPair {
    InequalityReport lower;
    InequalityReport upper;
};

// Tr[(T^{1/2} A)^2] <= Tr[T^alpha A T^{1-alpha} A] <= Tr[T A^2] for PSD T,
// Hermitian A, alpha in [0, 1]. The middle term is a length-2 chain and must
// be real to tolerance at any dimension.
BoundPair check_alpha_interp(const PsdMatrix& t, const HermitianMatrix& a, double alpha,
                             double tol_factor = kDefaultTolFactor);

// Bourin/Fujii: if (f(a)-f(b))(g(a)-g(b)) >= 0 pairwise on the spectrum then
// Tr[f(A) X g(A) X] <= Tr[f(A) g(A) X^2]; the anti-aligned case reverses the
// inequality. The alignment hypothesis is verified on the realized spectrum;
// violation yields a degenerate verdict.
InequalityReport check_bourin_fujii(const ScalarFunction& f, const ScalarFunction& g,
                                    const HermitianMatrix& a, const HermitianMatrix& x,
                                    bool aligned, double tol_factor = kDefaultTolFactor);

// The 2x2 theorem: Tr[(T^{1/m}A)^m] <= Tr[T^{p_1}A...T^{p_m}A] <= Tr[TA^m]
// for PSD T, A in dimension exactly 2. A chain imaginary part beyond
// tolerance is a hard failure here: the phase-product lemma guarantees a
// real chain at n = 2.
BoundPair check_thm_2x2(const PsdMatrix& t, const PsdMatrix& a, const WeightVector& w,
                        double tol_factor = kDefaultTolFactor);

struct AmGm {
    double geometric;
    double arithmetic;
};

// Weighted arithmetic-geometric mean pair for positive values: the scalar
// lemma driving the 2x2 proof. geometric <= arithmetic, with equality iff
// all values coincide.
AmGm amgm_weighted(std::span<const double> a, const WeightVector& p);

namespace detail {

// Tr[P^{e_1} A P^{e_2} A ... P^{e_k} A] with arbitrary exponents >= 0
// (zeros allowed, unlike WeightVector).
complex_t chain_raw(const PsdMatrix& t, const ComplexMatrix& a, std::span<const double> exps);

// Tr[M^e] for a Hermitian-to-roundoff PSD product M: repeated multiplication
// for integer e, eigenvalue-power sum otherwise.
complex_t trace_psd_power(const ComplexMatrix& m, double e);

}  // namespace detail

}  // namespace traceineq
