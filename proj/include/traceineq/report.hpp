#pragma once

#include <string>

#include "traceineq/complex_matrix.hpp"

namespace traceineq {

// Default verdict band: tol = 1e-9 * max(|lhs|, |rhs|, 1). The inequalities
// are exact statements; the band absorbs roundoff only.
inline constexpr double kDefaultTolFactor = 1e-9;

enum class Verdict { pass, fail, degenerate };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// One evaluated inequality instance. `slack` is Re(rhs) - Re(lhs); a pass
// requires slack >= -tol and both imaginary parts within tol. `degenerate`
// marks an instance whose hypothesis failed: no claim is made either way.
struct InequalityReport {
    std::string name;
    complex_t lhs{};
    complex_t rhs{};
    double slack = 0.0;
    double imag_residual = 0.0;
    double tol = 0.0;
    Verdict verdict = Verdict::degenerate;

    static InequalityReport evaluate(std::string name, complex_t lhs, complex_t rhs,
                                     double tol_factor = kDefaultTolFactor);
    // Same numbers, but the precondition did not hold; verdict is pinned to
    // degenerate regardless of slack.
    static InequalityReport degenerate_case(std::string name, complex_t lhs, complex_t rhs,
                                            double tol_factor = kDefaultTolFactor);
};

}  // namespace traceineq
