#include "traceineq/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "traceineq/errors.hpp"

namespace traceineq {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "degenerate") return Verdict::degenerate;
    throw InvalidInput("unknown verdict: " + s);
}

namespace {

InequalityReport build(std::string name, complex_t lhs, complex_t rhs, double tol_factor) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs.real() - lhs.real();
    r.imag_residual = std::max(std::abs(lhs.imag()), std::abs(rhs.imag()));
    r.tol = tol_factor * std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return r;
}

}  // namespace

InequalityReport InequalityReport::evaluate(std::string name, complex_t lhs, complex_t rhs,
                                            double tol_factor) {
    InequalityReport r = build(std::move(name), lhs, rhs, tol_factor);
    r.verdict =
        (r.slack >= -r.tol && r.imag_residual <= r.tol) ? Verdict::pass : Verdict::fail;
    return r;
}

InequalityReport InequalityReport::degenerate_case(std::string name, complex_t lhs,
                                                   complex_t rhs, double tol_factor) {
    InequalityReport r = build(std::move(name), lhs, rhs, tol_factor);
    r.verdict = Verdict::degenerate;
    return r;
}

}  // namespace traceineq
