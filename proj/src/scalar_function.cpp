#include "traceineq/scalar_function.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "traceineq/errors.hpp"

namespace traceineq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonneg_integer(double p) { return p >= 0.0 && p == std::floor(p); }
}  // namespace

ScalarFunction::ScalarFunction(std::string name, double lo, double hi,
                               std::function<double(double)> fn)
    : name_(std::move(name)), lo_(lo), hi_(hi), fn_(std::move(fn)) {}

ScalarFunction ScalarFunction::identity() {
    return {"identity", -kInf, kInf, [](double x) { return x; }};
}

ScalarFunction ScalarFunction::constant(double c) {
    return {"const(" + std::to_string(c) + ")", -kInf, kInf, [c](double) { return c; }};
}

ScalarFunction ScalarFunction::power(double p) {
    if (!(p >= 0.0)) throw InvalidInput("power(p): p must be >= 0, got " + std::to_string(p));
    const std::string name = "power(" + std::to_string(p) + ")";
    if (is_nonneg_integer(p)) {
        return {name, -kInf, kInf, [p](double x) {
                    if (x == 0.0) return p == 0.0 ? 1.0 : 0.0;
                    return std::pow(x, p);
                }};
    }
    return {name, -kPowerDomainSlack, kInf, [p](double x) {
                if (x <= 0.0) return 0.0;  // clamping band and the 0^p = 0 rule
                return std::pow(x, p);
            }};
}

ScalarFunction ScalarFunction::affine(double a, double b) {
    return {"affine(" + std::to_string(a) + "," + std::to_string(b) + ")", -kInf, kInf,
            [a, b](double x) { return a * x + b; }};
}

ScalarFunction ScalarFunction::custom(std::string name, double lo, double hi,
                                      std::function<double(double)> fn) {
    return {std::move(name), lo, hi, std::move(fn)};
}

double ScalarFunction::operator()(double x) const {
    if (!in_domain(x))
        throw DomainViolation(name_ + ": argument " + std::to_string(x) +
                              " outside domain [" + std::to_string(lo_) + ", " +
                              std::to_string(hi_) + "]");
    return fn_(x);
}

}  // namespace traceineq
