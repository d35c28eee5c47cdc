#pragma once

#include <functional>
#include <string>

namespace traceineq {

// A real scalar function with a declared domain [lo, hi]. These are the f, g
// applied to Hermitian spectra through the spectral calculus.
//
// power(p) follows the convention 0^p = 0 for p > 0 and 0^0 = 1. For
// non-integer p the domain is extended a hair below zero
// (lo = -kPowerDomainSlack) and arguments in that band evaluate as 0, so that
// eigenvalues of PSD matrices that round off to -1e-16 do not trip a
// domain error.
class ScalarFunction {
  public:
    static constexpr double kPowerDomainSlack = 1e-12;

    static ScalarFunction identity();
    static ScalarFunction constant(double c);
    static ScalarFunction power(double p);             // requires p >= 0
    static ScalarFunction affine(double a, double b);  // a*x + b
    static ScalarFunction custom(std::string name, double lo, double hi,
                                 std::function<double(double)> fn);

    // Evaluate. Throws DomainViolation outside [lo, hi].
    double operator()(double x) const;

    bool in_domain(double x) const { return x >= lo_ && x <= hi_; }
    const std::string& name() const { return name_; }
    double domain_lo() const { return lo_; }
    double domain_hi() const { return hi_; }

  private:
    ScalarFunction(std::string name, double lo, double hi, std::function<double(double)> fn);

    std::string name_;
    double lo_;
    double hi_;
    std::function<double(double)> fn_;
};

}  // namespace traceineq
