#include "traceineq/weights.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "traceineq/errors.hpp"

namespace traceineq {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw InvalidInput("weight vector must have m >= 1");
    double sum = 0.0;
    for (double p : w_) {
        if (!(p > 0.0)) throw InvalidInput("weights must be strictly positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw InvalidInput("weights sum to " + std::to_string(sum) + ", expected 1");
}

WeightVector WeightVector::uniform(int m) {
    if (m < 1) throw InvalidInput("uniform weights need m >= 1");
    return WeightVector(std::vector<double>(static_cast<std::size_t>(m), 1.0 / m));
}

}  // namespace traceineq
