#pragma once

#include <vector>

namespace traceineq {

// Positive weights p_1..p_m summing to 1 (within 1e-12). The alpha of the
// two-term interpolation is the m = 2 case (alpha, 1 - alpha).
class WeightVector {
  public:
    static constexpr double kSumTol = 1e-12;

    explicit WeightVector(std::vector<double> weights);

    static WeightVector uniform(int m);

    int m() const { return static_cast<int>(w_.size()); }
    double operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return w_; }

  private:
    std::vector<double> w_;
};

}  // namespace traceineq
