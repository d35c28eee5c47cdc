#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traceineq/report.hpp"
#include "traceineq/sampling.hpp"

namespace traceineq {

struct VerifyConfig {
    std::vector<int> dims{2, 3, 4};
    std::uint64_t samples = 1000;
    Seed seed;
    double tol_factor = kDefaultTolFactor;
};

// Aggregate over one checker's samples. `worst` is the untouched report of
// the minimum-slack sample.
struct CheckerRow {
    std::string name;
    std::uint64_t samples = 0;
    std::uint64_t fails = 0;
    std::uint64_t degenerates = 0;
    double min_slack = 0.0;
    double max_imag_residual = 0.0;
    InequalityReport worst;
};

// Runs the randomized property suite: the nine inequality checkers plus one
// combined `lemmas` row (cycle phase product, arc parity, weighted AM-GM.)
// Rows come back sorted by name. A clean suite has fails == 0 everywhere;
// degenerate samples are hypothesis misses, not failures.
std::vector<CheckerRow> run_verify_suite(const VerifyConfig& config);

}  // namespace traceineq
