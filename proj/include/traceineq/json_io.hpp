#pragma once

#include <string>

#include <json.hpp>

#include "traceineq/complex_matrix.hpp"
#include "traceineq/report.hpp"
#include "traceineq/search.hpp"
#include "traceineq/suite.hpp"

namespace traceineq {

// Matrix file format: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
// Numbers are emitted at full round-trip precision; parse(emit(x)) == x.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

// {"name", "lhs": {"re","im"}, "rhs": {"re","im"}, "slack",
//  "imag_residual", "tol", "verdict"}
nlohmann::json report_to_json(const InequalityReport& r);
InequalityReport report_from_json(const nlohmann::json& j);

nlohmann::json checker_row_to_json(const CheckerRow& row);

nlohmann::json search_report_to_json(const SearchReport& rep);

// The persisted violation / worst-instance file:
// {"conjecture", "seed", "sample_index", "T", "A", "weights", "slack",
//  "chain": {"re","im"}}
nlohmann::json worst_instance_to_json(const SearchReport& rep);

}  // namespace traceineq
