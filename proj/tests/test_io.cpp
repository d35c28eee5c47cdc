#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "traceineq/errors.hpp"
#include "traceineq/json_io.hpp"
#include "traceineq/sampling.hpp"

using namespace traceineq;

TEST_CASE("matrix json round-trips bit-exactly") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const ComplexMatrix m = sample_hermitian(3, Seed{s}).matrix();
        const nlohmann::json j = matrix_to_json(m);
        const ComplexMatrix back = matrix_from_json(j);
        CHECK(back == m);
        // through text as well: dump then reparse
        const ComplexMatrix back2 = matrix_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back2 == m);
    }
}

TEST_CASE("matrix json carries full precision through text") {
    ComplexMatrix m(2);
    m(0, 0) = complex_t(1.0 / 3.0, -2.0 / 7.0);
    m(0, 1) = complex_t(1e-300, 116.03674351228129);
    m(1, 0) = complex_t(0.1, 0.2);
    m(1, 1) = complex_t(-5.5511151231257827e-17, 0.0);
    const std::string text = matrix_to_json(m).dump();
    CHECK(matrix_from_json(nlohmann::json::parse(text)) == m);
}

TEST_CASE("matrix json schema is validated") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim": 2, "re": [[1,0]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(
                        R"({"dim": 2, "re": [[1,0],[0,1]], "im": [[0,0]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim": 0, "re": [], "im": []})")),
                    InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[1, 2, 3]")), InvalidInput);
}

TEST_CASE("matrix files save and load") {
    const std::string path = "io_test_matrix.json";
    const ComplexMatrix m = sample_psd(4, Seed{33}).matrix();
    save_matrix(path, m);
    CHECK(load_matrix(path) == m);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_matrix("does_not_exist.json"), InvalidInput);

    std::ofstream bad("io_test_bad.json");
    bad << "{ not json";
    bad.close();
    CHECK_THROWS_AS(load_matrix("io_test_bad.json"), InvalidInput);
    std::remove("io_test_bad.json");
}

TEST_CASE("report json carries the exact schema and round-trips") {
    const InequalityReport r =
        InequalityReport::evaluate("p1", complex_t(1.25, 1e-13), complex_t(2.5, -3e-14));
    const nlohmann::json j = report_to_json(r);
    for (const char* key :
         {"name", "lhs", "rhs", "slack", "imag_residual", "tol", "verdict"})
        CHECK(j.contains(key));
    CHECK(j["lhs"].contains("re"));
    CHECK(j["lhs"].contains("im"));
    const InequalityReport back = report_from_json(j);
    CHECK(back.name == r.name);
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.slack == r.slack);
    CHECK(back.imag_residual == r.imag_residual);
    CHECK(back.tol == r.tol);
    CHECK(back.verdict == r.verdict);
}

TEST_CASE("worst-instance json follows the persistence schema") {
    const SearchReport rep = run_search(Conjecture::ii, 3, 3, 50, Seed{3});
    REQUIRE(rep.worst.has_value());
    const nlohmann::json j = worst_instance_to_json(rep);
    for (const char* key :
         {"conjecture", "seed", "sample_index", "T", "A", "weights", "slack", "chain"})
        CHECK(j.contains(key));
    CHECK(j["chain"].contains("re"));
    CHECK(j["chain"].contains("im"));
    // matrices inside are loadable and match the recorded instance
    CHECK(matrix_from_json(j["T"]) == rep.worst->t);
    CHECK(matrix_from_json(j["A"]) == rep.worst->a);
}
