#include "traceineq/json_io.hpp"

#include <fstream>

#include "traceineq/errors.hpp"

namespace traceineq {

namespace {

nlohmann::json complex_to_json(complex_t z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

complex_t complex_from_json(const nlohmann::json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    const int n = m.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (int j = 0; j < n; ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return nlohmann::json{{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
        throw InvalidInput("matrix json must be {\"dim\", \"re\", \"im\"}");
    const int n = j.at("dim").get<int>();
    if (n < 1 || n > ComplexMatrix::kMaxDim)
        throw InvalidInput("matrix json: dim outside supported range");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(n) ||
        im.size() != static_cast<std::size_t>(n))
        throw InvalidInput("matrix json: re/im must be dim x dim arrays");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& re_row = re.at(static_cast<std::size_t>(i));
        const auto& im_row = im.at(static_cast<std::size_t>(i));
        if (re_row.size() != static_cast<std::size_t>(n) ||
            im_row.size() != static_cast<std::size_t>(n))
            throw InvalidInput("matrix json: re/im must be dim x dim arrays");
        for (int k = 0; k < n; ++k)
            m(i, k) = complex_t(re_row.at(static_cast<std::size_t>(k)).get<double>(),
                                im_row.at(static_cast<std::size_t>(k)).get<double>());
    }
    if (!m.all_finite()) throw InvalidInput("matrix json: non-finite entry");
    return m;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed json in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write matrix file: " + path);
    out << matrix_to_json(m).dump(2) << '\n';
}

nlohmann::json report_to_json(const InequalityReport& r) {
    return nlohmann::json{{"name", r.name},
                          {"lhs", complex_to_json(r.lhs)},
                          {"rhs", complex_to_json(r.rhs)},
                          {"slack", r.slack},
                          {"imag_residual", r.imag_residual},
                          {"tol", r.tol},
                          {"verdict", to_string(r.verdict)}};
}

InequalityReport report_from_json(const nlohmann::json& j) {
    InequalityReport r;
    r.name = j.at("name").get<std::string>();
    r.lhs = complex_from_json(j.at("lhs"));
    r.rhs = complex_from_json(j.at("rhs"));
    r.slack = j.at("slack").get<double>();
    r.imag_residual = j.at("imag_residual").get<double>();
    r.tol = j.at("tol").get<double>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    return r;
}

nlohmann::json checker_row_to_json(const CheckerRow& row) {
    nlohmann::json j = report_to_json(row.worst);
    j["name"] = row.name;
    j["samples"] = row.samples;
    j["fails"] = row.fails;
    j["degenerates"] = row.degenerates;
    j["min_slack"] = row.min_slack;
    j["max_imag_residual"] = row.max_imag_residual;
    return j;
}

nlohmann::json search_report_to_json(const SearchReport& rep) {
    nlohmann::json j{{"conjecture", to_string(rep.conjecture)},
                     {"n", rep.n},
                     {"m", rep.m},
                     {"samples", rep.samples},
                     {"violations", rep.violations},
                     {"errors", rep.errors},
                     {"min_slack", rep.min_slack},
                     {"seed", rep.seed.value},
                     {"elapsed_seconds", rep.elapsed_seconds}};
    if (rep.worst) j["worst_instance"] = worst_instance_to_json(rep);
    return j;
}

nlohmann::json worst_instance_to_json(const SearchReport& rep) {
    if (!rep.worst) throw InvalidInput("search report has no worst instance");
    const WorstInstance& w = *rep.worst;
    return nlohmann::json{{"conjecture", to_string(rep.conjecture)},
                          {"seed", rep.seed.value},
                          {"sample_index", w.sample_index},
                          {"T", matrix_to_json(w.t)},
                          {"A", matrix_to_json(w.a)},
                          {"weights", w.weights},
                          {"slack", w.slack},
                          {"chain", complex_to_json(w.chain)}};
}

}  // namespace traceineq
