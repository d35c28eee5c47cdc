// traceineq: verify the trace inequalities, reproduce the 3x3 complex-chain
// instance, run randomized conjecture searches, and evaluate chains on
// user-supplied matrices.
//
// Exit codes: 0 pass, 1 fail verdict / golden mismatch, 2 configuration or
// input error, 3 conjecture violation found (a finding, not a failure).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "traceineq/errors.hpp"
#include "traceineq/json_io.hpp"
#include "traceineq/search.hpp"
#include "traceineq/suite.hpp"

using namespace traceineq;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFinding = 3;

Seed parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(text, &used, 0);  // decimal or 0x-hex
        if (used != text.size()) throw InvalidInput("trailing characters in seed: " + text);
        return Seed{v};
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse seed: " + text);
    }
}

std::string default_seed_text() {
    if (const char* env = std::getenv("TRACE_INEQ_SEED")) return env;
    return "0";
}

// weights accept plain decimals and a/b fractions: "1/6,1/3,0.5"
std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw InvalidInput("empty weight token");
        try {
            const std::size_t slash = tok.find('/');
            if (slash == std::string::npos) {
                out.push_back(std::stod(tok));
            } else {
                const double den = std::stod(tok.substr(slash + 1));
                if (den == 0.0) throw InvalidInput("zero denominator");
                out.push_back(std::stod(tok.substr(0, slash)) / den);
            }
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse weight: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    std::fputs(text.c_str(), stdout);
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw InvalidInput("cannot write output file: " + output_path);
        out << text;
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(complex_t z) {
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

// ---- verify ---------------------------------------------------------------

std::string verify_text(const std::vector<CheckerRow>& rows) {
    std::string s;
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %9s %6s %6s %-24s %-13s %s\n", "checker", "samples",
                  "fails", "degen", "min slack", "max |imag|", "verdict");
    s += line;
    for (const CheckerRow& r : rows) {
        std::snprintf(line, sizeof line, "%-14s %9llu %6llu %6llu %-24.17g %-13.3g %s\n",
                      r.name.c_str(), static_cast<unsigned long long>(r.samples),
                      static_cast<unsigned long long>(r.fails),
                      static_cast<unsigned long long>(r.degenerates), r.min_slack,
                      r.max_imag_residual, r.fails == 0 ? "pass" : "FAIL");
        s += line;
    }
    return s;
}

std::string verify_csv(const std::vector<CheckerRow>& rows) {
    std::string s =
        "name,samples,fails,degenerates,min_slack,max_imag_residual,"
        "lhs_re,lhs_im,rhs_re,rhs_im,slack,imag_residual,tol,verdict\n";
    for (const CheckerRow& r : rows) {
        s += r.name + ',' + std::to_string(r.samples) + ',' + std::to_string(r.fails) + ',' +
             std::to_string(r.degenerates) + ',' + fmt(r.min_slack) + ',' +
             fmt(r.max_imag_residual) + ',' + fmt(r.worst.lhs.real()) + ',' +
             fmt(r.worst.lhs.imag()) + ',' + fmt(r.worst.rhs.real()) + ',' +
             fmt(r.worst.rhs.imag()) + ',' + fmt(r.worst.slack) + ',' +
             fmt(r.worst.imag_residual) + ',' + fmt(r.worst.tol) + ',' +
             to_string(r.worst.verdict) + '\n';
    }
    return s;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& format,
               const std::string& output_path) {
    const std::vector<CheckerRow> rows = run_verify_suite(cfg);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckerRow& r : rows) arr.push_back(checker_row_to_json(r));
        emit(arr.dump(2) + "\n", output_path);
    } else if (format == "csv") {
        emit(verify_csv(rows), output_path);
    } else {
        emit(verify_text(rows), output_path);
    }
    for (const CheckerRow& r : rows)
        if (r.fails > 0) return kExitFail;
    return kExitPass;
}

// ---- counterexample -------------------------------------------------------

int cmd_counterexample(const std::string& format, const std::string& t_path,
                       const std::string& a_path, const std::string& output_path) {
    CounterexampleInstance inst = counterexample_instance();
    if (!t_path.empty()) inst.t = PsdMatrix(HermitianMatrix(load_matrix(t_path)));
    if (!a_path.empty()) inst.a = PsdMatrix(HermitianMatrix(load_matrix(a_path)));
    const complex_t chain = trace_chain(inst.t, inst.a.hermitian(), inst.w);
    const bool pass =
        std::abs(chain.real() - kCounterexampleGoldenRe) <= kCounterexampleTolRe &&
        std::abs(chain.imag() - kCounterexampleGoldenIm) <= kCounterexampleTolIm;

    if (format == "json") {
        const nlohmann::json j{{"re", chain.real()},
                               {"im", chain.imag()},
                               {"golden_re", kCounterexampleGoldenRe},
                               {"golden_im", kCounterexampleGoldenIm},
                               {"pass", pass}};
        emit(j.dump(2) + "\n", output_path);
    } else if (format == "csv") {
        emit("re,im,golden_re,golden_im,pass\n" + fmt(chain.real()) + ',' + fmt(chain.imag()) +
                 ',' + fmt(kCounterexampleGoldenRe) + ',' + fmt(kCounterexampleGoldenIm) + ',' +
                 (pass ? "true" : "false") + '\n',
             output_path);
    } else {
        std::string s;
        s += "Tr[T^{1/6} A T^{1/3} A T^{1/2} A] = " + fmt(chain) + "\n";
        s += "golden                            = " + fmt(kCounterexampleGoldenRe) + " + " +
             fmt(kCounterexampleGoldenIm) + "i  (tol " + fmt(kCounterexampleTolRe) + ", " +
             fmt(kCounterexampleTolIm) + ")\n";
        s += pass ? "PASS\n" : "FAIL\n";
        emit(s, output_path);
    }
    return pass ? kExitPass : kExitFail;
}

// ---- search ---------------------------------------------------------------

int cmd_search(Conjecture which, int n, int m, std::uint64_t samples, Seed seed,
               const SearchOptions& opts, const std::string& format,
               const std::string& output_path) {
    const SearchReport rep = run_search(which, n, m, samples, seed, opts);

    if (format == "json") {
        std::fputs((search_report_to_json(rep).dump(2) + "\n").c_str(), stdout);
    } else if (format == "csv") {
        std::string s = "conjecture,n,m,samples,violations,errors,min_slack,seed\n";
        s += to_string(rep.conjecture) + ',' + std::to_string(rep.n) + ',' +
             std::to_string(rep.m) + ',' + std::to_string(rep.samples) + ',' +
             std::to_string(rep.violations) + ',' + std::to_string(rep.errors) + ',' +
             fmt(rep.min_slack) + ',' + std::to_string(rep.seed.value) + '\n';
        std::fputs(s.c_str(), stdout);
    } else {
        std::printf("conjecture (%s)  n=%d m=%d  samples=%llu  seed=%llu\n",
                    to_string(rep.conjecture).c_str(), rep.n, rep.m,
                    static_cast<unsigned long long>(rep.samples),
                    static_cast<unsigned long long>(rep.seed.value));
        std::printf("violations = %llu   errors = %llu   min slack = %s   elapsed = %.3fs\n",
                    static_cast<unsigned long long>(rep.violations),
                    static_cast<unsigned long long>(rep.errors), fmt(rep.min_slack).c_str(),
                    rep.elapsed_seconds);
        if (rep.worst)
            std::printf("worst sample index = %llu   chain = %s\n",
                        static_cast<unsigned long long>(rep.worst->sample_index),
                        fmt(rep.worst->chain).c_str());
    }

    const bool violated = rep.violations > 0;
    if (rep.worst && (violated || !output_path.empty())) {
        std::string stem = output_path.empty()
                               ? "violation_" + to_string(rep.conjecture) + "_seed" +
                                     std::to_string(rep.seed.value)
                               : output_path;
        if (stem.ends_with(".json")) stem.resize(stem.size() - 5);
        const std::string inst_path = stem + ".json";
        std::ofstream out(inst_path);
        if (!out) throw InvalidInput("cannot write instance file: " + inst_path);
        out << worst_instance_to_json(rep).dump(2) << '\n';
        save_matrix(stem + "_T.json", rep.worst->t);
        save_matrix(stem + "_A.json", rep.worst->a);
        std::string wtext;
        for (std::size_t i = 0; i < rep.worst->weights.size(); ++i)
            wtext += (i ? "," : "") + fmt(rep.worst->weights[i]);
        std::fprintf(stderr,
                     "%s instance written to %s\n"
                     "replay: traceineq chain --matrix-t %s_T.json --matrix-a %s_A.json "
                     "--weights %s\n",
                     violated ? "VIOLATION" : "worst", inst_path.c_str(), stem.c_str(),
                     stem.c_str(), wtext.c_str());
    }
    return violated ? kExitFinding : kExitPass;
}

// ---- chain ----------------------------------------------------------------

int cmd_chain(const std::string& t_path, const std::string& a_path,
              const std::string& weights_text, const std::string& format,
              const std::string& output_path) {
    const WeightVector w(parse_weights(weights_text));
    const PsdMatrix t{HermitianMatrix(load_matrix(t_path))};
    const HermitianMatrix a{load_matrix(a_path)};
    const complex_t chain = trace_chain(t, a, w);
    const int m = w.m();

    // the Eq-style bracket applies only when A is PSD as well
    std::optional<complex_t> lower, upper;
    try {
        const PsdMatrix apsd{a};
        const InequalityReport pc = check_power_chain_m(t, apsd, m);
        lower = pc.lhs;
        upper = pc.rhs;
    } catch (const NegativeEigenvalue&) {
    }

    if (format == "json") {
        nlohmann::json j{{"m", m}, {"chain", {{"re", chain.real()}, {"im", chain.imag()}}}};
        if (lower) {
            j["lower"] = {{"re", lower->real()}, {"im", lower->imag()}};
            j["upper"] = {{"re", upper->real()}, {"im", upper->imag()}};
        }
        emit(j.dump(2) + "\n", output_path);
    } else if (format == "csv") {
        std::string s = "chain_re,chain_im,lower_re,upper_re\n";
        s += fmt(chain.real()) + ',' + fmt(chain.imag()) + ',' +
             (lower ? fmt(lower->real()) : "") + ',' + (upper ? fmt(upper->real()) : "") + '\n';
        emit(s, output_path);
    } else {
        std::string s = "Tr[chain] (m = " + std::to_string(m) + ") = " + fmt(chain) + "\n";
        if (lower) {
            s += "Tr[(T^{1/m} A)^m]          = " + fmt(lower->real()) + "\n";
            s += "Tr[T A^m]                  = " + fmt(upper->real()) + "\n";
        }
        emit(s, output_path);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace inequality verifier"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string seed_text = default_seed_text();
    std::string output_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--output", output_path);
    };

    auto* verify = app.add_subcommand("verify", "run the randomized property suite");
    std::vector<int> dims{2, 3, 4};
    std::uint64_t samples = 1000;
    double tol_factor = kDefaultTolFactor;
    verify->add_option("--dims", dims, "matrix dimensions to cycle through")
        ->delimiter(',')
        ->check(CLI::Range(2, 64));
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed_text);
    verify->add_option("--tol", tol_factor, "relative verdict tolerance factor")
        ->check(CLI::PositiveNumber);
    add_common(verify);

    auto* cex = app.add_subcommand("counterexample",
                                   "reproduce the published 3x3 complex chain value");
    std::string t_path, a_path;
    cex->add_option("--matrix-t", t_path, "override T from a matrix json file");
    cex->add_option("--matrix-a", a_path, "override A from a matrix json file");
    add_common(cex);

    auto* search = app.add_subcommand("search", "randomized conjecture falsification");
    std::string conjecture_text;
    int n = 3;
    int m = 3;
    std::uint64_t search_samples = 1000;
    SearchOptions opts;
    search->add_option("--conjecture", conjecture_text, "i or ii")->required();
    search->add_option("--n,--dims", n, "matrix dimension")->check(CLI::Range(2, 64));
    search->add_option("--m", m, "chain length")->check(CLI::PositiveNumber);
    search->add_option("--samples", search_samples)->check(CLI::PositiveNumber);
    search->add_option("--seed", seed_text);
    search->add_option("--tol", opts.tol_factor)->check(CLI::PositiveNumber);
    search->add_flag("--stress", opts.stress, "ill-conditioned / near-singular ensembles");
    search->add_flag("--relax-hermitian", opts.relax_a_to_hermitian,
                     "sample A merely Hermitian (exploratory; not the stated hypotheses)");
    add_common(search);

    auto* chain = app.add_subcommand("chain", "evaluate a trace chain from matrix files");
    std::string chain_t, chain_a, weights_text;
    chain->add_option("--matrix-t", chain_t)->required();
    chain->add_option("--matrix-a", chain_a)->required();
    chain->add_option("--weights", weights_text, "comma list; fractions like 1/6 allowed")
        ->required();
    add_common(chain);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*verify) {
            VerifyConfig cfg;
            cfg.dims = dims;
            cfg.samples = samples;
            cfg.seed = parse_seed(seed_text);
            cfg.tol_factor = tol_factor;
            return cmd_verify(cfg, format, output_path);
        }
        if (*cex) return cmd_counterexample(format, t_path, a_path, output_path);
        if (*search)
            return cmd_search(conjecture_from_string(conjecture_text), n, m, search_samples,
                              parse_seed(seed_text), opts, format, output_path);
        if (*chain) return cmd_chain(chain_t, chain_a, weights_text, format, output_path);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
