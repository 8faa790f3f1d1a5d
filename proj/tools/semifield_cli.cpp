// Command-line front end: verify, analyze, opposite, mult, table, search.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 parse or configuration error, 3 search budget exhausted with no
// solutions.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semifield/analysis.hpp"
#include "semifield/cube.hpp"
#include "semifield/fixtures.hpp"
#include "semifield/io.hpp"
#include "semifield/search.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_parse_error = 2;
constexpr int exit_budget_exhausted = 3;

struct CliError : std::runtime_error {
    int code;
    CliError(const std::string& msg, int code_) : std::runtime_error(msg), code(code_) {}
};

semifield::StandardBasis load_basis(const std::string& arg) {
    if (auto fixture = semifield::fixture_basis(arg)) return *fixture;
    std::ifstream in(arg);
    if (!in) throw CliError("cannot open '" + arg + "' (not a file or built-in fixture)", exit_parse_error);
    try {
        return semifield::parse_basis(in);
    } catch (const semifield::ParseError& e) {
        throw CliError(arg + ": " + e.what(), exit_parse_error);
    }
}

void print_verification(const semifield::VerificationReport& r) {
    if (r.passed) {
        std::cout << "PASS: standard basis (identity, unit columns, all nonzero combinations invertible)\n";
        return;
    }
    std::cout << "FAIL: " << semifield::condition_name(*r.failed_condition);
    if (r.matrix_witness) std::cout << " at matrix " << *r.matrix_witness;
    if (r.lambda_witness) std::cout << " with lambda " << r.lambda_witness->to_string();
    std::cout << "\n";
}

int cmd_verify(const std::string& input, bool as_json) {
    auto basis = load_basis(input);
    auto report = semifield::verify_standard_basis(basis);
    if (as_json)
        std::cout << semifield::verification_to_json(report).dump(2) << "\n";
    else
        print_verification(report);
    return report.passed ? exit_ok : exit_verify_failed;
}

int cmd_analyze(const std::string& input, std::vector<int> sub_dims) {
    auto basis = load_basis(input);
    auto report = semifield::verify_standard_basis(basis);
    if (!report.passed) {
        print_verification(report);
        return exit_verify_failed;
    }
    if (sub_dims.empty())
        for (int m = 1; m <= basis.n; ++m) sub_dims.push_back(m);
    std::cout << semifield::analysis_document(basis, sub_dims).dump(2) << "\n";
    return exit_ok;
}

int cmd_opposite(const std::string& input, const std::string& output) {
    auto basis = load_basis(input);
    auto opp = semifield::basis_from_cube(semifield::opposite(semifield::cube_from_basis(basis)));
    std::ofstream out(output);
    if (!out) throw CliError("cannot write '" + output + "'", exit_parse_error);
    out << semifield::serialize_basis(opp);
    return exit_ok;
}

int cmd_mult(const std::string& input, const std::string& xs, const std::string& ys) {
    auto basis = load_basis(input);
    semifield::Gf2Vector x, y;
    try {
        x = semifield::Gf2Vector::from_string(xs);
        y = semifield::Gf2Vector::from_string(ys);
        if (x.dim() != basis.n || y.dim() != basis.n)
            throw std::invalid_argument("operand length does not match dimension " +
                                        std::to_string(basis.n));
    } catch (const std::exception& e) {
        throw CliError(std::string("bad operand: ") + e.what(), exit_parse_error);
    }
    auto cube = semifield::cube_from_basis(basis);
    std::cout << semifield::multiply(cube, x, y).to_string() << "\n";
    return exit_ok;
}

int cmd_table(const std::string& input) {
    auto basis = load_basis(input);
    if (!semifield::verify_standard_basis(basis).passed) {
        std::cerr << "error: '" << input << "' is not a valid standard basis\n";
        return exit_verify_failed;
    }
    auto cube = semifield::cube_from_basis(basis);
    std::uint32_t order = std::uint32_t{1} << basis.n;
    for (std::uint32_t xb = 0; xb < order; ++xb) {
        semifield::Gf2Vector x(basis.n, xb);
        for (std::uint32_t yb = 0; yb < order; ++yb) {
            std::uint32_t p = semifield::multiply(cube, x, semifield::Gf2Vector(basis.n, yb)).bits();
            std::printf("%s%x", yb ? " " : "", p);
        }
        std::printf("\n");
    }
    return exit_ok;
}

int cmd_search(const std::string& config_path, const std::string& out_dir, int jobs) {
    nlohmann::json config_json;
    semifield::SearchConfig cfg;
    try {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open '" + config_path + "'");
        config_json = nlohmann::json::parse(in);
        cfg = semifield::parse_search_config(config_json);
    } catch (const semifield::InconsistentConstraints& e) {
        throw CliError(std::string("inconsistent constraints: ") + e.what(), exit_parse_error);
    } catch (const std::exception& e) {
        throw CliError(std::string("bad search config: ") + e.what(), exit_parse_error);
    }

    auto progress = [](const semifield::SearchProgress& p) {
        std::cerr << "progress nodes=" << p.nodes << " prunes=" << p.prunes
                  << " solutions=" << p.solutions << "\n";
    };

    semifield::SearchOutcome outcome;
    auto start = std::chrono::steady_clock::now();
    if (cfg.split_depth > 0 && jobs > 1) {
        auto shards = semifield::split_search_space(cfg.constraints, cfg.split_depth);
        std::cerr << "shards count=" << shards.size() << " jobs=" << jobs << "\n";
        std::vector<semifield::SearchOutcome> results(shards.size());
        std::size_t next = 0;
        while (next < shards.size()) {
            std::vector<std::pair<std::size_t, std::future<semifield::SearchOutcome>>> batch;
            for (int k = 0; k < jobs && next < shards.size(); ++k, ++next)
                batch.emplace_back(next, std::async(std::launch::async, [&shards, &cfg, i = next] {
                                       return semifield::search_standard_bases(shards[i], cfg.budget);
                                   }));
            for (auto& [i, fut] : batch) results[i] = fut.get();
        }
        outcome.exhausted = true;
        for (auto& r : results) { // aggregate in shard order for reproducibility
            for (auto& b : r.bases) outcome.bases.push_back(std::move(b));
            outcome.nodes_visited += r.nodes_visited;
            outcome.prunes += r.prunes;
            outcome.exhausted = outcome.exhausted && r.exhausted;
        }
        if (cfg.budget.max_solutions && outcome.bases.size() > *cfg.budget.max_solutions)
            outcome.bases.resize(*cfg.budget.max_solutions);
        outcome.elapsed = std::chrono::steady_clock::now() - start;
    } else {
        outcome = semifield::search_standard_bases(cfg.constraints, cfg.budget, progress);
    }

    std::filesystem::create_directories(out_dir);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < outcome.bases.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "basis_%04zu.basis", i + 1);
        std::ofstream out(std::filesystem::path(out_dir) / name);
        out << semifield::serialize_basis(outcome.bases[i]);
        files.emplace_back(name);
    }
    nlohmann::ordered_json manifest;
    manifest["count"] = outcome.bases.size();
    manifest["files"] = files;
    manifest["nodes"] = outcome.nodes_visited;
    manifest["prunes"] = outcome.prunes;
    manifest["exhausted"] = outcome.exhausted;
    manifest["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(outcome.elapsed).count();
    std::ofstream mf(std::filesystem::path(out_dir) / "manifest.json");
    mf << manifest.dump(2) << "\n";

    std::cout << "solutions=" << outcome.bases.size() << " nodes=" << outcome.nodes_visited
              << " prunes=" << outcome.prunes << " exhausted=" << (outcome.exhausted ? 1 : 0)
              << "\n";
    if (outcome.bases.empty() && !outcome.exhausted) return exit_budget_exhausted;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite semifield toolkit: standard bases of n x n matrices over GF(2)"};
    app.require_subcommand(1);

    std::string input, output, xs, ys;
    std::vector<int> sub_dims;
    int jobs = 1;
    bool as_json = false;

    auto* verify = app.add_subcommand("verify", "Check the standard-basis conditions");
    verify->add_option("basis", input, "Basis file or fixture (paper-example, f8, f128)")->required();
    verify->add_flag("--json", as_json, "Machine-readable report");

    auto* analyze = app.add_subcommand("analyze", "Structural analysis of a verified basis");
    analyze->add_option("basis", input)->required();
    analyze->add_option("--sub", sub_dims, "Subsemifield dimensions to enumerate");

    auto* opposite = app.add_subcommand("opposite", "Write the opposite semifield's basis");
    opposite->add_option("input", input)->required();
    opposite->add_option("output", output)->required();

    auto* mult = app.add_subcommand("mult", "Multiply two elements given as bit strings");
    mult->add_option("basis", input)->required();
    mult->add_option("x", xs)->required();
    mult->add_option("y", ys)->required();

    auto* table = app.add_subcommand("table", "Emit the full multiplication table as hex rows");
    table->add_option("basis", input)->required();

    auto* search = app.add_subcommand("search", "Run a constrained standard-basis search");
    search->add_option("config", input, "JSON search configuration")->required();
    search->add_option("--out", output, "Output directory")->default_val("search-out");
    search->add_option("--jobs", jobs, "Parallel shard workers (with split_depth > 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? exit_parse_error : exit_ok;
    }

    try {
        if (*verify) return cmd_verify(input, as_json);
        if (*analyze) return cmd_analyze(input, sub_dims);
        if (*opposite) return cmd_opposite(input, output);
        if (*mult) return cmd_mult(input, xs, ys);
        if (*table) return cmd_table(input);
        if (*search) return cmd_search(input, output, jobs);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    }
    return exit_ok;
}
