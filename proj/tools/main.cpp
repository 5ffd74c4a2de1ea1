#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobz/report.hpp"
#include "frobz/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

std::vector<std::int64_t> parse_gens(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) {
            throw std::invalid_argument("bad generator value: " + item);
        }
    }
    if (out.empty()) throw std::invalid_argument("no generators given");
    return out;
}

std::vector<int> parse_indices(const std::string& csv) {
    std::vector<int> out;
    for (std::int64_t v : parse_gens(csv)) out.push_back(static_cast<int>(v));
    return out;
}

void emit(const std::string& format, const nlohmann::json& j,
          const std::string& text) {
    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

void print_sweep(const std::string& name, const frobz::SweepResult& r,
                 bool verbose) {
    if (verbose) {
        for (const std::string& line : r.lines) std::cout << "  " << line << '\n';
    }
    std::cout << name << ": " << (r.pass ? "PASS" : "FAIL");
    if (r.pairs_checked) std::cout << " (" << r.pairs_checked << " pairs";
    else if (r.sets_checked) std::cout << " (" << r.sets_checked << " cases";
    else std::cout << " (";
    if (r.lengths_checked) std::cout << ", " << r.lengths_checked << " lengths";
    if (r.dead_ends_seen) std::cout << ", " << r.dead_ends_seen << " dead ends";
    std::cout << ")\n";
    if (!r.pass) std::cout << "counterexample: " << r.counterexample << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word lengths, Frobenius values, and dead ends in the integers"};
    app.require_subcommand(1);

    std::string gens_csv;
    std::string format = "text";
    std::int64_t value = 0;
    std::int64_t radius = 0;
    bool want_witness = false;
    std::string method = "auto";
    std::int64_t max_a = 60;
    int max_m = 20;
    int jobs = 1;
    int fuzz_sets = 200;
    std::int64_t fuzz_max_gen = 40;
    std::uint64_t fuzz_seed = 0x20260810u;
    bool verbose = false;
    std::string table_path;
    int witness_source = 0;
    std::string base_csv;
    bool check_assoc = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for a generating set");
    analyze_cmd->add_option("--gens", gens_csv, "comma-separated generators")->required();
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* length_cmd = app.add_subcommand("length", "word length of one value");
    length_cmd->add_option("--gens", gens_csv)->required();
    length_cmd->add_option("--value", value, "target integer")->required();
    length_cmd->add_flag("--witness", want_witness, "also report a minimal combination");
    length_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* deadends_cmd = app.add_subcommand("deadends", "dead ends of a generating set");
    deadends_cmd->add_option("--gens", gens_csv)->required();
    deadends_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "closed", "bfs", "both"}));
    deadends_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius number and values");
    frob_cmd->add_option("--gens", gens_csv)->required();
    frob_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* sphere_cmd = app.add_subcommand("sphere", "spheres of the word metric, layered by length");
    sphere_cmd->add_option("--gens", gens_csv)->required();
    sphere_cmd->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
    sphere_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "dot"}));

    auto* verify_cmd = app.add_subcommand("verify", "cross-check the closed forms against searches");
    verify_cmd->require_subcommand(1);
    verify_cmd->fallthrough();
    auto* verify_pairs_cmd = verify_cmd->add_subcommand(
        "pairs", "closed forms vs search for every coprime pair");
    verify_pairs_cmd->fallthrough();
    verify_pairs_cmd->add_option("--max-a", max_a)->check(CLI::PositiveNumber);
    verify_pairs_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    auto* verify_bound_cmd = verify_cmd->add_subcommand(
        "bound", "audit the dead-end search bound on fuzzed sets");
    verify_bound_cmd->fallthrough();
    verify_bound_cmd->add_option("--sets", fuzz_sets)->check(CLI::PositiveNumber);
    verify_bound_cmd->add_option("--max-gen", fuzz_max_gen)->check(CLI::PositiveNumber);
    verify_bound_cmd->add_option("--seed", fuzz_seed);
    auto* verify_rw_cmd = verify_cmd->add_subcommand(
        "riley-warshall", "the classic {2m,2m+1} and {2m-1,2m} dead ends");
    verify_rw_cmd->fallthrough();
    verify_rw_cmd->add_option("--max-m", max_m)->check(CLI::PositiveNumber);
    auto* verify_groups_cmd = verify_cmd->add_subcommand(
        "groups", "dead-end constructions over the bundled group corpus");
    verify_groups_cmd->fallthrough();
    verify_cmd->add_flag("--verbose", verbose, "print per-case lines");

    auto* group_cmd = app.add_subcommand("group", "dead-end construction for a finite group");
    group_cmd->add_option("--table", table_path, "Cayley table file")->required();
    group_cmd->add_option("--a", witness_source, "element the construction is built around")
        ->required();
    group_cmd->add_option("--base", base_csv, "comma-separated base generator indices")
        ->required();
    group_cmd->add_flag("--check-assoc", check_assoc, "run the O(n^3) associativity check");
    group_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (analyze_cmd->parsed()) {
            const frobz::GenSet set(parse_gens(gens_csv));
            const frobz::AnalysisReport report = frobz::analyze(set);
            emit(format, frobz::to_json(report), frobz::to_text(report));
            return kExitOk;
        }
        if (length_cmd->parsed()) {
            const frobz::GenSet set(parse_gens(gens_csv));
            const frobz::LengthReport report =
                frobz::length_report(set, value, want_witness);
            emit(format, frobz::to_json(report), frobz::to_text(report));
            return kExitOk;
        }
        if (deadends_cmd->parsed()) {
            const frobz::GenSet set(parse_gens(gens_csv));
            const frobz::DeadEndsReport report = frobz::dead_ends_report(set, method);
            emit(format, frobz::to_json(report), frobz::to_text(report));
            return kExitOk;
        }
        if (frob_cmd->parsed()) {
            const frobz::GenSet set(parse_gens(gens_csv));
            const frobz::FrobeniusReport report = frobz::frobenius_report(set);
            emit(format, frobz::to_json(report), frobz::to_text(report));
            return kExitOk;
        }
        if (sphere_cmd->parsed()) {
            const frobz::GenSet set(parse_gens(gens_csv));
            const frobz::SphereReport report = frobz::sphere_report(set, radius);
            if (format == "dot") {
                std::cout << frobz::to_dot(report);
            } else {
                emit(format, frobz::to_json(report), frobz::to_text(report));
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            frobz::SweepResult result;
            std::string name;
            if (verify_pairs_cmd->parsed()) {
                result = frobz::verify_pairs(max_a, jobs);
                name = "pairs";
            } else if (verify_bound_cmd->parsed()) {
                result = frobz::verify_bound(fuzz_sets, fuzz_max_gen, 5, fuzz_seed);
                name = "bound";
            } else if (verify_rw_cmd->parsed()) {
                result = frobz::verify_riley_warshall(max_m);
                name = "riley-warshall";
            } else {
                result = frobz::verify_groups();
                name = "groups";
            }
            print_sweep(name, result, verbose);
            return result.pass ? kExitOk : kExitVerifyFailed;
        }
        if (group_cmd->parsed()) {
            const frobz::FiniteGroup g =
                frobz::FiniteGroup::load_file(table_path, check_assoc);
            const frobz::ConstructionReport report =
                frobz::verify_construction(g, witness_source, parse_indices(base_csv));
            emit(format, frobz::to_json(report, g), frobz::to_text(report, g));
            return report.pass ? kExitOk : kExitVerifyFailed;
        }
    } catch (const frobz::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitBadInput;
}
