// Command-line front end: computes h-vectors of odd-cycle toric rings by
// exact lattice-point counting and reports every verdict the library can
// establish (O-sequence, flawless, symmetry, conjectured shape, geometric
// Gorenstein test).  Exit codes: 0 all checks consistent, 1 usage error,
// 2 mathematical inconsistency detected.

#include "oddcycle/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace oddcycle;

unsigned long long bruteforce_budget_from_env() {
    const char* raw = std::getenv("ODDCYCLE_BRUTEFORCE_BUDGET");
    if (!raw) return kDefaultBruteforceBudget;
    try {
        const unsigned long long value = std::stoull(raw);
        if (value == 0) throw std::invalid_argument("zero");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(
            "ODDCYCLE_BRUTEFORCE_BUDGET must be a positive integer, got: " + std::string(raw));
    }
}

std::unique_ptr<EhrhartCache> open_cache(const std::string& path, bool no_cache) {
    if (no_cache) return nullptr;
    return std::make_unique<EhrhartCache>(std::filesystem::path(path));
}

void print_warnings(const VerdictReport& report) {
    for (const auto& warning : report.warnings)
        std::cerr << "WARN (s=" << report.s << "): " << warning << "\n";
    for (const auto& inconsistency : report.inconsistencies)
        std::cerr << "INCONSISTENT (s=" << report.s << "): " << inconsistency << "\n";
}

void emit_report(const VerdictReport& report, const std::string& format, bool timings,
                 bool csv_with_header) {
    if (format == "json") {
        std::cout << report_to_json_string(report, timings);
    } else if (format == "csv") {
        if (csv_with_header) std::cout << csv_header() << "\n";
        std::cout << report_to_csv_row(report) << "\n";
    } else {
        std::cout << report_to_markdown(report, timings) << "\n";
    }
}

int run_hvector(int s, int max_s, const std::string& format, const std::string& cache_path,
                bool no_cache, bool oracle, bool timings) {
    if (s < 1 || s > max_s) {
        std::cerr << "error: s must be between 1 and " << max_s << " (use --max-s to raise)\n";
        return 1;
    }
    const auto cache = open_cache(cache_path, no_cache);
    ReportOptions options;
    options.cache = cache.get();
    options.oracle = oracle;
    options.bruteforce_budget = bruteforce_budget_from_env();
    options.timings = timings;
    const VerdictReport report = compute_report(s, options);
    print_warnings(report);
    emit_report(report, format, timings, true);
    return report.consistent ? 0 : 2;
}

int run_sweep(int from, int to, int max_s, const std::string& format,
              const std::string& cache_path, bool no_cache, bool oracle, bool timings, int jobs) {
    if (from < 1 || to < from || to > max_s) {
        std::cerr << "error: need 1 <= from <= to <= " << max_s << " (use --max-s to raise)\n";
        return 1;
    }
    const auto cache = open_cache(cache_path, no_cache);
    ReportOptions options;
    options.cache = cache.get();
    options.oracle = oracle;
    options.bruteforce_budget = bruteforce_budget_from_env();
    options.timings = timings;

    std::vector<VerdictReport> reports(to - from + 1);
    if (jobs > 1) {
        std::vector<std::future<VerdictReport>> futures;
        futures.reserve(reports.size());
        for (int s = from; s <= to; ++s)
            futures.push_back(std::async(std::launch::async,
                                         [s, &options] { return compute_report(s, options); }));
        for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (int s = from; s <= to; ++s) reports[s - from] = compute_report(s, options);
    }

    bool all_consistent = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        print_warnings(reports[i]);
        all_consistent = all_consistent && reports[i].consistent;
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& report : reports) j["reports"].push_back(report_to_json(report, timings));
        j["summary"] = nlohmann::ordered_json::array();
        for (const auto& report : reports) {
            nlohmann::ordered_json row;
            row["s"] = std::to_string(report.s);
            row["conjecture_shape"] = report.conjecture.holds;
            row["consistent"] = report.consistent;
            row["extrapolation"] = report.extrapolation;
            j["summary"].push_back(row);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& report : reports) std::cout << report_to_csv_row(report) << "\n";
    } else {
        std::cout << "# Sweep s = " << from << ".." << to << "\n\n";
        for (const auto& report : reports) std::cout << report_to_markdown(report, timings) << "\n";
        std::cout << "## Summary\n\n";
        std::cout << "| s | h-vector degree | conjectured shape | consistent | extrapolation |\n";
        std::cout << "|---|---|---|---|---|\n";
        for (const auto& report : reports) {
            std::cout << "| " << report.s << " | " << (report.h.size() - 1) << " | "
                      << (report.conjecture.holds ? "holds" : "fails") << " | "
                      << (report.consistent ? "yes" : "NO") << " | "
                      << (report.extrapolation ? "yes" : "no") << " |\n";
        }
    }
    return all_consistent ? 0 : 2;
}

int run_geometry(int s, const std::string& format, const std::string& cache_path, bool no_cache) {
    if (s < 1) {
        std::cerr << "error: s must be positive\n";
        return 1;
    }
    const auto cache = open_cache(cache_path, no_cache);
    const GeometryReport geo = compute_geometry(s, cache.get());
    if (format == "json") std::cout << geometry_to_json(geo).dump(2) << "\n";
    else std::cout << geometry_to_markdown(geo);
    return 0;
}

int run_cache_inspect(const std::string& cache_path) {
    const std::filesystem::path path(cache_path);
    if (!std::filesystem::exists(path)) {
        std::cout << "cache " << cache_path << ": no file\n";
        return 0;
    }
    EhrhartCache cache(path);
    std::cout << "cache " << cache_path << ": " << cache.size() << " entries\n";
    int current_s = -1;
    long long max_closed = -1, max_interior = -1;
    const auto range = [](long long max_n) {
        return max_n < 0 ? std::string("none") : "up to n=" + std::to_string(max_n);
    };
    const auto flush = [&] {
        if (current_s < 0) return;
        std::cout << "  s=" << current_s << ": closed " << range(max_closed) << ", interior "
                  << range(max_interior) << "\n";
    };
    for (const auto& [s, n, mode, count] : cache.snapshot()) {
        if (s != current_s) {
            flush();
            current_s = s;
            max_closed = max_interior = -1;
        }
        (mode == CountMode::Closed ? max_closed : max_interior) =
            std::max(mode == CountMode::Closed ? max_closed : max_interior, n);
    }
    flush();
    return 0;
}

int run_cache_clear(const std::string& cache_path) {
    const std::filesystem::path path(cache_path);
    if (std::filesystem::remove(path)) std::cout << "removed " << cache_path << "\n";
    else std::cout << "no cache file at " << cache_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact h-vector and polytope verdicts for odd-cycle toric rings"};
    app.require_subcommand(1);

    std::string cache_path = "./ehrhart-cache.jsonl";
    std::string format = "md";
    bool no_cache = false, oracle = false, timings = false;
    int max_s = 10;

    const auto add_common = [&](CLI::App* cmd, bool with_oracle) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"md", "json", "csv"}));
        cmd->add_option("--cache", cache_path, "path to the count cache (JSON lines)");
        cmd->add_flag("--no-cache", no_cache, "do not read or write the count cache");
        if (with_oracle) {
            cmd->add_flag("--oracle", oracle,
                          "cross-check every feasible count against the brute-force oracle");
            cmd->add_flag("--timings", timings, "include timing metadata in the output");
            cmd->add_option("--max-s", max_s, "largest accepted s");
        }
    };

    int s_value = 0, from = 1, to = 1, jobs = 1;

    auto* hvector = app.add_subcommand("hvector", "h-vector and verdicts for one cycle");
    hvector->add_option("--s", s_value, "cycle parameter s of C_{2s+1}")->required();
    add_common(hvector, true);

    auto* sweep = app.add_subcommand("sweep", "run the pipeline for a range of s");
    sweep->add_option("--from", from, "first s")->required();
    sweep->add_option("--to", to, "last s")->required();
    sweep->add_option("--jobs", jobs, "evaluate distinct s values concurrently")
        ->check(CLI::PositiveNumber);
    add_common(sweep, true);

    auto* geometry = app.add_subcommand("geometry", "facet table, codegree and reflexivity");
    geometry->add_option("--s", s_value, "cycle parameter s of C_{2s+1}")->required();
    add_common(geometry, false);

    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the count cache");
    cache_cmd->require_subcommand(1);
    auto* cache_inspect = cache_cmd->add_subcommand("inspect", "summarize cache contents");
    cache_inspect->add_option("--cache", cache_path, "path to the count cache");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "delete the cache file");
    cache_clear->add_option("--cache", cache_path, "path to the count cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (hvector->parsed())
            return run_hvector(s_value, max_s, format, cache_path, no_cache, oracle, timings);
        if (sweep->parsed())
            return run_sweep(from, to, max_s, format, cache_path, no_cache, oracle, timings, jobs);
        if (geometry->parsed()) return run_geometry(s_value, format, cache_path, no_cache);
        if (cache_inspect->parsed()) return run_cache_inspect(cache_path);
        if (cache_clear->parsed()) return run_cache_clear(cache_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // logic errors and integrity failures signal a mathematical inconsistency
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
