// Command-line front end: generate test matrices, run the estimate pipeline,
// query the exact oracle, and run the desk-scale bench suites.

#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logdet/matrix_market.hpp"
#include "logdet/runner.hpp"

namespace {

using namespace logdet;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitResource = 5;

struct InputFlags {
    std::vector<Index> grid;     // N d
    std::string input_path;
    std::vector<std::uint64_t> random;  // n k seed
};

void add_input_options(CLI::App* cmd, InputFlags& flags, bool allow_file) {
    auto* grid = cmd->add_option("--grid", flags.grid, "Grid Laplacian: side and dimension")
                     ->expected(2);
    CLI::Option* file = nullptr;
    if (allow_file) {
        file = cmd->add_option("--input", flags.input_path, "Matrix Market file to read");
    }
    auto* random =
        cmd->add_option("--random", flags.random,
                        "Random diagonally dominant SPD matrix: order, extra off-diagonals "
                        "per row, seed")
            ->expected(3);
    grid->excludes(random);
    if (file != nullptr) {
        grid->excludes(file);
        random->excludes(file);
    }
}

void apply_input_flags(const InputFlags& flags, RunConfig& config) {
    if (!flags.grid.empty()) {
        config.grid = GridSpec{flags.grid[0], flags.grid[1]};
    }
    if (!flags.input_path.empty()) {
        config.input_path = flags.input_path;
    }
    if (!flags.random.empty()) {
        config.random = RandomSpec{static_cast<Index>(flags.random[0]),
                                   static_cast<Index>(flags.random[1]), flags.random[2]};
    }
}

std::string shortest(double v) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return {buffer, ptr};
}

// Writes through a file when a path is given, stdout otherwise.
template <typename Fn>
void with_sink(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw SinkError("cannot open '" + path + "' for writing");
    }
    write(out);
}

void print_bench_summary(const Report& report) {
    std::cerr << report.name << ": n=" << report.order << " nnz=" << report.nnz;
    if (report.reference) {
        const auto& last = report.rows.back();
        if (last.rel_err_estimate) {
            std::cerr << "  D" << last.j << " rel err=" << *last.rel_err_estimate;
        }
        if (last.rel_err_spline) {
            std::cerr << "  S" << last.j << " rel err=" << *last.rel_err_spline;
        }
    }
    for (const PhaseTiming& t : report.timings) {
        std::cerr << "  " << t.phase << "=" << t.seconds << "s";
    }
    std::cerr << "\n";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Log-determinant estimation for sparse SPD matrices"};
    app.require_subcommand(1);

    // generate ---------------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "Write a test matrix in Matrix Market form");
    InputFlags generate_input;
    std::string generate_output;
    add_input_options(generate, generate_input, /*allow_file=*/false);
    generate->add_option("--output,-o", generate_output, "Output path (default stdout)");

    // estimate ---------------------------------------------------------------
    auto* estimate = app.add_subcommand("estimate", "Run the estimate + spline pipeline");
    InputFlags estimate_input;
    add_input_options(estimate, estimate_input, /*allow_file=*/true);
    std::size_t max_power = 4;
    estimate->add_option("-m,--max-power", max_power, "Number of nested patterns (default 4)");
    std::optional<std::size_t> workers;
    estimate->add_option("--workers", workers, "Parallelism degree (default: hardware)");
    std::string variant = "inverse-symmetric";
    estimate->add_option("--variant", variant, "Spline weight rule")
        ->check(CLI::IsMember({"inverse-symmetric", "pseudocode-raw"}));
    std::string oracle = "auto";
    auto* oracle_opt = estimate->add_option("--oracle", oracle, "Exact-value mode")
                           ->check(CLI::IsMember({"off", "auto", "force"}));
    std::optional<double> reference;
    estimate->add_option("--reference", reference, "Known exact value; implies --oracle off")
        ->excludes(oracle_opt);
    Index dense_limit = kDefaultDenseLimit;
    estimate->add_option("--dense-limit", dense_limit, "Oracle dense-order limit");
    std::string format = "json";
    estimate->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
    std::string estimate_output;
    estimate->add_option("--output,-o", estimate_output, "Report path (default stdout)");
    bool timings = false;
    estimate->add_flag("--timings", timings, "Record wall-clock per phase in the report");

    // exact ------------------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "Exact log-determinant via the dense oracle");
    InputFlags exact_input;
    add_input_options(exact, exact_input, /*allow_file=*/true);
    Index exact_dense_limit = kDefaultDenseLimit;
    exact->add_option("--dense-limit", exact_dense_limit, "Oracle dense-order limit");
    bool exact_force = false;
    exact->add_flag("--force", exact_force, "Ignore the dense-order limit");
    std::string exact_output;
    exact->add_option("--output,-o", exact_output, "Output path (default stdout)");

    // bench ------------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Run a named desk-scale suite");
    std::string suite;
    bench->add_option("suite", suite, "Suite name: table3-small or fig2-mini")->required();
    std::optional<std::size_t> bench_workers;
    bench->add_option("--workers", bench_workers, "Parallelism degree (default: hardware)");
    std::string bench_variant = "inverse-symmetric";
    bench->add_option("--variant", bench_variant, "Spline weight rule")
        ->check(CLI::IsMember({"inverse-symmetric", "pseudocode-raw"}));
    std::string bench_format = "json";
    bench->add_option("--format", bench_format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
    std::string bench_output;
    bench->add_option("--output,-o", bench_output, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (generate->parsed()) {
        RunConfig config;
        apply_input_flags(generate_input, config);
        const SparseSpdMatrix a = load_input(config);
        with_sink(generate_output, [&](std::ostream& out) { write_matrix_market(a, out); });
        return 0;
    }

    if (estimate->parsed()) {
        RunConfig config;
        apply_input_flags(estimate_input, config);
        config.max_power = max_power;
        config.workers = resolve_workers(workers, std::getenv("LOGDET_WORKERS"));
        config.variant = weight_rule_from_string(variant);
        config.oracle = reference ? OracleMode::Off : oracle_mode_from_string(oracle);
        config.reference = reference;
        config.dense_limit = dense_limit;
        config.record_timings = timings;
        const Report report = run_estimate(config);
        const ReportFormat report_format = report_format_from_string(format);
        with_sink(estimate_output,
                  [&](std::ostream& out) { write_report(report, report_format, out); });
        return 0;
    }

    if (exact->parsed()) {
        RunConfig config;
        apply_input_flags(exact_input, config);
        config.dense_limit = exact_dense_limit;
        config.oracle = exact_force ? OracleMode::Force : OracleMode::Auto;
        const double value = run_exact(config);
        with_sink(exact_output, [&](std::ostream& out) { out << shortest(value) << "\n"; });
        return 0;
    }

    RunConfig base;
    base.workers = resolve_workers(bench_workers, std::getenv("LOGDET_WORKERS"));
    base.variant = weight_rule_from_string(bench_variant);
    base.record_timings = true;
    const std::vector<Report> reports = run_bench(suite, base);
    const ReportFormat report_format = report_format_from_string(bench_format);
    with_sink(bench_output, [&](std::ostream& out) {
        for (const Report& report : reports) {
            if (report_format == ReportFormat::Csv) {
                out << "# " << report.name << "\n";
            }
            write_report(report, report_format, out);
        }
    });
    for (const Report& report : reports) {
        print_bench_summary(report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotPositiveDefiniteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const TooLargeForOracleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
