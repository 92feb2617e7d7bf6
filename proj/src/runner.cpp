#include "logdet/runner.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <string>
#include <utility>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

#include "logdet/estimator.hpp"
#include "logdet/matrix_market.hpp"
#include "logdet/oracle.hpp"

namespace logdet {

namespace {

class PhaseClock {
  public:
    explicit PhaseClock(bool enabled, std::vector<PhaseTiming>& sink)
        : enabled_(enabled), sink_(sink) {}

    template <typename F>
    auto time(const char* phase, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        auto result = f();
        if (enabled_) {
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            sink_.push_back({phase, elapsed.count()});
        }
        return result;
    }

  private:
    bool enabled_;
    std::vector<PhaseTiming>& sink_;
};

int input_sources(const RunConfig& config) {
    return int(config.grid.has_value()) + int(config.input_path.has_value()) +
           int(config.random.has_value());
}

std::optional<double> peak_rss_kb() {
#if defined(__unix__) || defined(__APPLE__)
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) == 0) {
        return static_cast<double>(usage.ru_maxrss);  // kilobytes on Linux
    }
#endif
    return std::nullopt;
}

}  // namespace

OracleMode oracle_mode_from_string(const std::string& name) {
    if (name == "off") {
        return OracleMode::Off;
    }
    if (name == "auto") {
        return OracleMode::Auto;
    }
    if (name == "force") {
        return OracleMode::Force;
    }
    throw DomainError("unknown oracle mode '" + name + "'");
}

std::size_t resolve_workers(std::optional<std::size_t> cli_value, const char* env_value) {
    if (cli_value) {
        if (*cli_value == 0) {
            throw DomainError("workers must be at least 1");
        }
        return *cli_value;
    }
    if (env_value != nullptr && *env_value != '\0') {
        unsigned long long v = 0;
        const char* end = env_value;
        while (*end != '\0') {
            ++end;
        }
        auto [ptr, ec] = std::from_chars(env_value, end, v);
        if (ec != std::errc() || ptr != end || v == 0) {
            throw DomainError(std::string("invalid LOGDET_WORKERS value '") + env_value + "'");
        }
        return static_cast<std::size_t>(v);
    }
    return 0;
}

std::string input_label(const RunConfig& config) {
    if (config.grid) {
        return "L(" + std::to_string(config.grid->side) + "," + std::to_string(config.grid->dim) +
               ")";
    }
    if (config.random) {
        return "random(" + std::to_string(config.random->n) + "," +
               std::to_string(config.random->extra_per_row) + "," +
               std::to_string(config.random->seed) + ")";
    }
    if (config.input_path) {
        return std::filesystem::path(*config.input_path).stem().string();
    }
    return "unnamed";
}

SparseSpdMatrix load_input(const RunConfig& config) {
    if (input_sources(config) != 1) {
        throw DomainError("exactly one input source must be given");
    }
    if (config.grid) {
        return grid_laplacian(*config.grid);
    }
    if (config.random) {
        return random_dd_spd(config.random->n, config.random->extra_per_row,
                             config.random->seed);
    }
    return read_matrix_market_file(*config.input_path);
}

Report run_estimate(const RunConfig& config) {
    if (config.max_power < 1) {
        throw DomainError("m must be at least 1");
    }

    Report report;
    PhaseClock clock(config.record_timings, report.timings);

    const SparseSpdMatrix a = clock.time("load", [&] { return load_input(config); });
    report.name = input_label(config);
    report.order = a.order();
    report.nnz = a.nnz();
    report.input_density = a.storage_density();
    report.max_power = config.max_power;
    report.variant = to_string(config.variant);

    const EstimateSeries series =
        clock.time("estimate", [&] { return estimate_series(a, config.max_power, config.workers); });

    SplineSeries splines;
    if (config.max_power >= 2) {
        splines = clock.time("spline", [&] {
            return spline_series(series.estimates, series.densities, config.variant);
        });
    }

    if (config.reference) {
        report.reference = *config.reference;
        report.reference_source = "reference";
    } else if (config.oracle != OracleMode::Off) {
        const Index limit =
            config.oracle == OracleMode::Force ? a.order() : config.dense_limit;
        if (config.oracle == OracleMode::Force || a.order() <= config.dense_limit) {
            report.reference = clock.time("oracle", [&] { return exact_logdet(a, limit); });
            report.reference_source = "oracle";
        }
    }

    if (config.record_timings) {
        report.peak_rss_kb = peak_rss_kb();
    }

    for (std::size_t j = 1; j <= config.max_power; ++j) {
        ReportRow row;
        row.j = j;
        row.density = series.densities[j - 1];
        row.estimate = series.estimates[j - 1];
        if (j >= 2) {
            row.spline = splines.values[j - 2];
        }
        if (report.reference && *report.reference != 0.0) {
            const double ref = *report.reference;
            row.rel_err_estimate = std::abs(row.estimate - ref) / std::abs(ref);
            if (row.spline) {
                row.rel_err_spline = std::abs(*row.spline - ref) / std::abs(ref);
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

double run_exact(const RunConfig& config) {
    const SparseSpdMatrix a = load_input(config);
    const Index limit = config.oracle == OracleMode::Force ? a.order() : config.dense_limit;
    return exact_logdet(a, limit);
}

std::vector<std::string> bench_suite_names() {
    return {"table3-small", "fig2-mini"};
}

std::vector<Report> run_bench(const std::string& suite, const RunConfig& base) {
    std::vector<RunConfig> runs;
    if (suite == "table3-small") {
        RunConfig config = base;
        config.grid = GridSpec{15, 3};
        config.input_path.reset();
        config.random.reset();
        config.max_power = 4;
        config.oracle = OracleMode::Auto;
        config.reference.reset();
        runs.push_back(std::move(config));
    } else if (suite == "fig2-mini") {
        RunConfig config = base;
        config.grid = GridSpec{10, 3};
        config.input_path.reset();
        config.random.reset();
        config.max_power = 6;
        config.oracle = OracleMode::Auto;
        config.reference.reset();
        runs.push_back(std::move(config));
    } else {
        throw DomainError("unknown bench suite '" + suite + "'");
    }

    std::vector<Report> reports;
    reports.reserve(runs.size());
    for (const RunConfig& config : runs) {
        reports.push_back(run_estimate(config));
    }
    return reports;
}

}  // namespace logdet
