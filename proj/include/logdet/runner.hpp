#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logdet/generators.hpp"
#include "logdet/oracle.hpp"
#include "logdet/report.hpp"
#include "logdet/spline.hpp"

namespace logdet {

enum class OracleMode {
    Off,
    Auto,   // run when the order fits the dense limit
    Force,  // run regardless of the dense limit
};

OracleMode oracle_mode_from_string(const std::string& name);

struct RandomSpec {
    Index n = 1;
    Index extra_per_row = 0;
    std::uint64_t seed = 0;
};

// One run of the estimate pipeline: exactly one input source must be set.
struct RunConfig {
    std::optional<GridSpec> grid;
    std::optional<std::string> input_path;
    std::optional<RandomSpec> random;

    std::size_t max_power = 4;
    std::size_t workers = 0;  // 0 = hardware concurrency
    WeightRule variant = WeightRule::InverseSymmetric;
    OracleMode oracle = OracleMode::Auto;
    std::optional<double> reference;  // implies oracle off
    Index dense_limit = kDefaultDenseLimit;
    bool record_timings = false;
};

// --workers value if given, else the LOGDET_WORKERS environment value,
// else 0 (auto). Rejects non-numeric or zero environment values.
std::size_t resolve_workers(std::optional<std::size_t> cli_value, const char* env_value);

std::string input_label(const RunConfig& config);

SparseSpdMatrix load_input(const RunConfig& config);

// Estimate + spline + optional reference, assembled into a Report.
Report run_estimate(const RunConfig& config);

double run_exact(const RunConfig& config);

// Named desk-scale suites; one report per matrix.
// Throws DomainError for an unknown suite name.
std::vector<Report> run_bench(const std::string& suite, const RunConfig& base);

std::vector<std::string> bench_suite_names();

}  // namespace logdet
