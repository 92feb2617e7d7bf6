#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logdet/sparse_matrix.hpp"

namespace logdet {

struct ReportRow {
    std::size_t j = 0;
    double density = 0.0;                 // x_j
    double estimate = 0.0;                // D^j
    std::optional<double> spline;         // S^j, defined for j >= 2
    std::optional<double> rel_err_estimate;
    std::optional<double> rel_err_spline;

    bool operator==(const ReportRow&) const = default;
};

struct PhaseTiming {
    std::string phase;
    double seconds = 0.0;

    bool operator==(const PhaseTiming&) const = default;
};

// One run's results: matrix descriptor, the estimate/spline table, and the
// reference value the relative errors were computed against (when any).
// Timings are informational and omitted from serialization when empty.
struct Report {
    std::string name;
    Index order = 0;
    Index nnz = 0;
    double input_density = 0.0;  // nnz / n^2, full-storage density
    std::size_t max_power = 0;
    std::string variant;
    std::vector<ReportRow> rows;          // complete for j = 1..m
    std::optional<double> reference;      // exact or supplied value
    std::string reference_source;         // "oracle", "reference", or empty
    std::vector<PhaseTiming> timings;
    std::optional<double> peak_rss_kb;    // informational, recorded with timings

    bool operator==(const Report&) const = default;
};

enum class ReportFormat {
    Csv,
    Json,
};

ReportFormat report_format_from_string(const std::string& name);

// CSV columns exactly: j, density, D, S, rel_err_D, rel_err_S with empty
// fields where a value is undefined. JSON mirrors the Report structure.
// Output is byte-stable across runs for identical inputs.
//
// Throws SinkError on stream failure.
void write_report(const Report& report, ReportFormat format, std::ostream& sink);

// Parses a report previously written as JSON; inverse of write_report.
Report read_report_json(std::istream& source);

}  // namespace logdet
