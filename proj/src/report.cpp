#include "logdet/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace logdet {

namespace {

std::string shortest(double v) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return {buffer, ptr};
}

void append_optional(std::string& out, const std::optional<double>& v) {
    if (v) {
        out += shortest(*v);
    }
}

using nlohmann::json;

json row_to_json(const ReportRow& row) {
    json j{{"j", row.j}, {"density", row.density}, {"D", row.estimate}};
    if (row.spline) {
        j["S"] = *row.spline;
    }
    if (row.rel_err_estimate) {
        j["rel_err_D"] = *row.rel_err_estimate;
    }
    if (row.rel_err_spline) {
        j["rel_err_S"] = *row.rel_err_spline;
    }
    return j;
}

ReportRow row_from_json(const json& j) {
    ReportRow row;
    row.j = j.at("j").get<std::size_t>();
    row.density = j.at("density").get<double>();
    row.estimate = j.at("D").get<double>();
    if (j.contains("S")) {
        row.spline = j.at("S").get<double>();
    }
    if (j.contains("rel_err_D")) {
        row.rel_err_estimate = j.at("rel_err_D").get<double>();
    }
    if (j.contains("rel_err_S")) {
        row.rel_err_spline = j.at("rel_err_S").get<double>();
    }
    return row;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    throw DomainError("unknown report format '" + name + "'");
}

void write_report(const Report& report, ReportFormat format, std::ostream& sink) {
    if (format == ReportFormat::Csv) {
        std::string out = "j,density,D,S,rel_err_D,rel_err_S\n";
        for (const ReportRow& row : report.rows) {
            out += std::to_string(row.j);
            out += ',';
            out += shortest(row.density);
            out += ',';
            out += shortest(row.estimate);
            out += ',';
            append_optional(out, row.spline);
            out += ',';
            append_optional(out, row.rel_err_estimate);
            out += ',';
            append_optional(out, row.rel_err_spline);
            out += '\n';
        }
        sink << out;
    } else {
        json j{{"name", report.name},
               {"order", report.order},
               {"nnz", report.nnz},
               {"input_density", report.input_density},
               {"m", report.max_power},
               {"variant", report.variant},
               {"rows", json::array()}};
        for (const ReportRow& row : report.rows) {
            j["rows"].push_back(row_to_json(row));
        }
        if (report.reference) {
            j["reference"] = *report.reference;
            j["reference_source"] = report.reference_source;
        }
        if (!report.timings.empty()) {
            json timings = json::array();
            for (const PhaseTiming& t : report.timings) {
                timings.push_back({{"phase", t.phase}, {"seconds", t.seconds}});
            }
            j["timings"] = timings;
        }
        if (report.peak_rss_kb) {
            j["peak_rss_kb"] = *report.peak_rss_kb;
        }
        sink << j.dump(2) << '\n';
    }
    if (!sink) {
        throw SinkError("failed writing the report stream");
    }
}

Report read_report_json(std::istream& source) {
    json j;
    try {
        source >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }

    Report report;
    report.name = j.at("name").get<std::string>();
    report.order = j.at("order").get<Index>();
    report.nnz = j.at("nnz").get<Index>();
    report.input_density = j.at("input_density").get<double>();
    report.max_power = j.at("m").get<std::size_t>();
    report.variant = j.at("variant").get<std::string>();
    for (const json& row : j.at("rows")) {
        report.rows.push_back(row_from_json(row));
    }
    if (j.contains("reference")) {
        report.reference = j.at("reference").get<double>();
        report.reference_source = j.value("reference_source", "");
    }
    if (j.contains("timings")) {
        for (const json& t : j.at("timings")) {
            report.timings.push_back(
                {t.at("phase").get<std::string>(), t.at("seconds").get<double>()});
        }
    }
    if (j.contains("peak_rss_kb")) {
        report.peak_rss_kb = j.at("peak_rss_kb").get<double>();
    }
    return report;
}

}  // namespace logdet
