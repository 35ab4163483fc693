#include "pvshare/telemetry.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pvshare/errors.hpp"
#include "text_util.hpp"

namespace pvshare {

namespace {

constexpr std::string_view kHeader =
    "time_h,soc1,soc2,v1,v2,i1,i2,temp1,temp2,p_pv1,p_pv2,p_load1,p_load2,"
    "s12,s21,l1,l2,scenario,clamp1,clamp2";

constexpr int kColumns = 20;

void append_bool(std::string& out, bool value) { out += value ? '1' : '0'; }

bool parse_bool(std::string_view field, long line, std::string_view column) {
    const auto text = detail::trim(field);
    if (text == "1")
        return true;
    if (text == "0")
        return false;
    throw ParseError(line, "boolean column " + std::string(column) + " must be 0 or 1, got '" +
                               std::string(text) + "'");
}

} // namespace

std::string_view telemetry_csv_header() { return kHeader; }

std::string telemetry_to_csv(const std::vector<TelemetryRecord>& records) {
    std::string out(kHeader);
    out += '\n';
    for (const auto& r : records) {
        out += detail::format_double(r.time_h);
        for (double value : {r.soc1, r.soc2, r.v1, r.v2, r.i1, r.i2, r.temp1, r.temp2,
                             r.p_pv1, r.p_pv2, r.p_load1, r.p_load2}) {
            out += ',';
            out += detail::format_double(value);
        }
        for (bool value : {r.s12, r.s21, r.l1, r.l2}) {
            out += ',';
            append_bool(out, value);
        }
        out += ',';
        out += std::to_string(r.scenario);
        for (bool value : {r.clamp1, r.clamp2}) {
            out += ',';
            append_bool(out, value);
        }
        out += '\n';
    }
    return out;
}

void write_telemetry_csv(std::ostream& out, const std::vector<TelemetryRecord>& records) {
    out << telemetry_to_csv(records);
}

std::vector<TelemetryRecord> read_telemetry_csv(std::string_view text) {
    std::vector<TelemetryRecord> records;
    std::string_view line;
    long line_number = 0;
    bool saw_header = false;

    while (detail::next_line(text, line)) {
        ++line_number;
        const auto content = detail::trim(line);
        if (content.empty())
            continue;
        if (!saw_header) {
            if (content != kHeader)
                throw ParseError(line_number, "expected telemetry header");
            saw_header = true;
            continue;
        }

        const auto fields = detail::split(content, ',');
        if (fields.size() != kColumns)
            throw ParseError(line_number, "expected " + std::to_string(kColumns) +
                                              " fields, got " + std::to_string(fields.size()));

        TelemetryRecord r;
        double* const numeric[] = {&r.time_h, &r.soc1, &r.soc2, &r.v1, &r.v2, &r.i1, &r.i2,
                                   &r.temp1, &r.temp2, &r.p_pv1, &r.p_pv2, &r.p_load1, &r.p_load2};
        for (size_t i = 0; i < std::size(numeric); ++i) {
            const auto value = detail::parse_double(fields[i]);
            if (!value)
                throw ParseError(line_number, "invalid number '" +
                                                  std::string(detail::trim(fields[i])) +
                                                  "' in column " + std::to_string(i + 1));
            *numeric[i] = *value;
        }
        r.s12 = parse_bool(fields[13], line_number, "s12");
        r.s21 = parse_bool(fields[14], line_number, "s21");
        r.l1 = parse_bool(fields[15], line_number, "l1");
        r.l2 = parse_bool(fields[16], line_number, "l2");
        const auto scenario = detail::parse_long(fields[17]);
        if (!scenario || *scenario < 1 || *scenario > 4)
            throw ParseError(line_number, "scenario must be within 1..4");
        r.scenario = static_cast<int>(*scenario);
        r.clamp1 = parse_bool(fields[18], line_number, "clamp1");
        r.clamp2 = parse_bool(fields[19], line_number, "clamp2");
        records.push_back(r);
    }

    if (!saw_header)
        throw ParseError(line_number, "expected telemetry header");
    return records;
}

std::vector<TelemetryRecord> read_telemetry_csv(std::istream& input) {
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return read_telemetry_csv(std::string_view(buffer.str()));
}

RunReport make_report(const std::vector<TelemetryRecord>& records, const SystemConfig& config) {
    if (records.empty())
        throw std::domain_error("cannot summarize an empty record list");

    RunReport report;
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const double dt_s =
            std::min(config.dt_s, config.duration_s - static_cast<double>(i) * config.dt_s);
        report.scenario_counts[r.scenario] += 1;
        report.energy_load1_wh += r.p_load1 * dt_s / 3600.0;
        report.energy_load2_wh += r.p_load2 * dt_s / 3600.0;
        report.clamp_event_count += (r.clamp1 ? 1 : 0) + (r.clamp2 ? 1 : 0);
    }
    report.final_soc1_pct = records.back().soc1;
    report.final_soc2_pct = records.back().soc2;
    return report;
}

void print_report(std::ostream& out, const RunReport& report) {
    long steps = 0;
    out << "scenario counts:";
    for (int scenario = 1; scenario <= 4; ++scenario) {
        const auto it = report.scenario_counts.find(scenario);
        const long count = it == report.scenario_counts.end() ? 0 : it->second;
        steps += count;
        out << ' ' << scenario << ':' << count;
    }
    out << " (" << steps << " steps)\n";
    out << "final soc: battery1 " << detail::format_double(report.final_soc1_pct)
        << " %, battery2 " << detail::format_double(report.final_soc2_pct) << " %\n";
    out << "energy served: load1 " << detail::format_double(report.energy_load1_wh)
        << " Wh, load2 " << detail::format_double(report.energy_load2_wh) << " Wh\n";
    out << "clamp events: " << report.clamp_event_count << "\n";
}

} // namespace pvshare
