#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pvshare/sim.hpp"

namespace pvshare {

// Fixed telemetry CSV column order. Numbers use the shortest representation
// that round-trips the exact double; booleans are 0/1.
std::string_view telemetry_csv_header();

std::string telemetry_to_csv(const std::vector<TelemetryRecord>& records);
void write_telemetry_csv(std::ostream& out, const std::vector<TelemetryRecord>& records);

// Strict reader for the format above; throws ParseError with a line number.
std::vector<TelemetryRecord> read_telemetry_csv(std::string_view text);
std::vector<TelemetryRecord> read_telemetry_csv(std::istream& input);

// Per-run summary printed after a simulation.
struct RunReport {
    std::map<int, long> scenario_counts; // scenario index -> step count
    double final_soc1_pct = 0.0;
    double final_soc2_pct = 0.0;
    double energy_load1_wh = 0.0; // energy served to each load bank
    double energy_load2_wh = 0.0;
    long clamp_event_count = 0;
};

RunReport make_report(const std::vector<TelemetryRecord>& records, const SystemConfig& config);
void print_report(std::ostream& out, const RunReport& report);

} // namespace pvshare
