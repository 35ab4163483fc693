#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pvshare {

// One time-stamped generation-side measurement.
struct PVSample {
    double time_h = 0.0; // hours of day, strictly increasing within a profile
    double voltage_v = 0.0;
    double current_a = 0.0;
    double temp_c = 0.0;

    bool operator==(const PVSample&) const = default;
};

// An ordered measurement series. Queries interpolate linearly between
// samples and hold the boundary sample's values outside the series.
struct PVProfile {
    std::vector<PVSample> samples;

    void validate() const; // throws std::domain_error

    double voltage_at(double time_h) const;
    double current_at(double time_h) const;
    double power_at(double time_h) const; // voltage_at * current_at
    double temperature_at(double time_h) const;

    bool operator==(const PVProfile&) const = default;
};

// Parses the profile CSV format: optional header `time_h,voltage_v,current_a,temp_c`
// followed by one sample per row. Hours that run backwards are read as a
// 12-hour clock wrapping to the afternoon (1 after 12 means 13:00) and
// normalized so the series increases strictly. Throws ParseError with the
// offending line number on malformed or non-increasing input.
PVProfile parse_profile(std::string_view text);
PVProfile parse_profile(std::istream& input);

// Canonical CSV form of a profile (header plus one row per sample, shortest
// round-trip number formatting). Serializing a parsed profile and parsing it
// back reproduces the samples exactly.
std::string serialize_profile(const PVProfile& profile);

// The measured reference day shipped with the simulator, and its raw CSV.
PVProfile bundled_profile();
std::string_view bundled_profile_csv();

} // namespace pvshare
