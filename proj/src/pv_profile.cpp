#include "pvshare/pv_profile.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "pvshare/errors.hpp"
#include "text_util.hpp"

namespace pvshare {

namespace {

constexpr std::string_view kHeader = "time_h,voltage_v,current_a,temp_c";

// Reference day measured on a rooftop system; generation declines into the
// afternoon while the pack runs warm.
constexpr std::string_view kBundledProfileCsv =
    "time_h,voltage_v,current_a,temp_c\n"
    "9,26.9,24.8,62\n"
    "10,29.1,23.2,66\n"
    "11,29.0,21.1,67\n"
    "12,27.8,19.6,66\n"
    "1,27.3,19.4,64\n"
    "2,24.1,17.9,66\n";

double interpolate(const std::vector<PVSample>& samples, double time_h, double PVSample::*field) {
    if (samples.empty())
        throw std::domain_error("profile has no samples");
    if (time_h <= samples.front().time_h)
        return samples.front().*field;
    if (time_h >= samples.back().time_h)
        return samples.back().*field;
    const auto upper = std::lower_bound(
        samples.begin(), samples.end(), time_h,
        [](const PVSample& s, double t) { return s.time_h < t; });
    if (upper->time_h == time_h)
        return *upper.*field; // exact at sample times
    const auto lower = upper - 1;
    const double weight = (time_h - lower->time_h) / (upper->time_h - lower->time_h);
    return (*lower).*field + weight * ((*upper).*field - (*lower).*field);
}

} // namespace

void PVProfile::validate() const {
    if (samples.empty())
        throw std::domain_error("profile must contain at least one sample");
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].voltage_v < 0.0)
            throw std::domain_error("profile voltage must be >= 0");
        if (samples[i].current_a < 0.0)
            throw std::domain_error("profile current must be >= 0");
        if (i > 0 && !(samples[i].time_h > samples[i - 1].time_h))
            throw std::domain_error("profile times must be strictly increasing");
    }
}

double PVProfile::voltage_at(double time_h) const {
    return interpolate(samples, time_h, &PVSample::voltage_v);
}

double PVProfile::current_at(double time_h) const {
    return interpolate(samples, time_h, &PVSample::current_a);
}

double PVProfile::power_at(double time_h) const {
    return voltage_at(time_h) * current_at(time_h);
}

double PVProfile::temperature_at(double time_h) const {
    return interpolate(samples, time_h, &PVSample::temp_c);
}

PVProfile parse_profile(std::string_view text) {
    PVProfile profile;
    std::string_view line;
    long line_number = 0;
    bool first_content_line = true;

    while (detail::next_line(text, line)) {
        ++line_number;
        const auto content = detail::trim(line);
        if (content.empty())
            continue;
        if (first_content_line) {
            first_content_line = false;
            if (content == kHeader)
                continue;
        }

        const auto fields = detail::split(content, ',');
        if (fields.size() != 4)
            throw ParseError(line_number, "expected 4 comma-separated fields, got " +
                                              std::to_string(fields.size()));

        PVSample sample;
        const struct {
            std::string_view name;
            double PVSample::*field;
        } columns[] = {
            {"time_h", &PVSample::time_h},
            {"voltage_v", &PVSample::voltage_v},
            {"current_a", &PVSample::current_a},
            {"temp_c", &PVSample::temp_c},
        };
        for (size_t i = 0; i < 4; ++i) {
            const auto value = detail::parse_double(fields[i]);
            if (!value)
                throw ParseError(line_number, "invalid number '" + std::string(detail::trim(fields[i])) +
                                                  "' in column " + std::string(columns[i].name));
            sample.*columns[i].field = *value;
        }

        if (sample.time_h < 0.0)
            throw ParseError(line_number, "time_h must be >= 0");
        if (sample.voltage_v < 0.0)
            throw ParseError(line_number, "voltage_v must be >= 0");
        if (sample.current_a < 0.0)
            throw ParseError(line_number, "current_a must be >= 0");

        if (!profile.samples.empty()) {
            const double previous = profile.samples.back().time_h;
            // A backwards hour is an afternoon reading on a 12-hour clock.
            while (sample.time_h < previous)
                sample.time_h += 12.0;
            if (sample.time_h <= previous)
                throw ParseError(line_number, "time " + detail::format_double(sample.time_h) +
                                                  " not increasing after hour normalization");
        }
        profile.samples.push_back(sample);
    }

    if (profile.samples.empty())
        throw ParseError(line_number, "profile contains no samples");
    return profile;
}

PVProfile parse_profile(std::istream& input) {
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return parse_profile(std::string_view(buffer.str()));
}

std::string serialize_profile(const PVProfile& profile) {
    std::string out(kHeader);
    out += '\n';
    for (const auto& s : profile.samples) {
        out += detail::format_double(s.time_h);
        out += ',';
        out += detail::format_double(s.voltage_v);
        out += ',';
        out += detail::format_double(s.current_a);
        out += ',';
        out += detail::format_double(s.temp_c);
        out += '\n';
    }
    return out;
}

PVProfile bundled_profile() {
    return parse_profile(kBundledProfileCsv);
}

std::string_view bundled_profile_csv() {
    return kBundledProfileCsv;
}

} // namespace pvshare
