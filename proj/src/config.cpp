#include "pvshare/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "pvshare/errors.hpp"
#include "text_util.hpp"

namespace pvshare {

namespace {

struct LoadKeys {
    std::string label;
    bool label_set = false;
    std::string preset; // "bundled" or "none"
    long preset_line = 0;
    std::vector<Appliance> appliances;
    long first_appliance_line = 0;
};

struct Parser {
    SystemConfig config = default_config();
    std::filesystem::path base_dir;
    LoadKeys load1, load2;
    std::map<std::string, long, std::less<>> seen; // scalar key -> first line

    void require_fresh(std::string_view key, long line) {
        const auto [it, inserted] = seen.emplace(std::string(key), line);
        if (!inserted)
            throw ParseError(line, "duplicate key '" + std::string(key) + "' (first on line " +
                                       std::to_string(it->second) + ")");
    }

    double number(std::string_view key, std::string_view value, long line) {
        const auto parsed = detail::parse_double(value);
        if (!parsed)
            throw ParseError(line, std::string(key) + ": invalid number '" +
                                       std::string(value) + "'");
        return *parsed;
    }

    double positive(std::string_view key, std::string_view value, long line) {
        const double v = number(key, value, line);
        if (!(v > 0.0))
            throw ParseError(line, std::string(key) + " must be > 0");
        return v;
    }

    double non_negative(std::string_view key, std::string_view value, long line) {
        const double v = number(key, value, line);
        if (v < 0.0)
            throw ParseError(line, std::string(key) + " must be >= 0");
        return v;
    }

    double percent(std::string_view key, std::string_view value, long line) {
        const double v = number(key, value, line);
        if (!(v >= 0.0 && v <= 100.0))
            throw ParseError(line, std::string(key) + " must be within [0, 100]");
        return v;
    }

    void apply_battery(BatteryParams& battery, std::string_view key, std::string_view field,
                       std::string_view value, long line) {
        if (field == "capacity_ah")
            battery.capacity_ah = positive(key, value, line);
        else if (field == "internal_resistance_ohm")
            battery.internal_resistance_ohm = non_negative(key, value, line);
        else if (field == "nominal_voltage_v")
            battery.nominal_voltage_v = positive(key, value, line);
        else if (field == "initial_soc_pct")
            battery.initial_soc_pct = percent(key, value, line);
        else
            throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }

    void apply_load(LoadKeys& load, std::string_view key, std::string_view field,
                    std::string_view value, long line) {
        if (field == "label") {
            load.label = std::string(value);
            load.label_set = true;
        } else if (field == "preset") {
            if (value != "bundled" && value != "none")
                throw ParseError(line, std::string(key) + " must be 'bundled' or 'none', got '" +
                                           std::string(value) + "'");
            load.preset = std::string(value);
            load.preset_line = line;
        } else if (field == "appliance") {
            const auto fields = detail::split(value, ',');
            if (fields.size() != 3)
                throw ParseError(line, std::string(key) +
                                           " expects 'name, unit_power_w, count', got '" +
                                           std::string(value) + "'");
            Appliance appliance;
            appliance.name = std::string(detail::trim(fields[0]));
            if (appliance.name.empty())
                throw ParseError(line, std::string(key) + ": appliance name must not be empty");
            appliance.unit_power_w = positive(key, fields[1], line);
            const auto count = detail::parse_long(fields[2]);
            if (!count)
                throw ParseError(line, std::string(key) + ": invalid count '" +
                                           std::string(detail::trim(fields[2])) + "'");
            if (*count < 1)
                throw ParseError(line, std::string(key) + ": count must be >= 1");
            appliance.count = static_cast<int>(*count);
            load.appliances.push_back(std::move(appliance));
            if (load.first_appliance_line == 0)
                load.first_appliance_line = line;
        } else {
            throw ParseError(line, "unknown key '" + std::string(key) + "'");
        }
    }

    void apply_profile(PVProfile& profile, std::string_view key, std::string_view field,
                       std::string_view value, long line) {
        if (field != "path")
            throw ParseError(line, "unknown key '" + std::string(key) + "'");
        const std::filesystem::path given{std::string(value)};
        const auto resolved = given.is_absolute() ? given : base_dir / given;
        std::ifstream file(resolved);
        if (!file)
            throw IoError("cannot read profile file '" + resolved.string() + "' (" +
                          std::string(key) + " on line " + std::to_string(line) + ")");
        try {
            profile = parse_profile(file);
        } catch (const ParseError& e) {
            throw ParseError(line, std::string(key) + " '" + resolved.string() + "': " + e.what());
        }
    }

    void apply(std::string_view key, std::string_view value, long line) {
        const auto dot = key.find('.');
        const auto section = dot == std::string_view::npos ? key : key.substr(0, dot);
        const auto field = dot == std::string_view::npos ? std::string_view{} : key.substr(dot + 1);

        // load*.appliance repeats; everything else appears at most once.
        if (field != "appliance")
            require_fresh(key, line);

        if (section == "battery1")
            apply_battery(config.battery1, key, field, value, line);
        else if (section == "battery2")
            apply_battery(config.battery2, key, field, value, line);
        else if (section == "load1")
            apply_load(load1, key, field, value, line);
        else if (section == "load2")
            apply_load(load2, key, field, value, line);
        else if (section == "profile1")
            apply_profile(config.profile1, key, field, value, line);
        else if (section == "profile2")
            apply_profile(config.profile2, key, field, value, line);
        else if (section == "controller") {
            if (field == "threshold_pct") {
                const double v = number(key, value, line);
                if (!(v > 0.0 && v < 100.0))
                    throw ParseError(line, std::string(key) + " must be inside (0, 100)");
                config.controller.threshold_pct = v;
            } else if (field == "hysteresis_pct") {
                config.controller.hysteresis_pct = non_negative(key, value, line);
            } else {
                throw ParseError(line, "unknown key '" + std::string(key) + "'");
            }
        } else if (section == "sim") {
            if (field == "dt_s")
                config.dt_s = positive(key, value, line);
            else if (field == "start_time_h")
                config.start_time_h = number(key, value, line);
            else if (field == "duration_s")
                config.duration_s = positive(key, value, line);
            else if (field == "temperature_mode") {
                if (value == "model")
                    config.temperature_mode = TemperatureMode::model;
                else if (value == "replay")
                    config.temperature_mode = TemperatureMode::replay;
                else
                    throw ParseError(line, std::string(key) +
                                               " must be 'model' or 'replay', got '" +
                                               std::string(value) + "'");
            } else
                throw ParseError(line, "unknown key '" + std::string(key) + "'");
        } else if (section == "thermal") {
            if (field == "ambient_c")
                config.thermal.ambient_c = number(key, value, line);
            else if (field == "heat_coeff_c_per_a")
                config.thermal.heat_coeff_c_per_a = non_negative(key, value, line);
            else if (field == "relax_rate_per_s")
                config.thermal.relax_rate_per_s = non_negative(key, value, line);
            else
                throw ParseError(line, "unknown key '" + std::string(key) + "'");
        } else {
            throw ParseError(line, "unknown key '" + std::string(key) + "'");
        }
    }

    void finish_load(LoadKeys& keys, LoadConstitution& out, std::string_view section) {
        if (!keys.appliances.empty() && keys.preset == "none")
            throw ParseError(keys.first_appliance_line,
                             std::string(section) + ".appliance conflicts with " +
                                 std::string(section) + ".preset = none (line " +
                                 std::to_string(keys.preset_line) + ")");
        if (!keys.appliances.empty())
            out.appliances = std::move(keys.appliances);
        else if (keys.preset == "none")
            out.appliances.clear();
        if (keys.label_set)
            out.label = keys.label;
    }
};

} // namespace

SystemConfig default_config() {
    SystemConfig config;
    config.battery1.initial_soc_pct = 90.0;
    config.battery2.initial_soc_pct = 75.0;
    config.load1 = bundled_load1();
    config.load2 = bundled_load2();
    config.profile1 = bundled_profile();
    config.profile2 = bundled_profile();
    return config;
}

SystemConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    Parser parser;
    parser.base_dir = base_dir;

    std::string_view line;
    long line_number = 0;
    while (detail::next_line(text, line)) {
        ++line_number;
        const auto content = detail::trim(line);
        if (content.empty() || content.front() == '#')
            continue;
        const auto equals = content.find('=');
        if (equals == std::string_view::npos)
            throw ParseError(line_number, "expected 'key = value', got '" + std::string(content) + "'");
        const auto key = detail::trim(content.substr(0, equals));
        const auto value = detail::trim(content.substr(equals + 1));
        if (key.empty())
            throw ParseError(line_number, "missing key before '='");
        parser.apply(key, value, line_number);
    }

    parser.finish_load(parser.load1, parser.config.load1, "load1");
    parser.finish_load(parser.load2, parser.config.load2, "load2");

    // Backstop for cross-key invariants the per-key checks cannot see.
    parser.config.validate();
    return parser.config;
}

SystemConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file)
        throw IoError("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const auto parent = path.parent_path();
    return parse_config(buffer.str(), parent.empty() ? "." : parent);
}

} // namespace pvshare
