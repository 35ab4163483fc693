#include "pvshare/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pvshare/errors.hpp"

namespace pvshare {

void SystemConfig::validate() const {
    battery1.validate();
    battery2.validate();
    load1.validate();
    load2.validate();
    profile1.validate();
    profile2.validate();
    controller.validate();
    thermal.validate();
    if (!(dt_s > 0.0))
        throw std::domain_error("dt_s must be > 0");
    if (!(duration_s > 0.0))
        throw std::domain_error("duration_s must be > 0");
}

WorldState initial_state(const SystemConfig& config) {
    const bool replay = config.temperature_mode == TemperatureMode::replay;
    WorldState world;
    world.time_h = config.start_time_h;
    world.battery1 = BatteryState{
        config.battery1.initial_soc_pct,
        0.0,
        config.battery1.nominal_voltage_v,
        replay ? config.profile1.temperature_at(config.start_time_h) : config.thermal.ambient_c,
    };
    world.battery2 = BatteryState{
        config.battery2.initial_soc_pct,
        0.0,
        config.battery2.nominal_voltage_v,
        replay ? config.profile2.temperature_at(config.start_time_h) : config.thermal.ambient_c,
    };
    return world;
}

long step_count(const SystemConfig& config) {
    return static_cast<long>(std::ceil(config.duration_s / config.dt_s));
}

std::pair<WorldState, TelemetryRecord> step(const WorldState& world, const SystemConfig& config,
                                            double dt_s) {
    const double t = world.time_h;
    const double p_pv1 = config.profile1.power_at(t);
    const double p_pv2 = config.profile2.power_at(t);

    const SwitchState decision = decide(world.battery1.soc_pct, world.battery2.soc_pct,
                                        config.controller, world.previous_decision);

    const double p_load1 = demand(config.load1, decision.l1);
    const double p_load2 = demand(config.load2, decision.l2);

    // Each energized load draws from its own subsystem unless a tie switch
    // hands it to the other one. A donor still absorbs its own PV.
    const double fed_by_1 =
        (decision.l1 && !decision.s21 ? p_load1 : 0.0) + (decision.s12 ? p_load2 : 0.0);
    const double fed_by_2 =
        (decision.l2 && !decision.s12 ? p_load2 : 0.0) + (decision.s21 ? p_load1 : 0.0);

    BatteryState b1 = step_battery(world.battery1, config.battery1, p_pv1 - fed_by_1, dt_s,
                                   config.thermal);
    BatteryState b2 = step_battery(world.battery2, config.battery2, p_pv2 - fed_by_2, dt_s,
                                   config.thermal);

    const double t_next = t + dt_s / 3600.0;
    if (config.temperature_mode == TemperatureMode::replay) {
        b1.temperature_c = config.profile1.temperature_at(t_next);
        b2.temperature_c = config.profile2.temperature_at(t_next);
    }

    TelemetryRecord record;
    record.time_h = t;
    record.soc1 = b1.soc_pct;
    record.soc2 = b2.soc_pct;
    record.v1 = b1.terminal_voltage_v;
    record.v2 = b2.terminal_voltage_v;
    record.i1 = b1.current_a;
    record.i2 = b2.current_a;
    record.temp1 = b1.temperature_c;
    record.temp2 = b2.temperature_c;
    record.p_pv1 = p_pv1;
    record.p_pv2 = p_pv2;
    record.p_load1 = p_load1;
    record.p_load2 = p_load2;
    record.s12 = decision.s12;
    record.s21 = decision.s21;
    record.l1 = decision.l1;
    record.l2 = decision.l2;
    record.scenario = scenario_of(decision);
    record.clamp1 = b1.clamp_event;
    record.clamp2 = b2.clamp_event;

    WorldState next;
    next.time_h = t_next;
    next.battery1 = b1;
    next.battery2 = b2;
    next.previous_decision = decision;
    return {next, record};
}

std::pair<WorldState, TelemetryRecord> step(const WorldState& world, const SystemConfig& config) {
    return step(world, config, config.dt_s);
}

std::vector<TelemetryRecord> run(const SystemConfig& config) {
    config.validate();
    const long steps = step_count(config);
    std::vector<TelemetryRecord> records;
    records.reserve(static_cast<size_t>(steps));

    WorldState world = initial_state(config);
    for (long i = 0; i < steps; ++i) {
        const double dt_s =
            std::min(config.dt_s, config.duration_s - static_cast<double>(i) * config.dt_s);
        try {
            auto [next, record] = step(world, config, dt_s);
            world = next;
            records.push_back(record);
        } catch (const std::exception& e) {
            throw SimError("step " + std::to_string(i) + ": " + e.what());
        }
    }
    return records;
}

double energy_balance(const std::vector<TelemetryRecord>& records, const SystemConfig& config) {
    if (records.size() != static_cast<size_t>(step_count(config)))
        throw std::domain_error("record count does not match the config's step count");
    for (const auto& r : records)
        if (r.clamp1 || r.clamp2)
            throw std::domain_error(
                "energy balance undefined: the run contains SOC clamp events");

    double pv_wh = 0.0;
    double load_wh = 0.0;
    for (size_t i = 0; i < records.size(); ++i) {
        const double dt_s =
            std::min(config.dt_s, config.duration_s - static_cast<double>(i) * config.dt_s);
        pv_wh += (records[i].p_pv1 + records[i].p_pv2) * dt_s / 3600.0;
        load_wh += (records[i].p_load1 + records[i].p_load2) * dt_s / 3600.0;
    }

    const auto stored_wh = [](double soc_pct, const BatteryParams& params) {
        return soc_pct / 100.0 * params.capacity_ah * params.nominal_voltage_v;
    };
    const double stored_before_wh = stored_wh(config.battery1.initial_soc_pct, config.battery1) +
                                    stored_wh(config.battery2.initial_soc_pct, config.battery2);
    const double stored_after_wh =
        stored_wh(records.back().soc1, config.battery1) + stored_wh(records.back().soc2, config.battery2);

    return std::abs(pv_wh - load_wh - (stored_after_wh - stored_before_wh));
}

} // namespace pvshare
