#include "pvshare/battery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pvshare {

void BatteryParams::validate() const {
    if (!(capacity_ah > 0.0))
        throw std::domain_error("battery capacity_ah must be > 0");
    if (internal_resistance_ohm < 0.0)
        throw std::domain_error("battery internal_resistance_ohm must be >= 0");
    if (!(nominal_voltage_v > 0.0))
        throw std::domain_error("battery nominal_voltage_v must be > 0");
    if (!(initial_soc_pct >= 0.0 && initial_soc_pct <= 100.0))
        throw std::domain_error("battery initial_soc_pct must be within [0, 100]");
}

void ThermalParams::validate() const {
    if (heat_coeff_c_per_a < 0.0)
        throw std::domain_error("thermal heat_coeff_c_per_a must be >= 0");
    if (relax_rate_per_s < 0.0)
        throw std::domain_error("thermal relax_rate_per_s must be >= 0");
}

double terminal_voltage_drop(double discharge_current_a, double internal_resistance_ohm) {
    if (internal_resistance_ohm < 0.0)
        throw std::domain_error("internal resistance must be >= 0");
    return discharge_current_a * internal_resistance_ohm;
}

SocUpdateResult soc_update(double soc_start_pct, std::span<const CurrentSample> samples,
                           double capacity_ah) {
    if (!(capacity_ah > 0.0))
        throw std::domain_error("nominal capacity must be > 0");
    if (!(soc_start_pct >= 0.0 && soc_start_pct <= 100.0))
        throw std::domain_error("starting SOC must be within [0, 100]");

    double charge_ah = 0.0;
    for (const auto& s : samples) {
        if (!(s.duration_s > 0.0))
            throw std::domain_error("sample duration must be > 0");
        charge_ah += s.current_a * s.duration_s / 3600.0;
    }

    SocUpdateResult result;
    result.soc_pct = soc_start_pct + charge_ah / capacity_ah * 100.0;
    if (result.soc_pct < 0.0) {
        result.soc_pct = 0.0;
        result.clamped = true;
    } else if (result.soc_pct > 100.0) {
        result.soc_pct = 100.0;
        result.clamped = true;
    }
    return result;
}

SocUpdateResult soc_update(double soc_start_pct, std::initializer_list<CurrentSample> samples,
                           double capacity_ah) {
    return soc_update(soc_start_pct, std::span<const CurrentSample>(samples.begin(), samples.size()),
                      capacity_ah);
}

double average_discharge_current(double soc_high_pct, double soc_low_pct, double capacity_ah,
                                 double t_start_s, double t_end_s) {
    if (!(capacity_ah > 0.0))
        throw std::domain_error("nominal capacity must be > 0");
    if (!(t_end_s > t_start_s))
        throw std::domain_error("t_end must be > t_start");
    const double hours = (t_end_s - t_start_s) / 3600.0;
    return (soc_high_pct - soc_low_pct) * capacity_ah / 100.0 / hours;
}

double temperature_step(double temp_c, double current_a, double dt_s, double ambient_c,
                        double heat_coeff_c_per_a, double relax_rate_per_s) {
    const double target_c = ambient_c + heat_coeff_c_per_a * std::abs(current_a);
    return target_c + (temp_c - target_c) * std::exp(-relax_rate_per_s * dt_s);
}

BatteryState step_battery(const BatteryState& state, const BatteryParams& params,
                          double net_power_w, double dt_s, const ThermalParams& thermal) {
    if (!(dt_s > 0.0))
        throw std::domain_error("dt must be > 0");

    BatteryState next;
    next.current_a = net_power_w / params.nominal_voltage_v;

    const CurrentSample sample{next.current_a, dt_s};
    const auto soc = soc_update(state.soc_pct, std::span<const CurrentSample>(&sample, 1),
                                params.capacity_ah);
    next.soc_pct = soc.soc_pct;
    next.clamp_event = soc.clamped;

    // Drop applies only while discharging; the terminal never reads below zero.
    const double drop_v =
        terminal_voltage_drop(std::max(-next.current_a, 0.0), params.internal_resistance_ohm);
    next.terminal_voltage_v = std::max(0.0, params.nominal_voltage_v - drop_v);

    next.temperature_c = temperature_step(state.temperature_c, next.current_a, dt_s,
                                          thermal.ambient_c, thermal.heat_coeff_c_per_a,
                                          thermal.relax_rate_per_s);
    return next;
}

} // namespace pvshare
