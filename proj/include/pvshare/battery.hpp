#pragma once

#include <initializer_list>
#include <span>

namespace pvshare {

// Static ratings of one battery.
struct BatteryParams {
    double capacity_ah = 200.0;            // nominal capacity
    double internal_resistance_ohm = 0.05;
    double nominal_voltage_v = 12.0;
    double initial_soc_pct = 50.0;

    void validate() const; // throws std::domain_error on invariant violation
};

// Evolving per-step battery state. Current is signed: positive = charging,
// negative = discharging.
struct BatteryState {
    double soc_pct = 0.0;
    double current_a = 0.0;
    double terminal_voltage_v = 0.0;
    double temperature_c = 0.0;
    bool clamp_event = false; // SOC hit a bound during the step that produced this state

    bool operator==(const BatteryState&) const = default;
};

// One piece of a piecewise-constant current history.
struct CurrentSample {
    double current_a = 0.0; // signed, positive = charging
    double duration_s = 0.0;
};

// First-order thermal model coefficients: the cell relaxes toward
// ambient_c + heat_coeff_c_per_a * |current| at relax_rate_per_s.
struct ThermalParams {
    double ambient_c = 30.0;
    double heat_coeff_c_per_a = 1.75;
    double relax_rate_per_s = 1.0 / 600.0;

    void validate() const;
};

struct SocUpdateResult {
    double soc_pct = 0.0;
    bool clamped = false;
};

// Voltage drop across the internal resistance at the given discharge current.
// The integrator subtracts this from the nominal voltage.
double terminal_voltage_drop(double discharge_current_a, double internal_resistance_ohm);

// Coulomb counting: advances SOC by the integrated current over the sample
// list, rectangle rule. The result is clamped to [0, 100]; `clamped` reports
// whether the bound was hit.
SocUpdateResult soc_update(double soc_start_pct, std::span<const CurrentSample> samples,
                           double capacity_ah);
SocUpdateResult soc_update(double soc_start_pct, std::initializer_list<CurrentSample> samples,
                           double capacity_ah);

// Mean current implied by a SOC swing over a time interval. Positive for a
// falling SOC (net discharge), negative for net charging.
double average_discharge_current(double soc_high_pct, double soc_low_pct, double capacity_ah,
                                 double t_start_s, double t_end_s);

// One step of the thermal model; exact for any dt.
double temperature_step(double temp_c, double current_a, double dt_s, double ambient_c,
                        double heat_coeff_c_per_a, double relax_rate_per_s);

// Advances one battery by dt under a power imbalance (positive = surplus
// charges the battery). Converts power to current at the nominal voltage,
// coulomb-counts the SOC, updates terminal voltage and temperature.
BatteryState step_battery(const BatteryState& state, const BatteryParams& params,
                          double net_power_w, double dt_s, const ThermalParams& thermal = {});

} // namespace pvshare
