#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pvshare/battery.hpp"
#include "pvshare/controller.hpp"
#include "pvshare/load.hpp"
#include "pvshare/pv_profile.hpp"

namespace pvshare {

enum class TemperatureMode {
    model,  // first-order thermal model
    replay, // take battery temperature from the measurement profile
};

// Everything a run needs: two PV+battery subsystems, their load banks,
// the controller, and the stepping parameters.
struct SystemConfig {
    BatteryParams battery1;
    BatteryParams battery2;
    LoadConstitution load1;
    LoadConstitution load2;
    PVProfile profile1;
    PVProfile profile2;
    ControllerConfig controller;
    ThermalParams thermal;
    double dt_s = 60.0;
    double start_time_h = 9.0;
    double duration_s = 21600.0;
    TemperatureMode temperature_mode = TemperatureMode::model;

    void validate() const;
};

// One step's full observable state. time_h is the step start; battery
// columns are end-of-step values; powers and relays apply during the step.
struct TelemetryRecord {
    double time_h = 0.0;
    double soc1 = 0.0, soc2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
    double i1 = 0.0, i2 = 0.0;
    double temp1 = 0.0, temp2 = 0.0;
    double p_pv1 = 0.0, p_pv2 = 0.0;
    double p_load1 = 0.0, p_load2 = 0.0;
    bool s12 = false, s21 = false, l1 = false, l2 = false;
    int scenario = 0;
    bool clamp1 = false, clamp2 = false;

    bool operator==(const TelemetryRecord&) const = default;
};

struct WorldState {
    double time_h = 0.0;
    BatteryState battery1;
    BatteryState battery2;
    std::optional<SwitchState> previous_decision;
};

WorldState initial_state(const SystemConfig& config);

// Number of records a run produces: ceil(duration / dt).
long step_count(const SystemConfig& config);

// Advances one step: samples PV, decides the relays from start-of-step SOCs,
// routes each energized load to its feeding subsystem (its own unless a tie
// switch redirects it), integrates both batteries, emits the record.
std::pair<WorldState, TelemetryRecord> step(const WorldState& world, const SystemConfig& config,
                                            double dt_s);
std::pair<WorldState, TelemetryRecord> step(const WorldState& world, const SystemConfig& config);

// Runs the configured duration. The final step is shortened when dt does not
// divide the duration. Deterministic: identical configs give identical records.
std::vector<TelemetryRecord> run(const SystemConfig& config);

// Absolute conservation residual in Wh: PV energy in, load energy out,
// change of stored energy (SOC fraction * capacity * nominal voltage).
// Refuses runs containing clamp events, where the balance is undefined.
double energy_balance(const std::vector<TelemetryRecord>& records, const SystemConfig& config);

} // namespace pvshare
