#pragma once

#include <optional>
#include <string_view>

namespace pvshare {

// Relay decision for the two subsystems. s12 closes the tie from subsystem 1's
// battery bus to load 2, s21 the reverse tie. l1/l2 energize the load banks.
// At most one tie is closed, and a donating subsystem sheds its own load.
struct SwitchState {
    bool s12 = false;
    bool s21 = false;
    bool l1 = false;
    bool l2 = false;

    bool operator==(const SwitchState&) const = default;
};

struct ControllerConfig {
    double threshold_pct = 50.0;  // SOC level above which a battery counts as sufficient
    double hysteresis_pct = 0.0;  // dead band half-width; 0 disables latching

    void validate() const;
};

// Rule set over both batteries' SOC:
//   both sufficient        -> both loads on, ties open
//   only battery 1         -> s12 closed, load 2 on, load 1 shed
//   only battery 2         -> s21 closed, load 1 on, load 2 shed
//   neither                -> everything open
// "Sufficient" means SOC >= threshold. With hysteresis h > 0 and a previous
// decision, a battery switches to sufficient at SOC >= threshold + h, back at
// SOC < threshold - h, and keeps its prior classification in between; without
// a previous decision the plain threshold comparison applies.
SwitchState decide(double soc1_pct, double soc2_pct, const ControllerConfig& config = {},
                   const std::optional<SwitchState>& previous = std::nullopt);

// Index 1..4 of the relay pattern; throws std::domain_error for any state
// the controller can never produce.
int scenario_of(const SwitchState& decision);

// Human-readable consequence of a scenario, as printed by the CLI.
std::string_view scenario_advantage(int scenario);

} // namespace pvshare
