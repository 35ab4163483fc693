#include "pvshare/controller.hpp"

#include <stdexcept>

namespace pvshare {

namespace {

// Recovers each battery's classification from the relay pattern it produced.
bool classified_sufficient_1(const SwitchState& d) { return d.s12 || (d.l1 && !d.s21); }
bool classified_sufficient_2(const SwitchState& d) { return d.s21 || (d.l2 && !d.s12); }

bool classify(double soc_pct, const ControllerConfig& config, std::optional<bool> prior) {
    if (config.hysteresis_pct > 0.0 && prior.has_value()) {
        if (soc_pct >= config.threshold_pct + config.hysteresis_pct)
            return true;
        if (soc_pct < config.threshold_pct - config.hysteresis_pct)
            return false;
        return *prior; // inside the dead band: hold
    }
    return soc_pct >= config.threshold_pct;
}

} // namespace

void ControllerConfig::validate() const {
    if (!(threshold_pct > 0.0 && threshold_pct < 100.0))
        throw std::domain_error("controller threshold_pct must be inside (0, 100)");
    if (hysteresis_pct < 0.0)
        throw std::domain_error("controller hysteresis_pct must be >= 0");
    if (!(threshold_pct - hysteresis_pct > 0.0 && threshold_pct + hysteresis_pct < 100.0))
        throw std::domain_error(
            "controller threshold_pct +/- hysteresis_pct must stay inside (0, 100)");
}

SwitchState decide(double soc1_pct, double soc2_pct, const ControllerConfig& config,
                   const std::optional<SwitchState>& previous) {
    config.validate();
    if (!(soc1_pct >= 0.0 && soc1_pct <= 100.0) || !(soc2_pct >= 0.0 && soc2_pct <= 100.0))
        throw std::domain_error("SOC must be within [0, 100]");

    std::optional<bool> prior1, prior2;
    if (previous.has_value()) {
        prior1 = classified_sufficient_1(*previous);
        prior2 = classified_sufficient_2(*previous);
    }
    const bool sufficient1 = classify(soc1_pct, config, prior1);
    const bool sufficient2 = classify(soc2_pct, config, prior2);

    SwitchState decision;
    if (sufficient1 && sufficient2) {
        decision.l1 = true;
        decision.l2 = true;
    } else if (sufficient1) {
        decision.s12 = true;
        decision.l2 = true;
    } else if (sufficient2) {
        decision.s21 = true;
        decision.l1 = true;
    }
    return decision;
}

int scenario_of(const SwitchState& decision) {
    if (decision == SwitchState{.s12 = true, .l2 = true})
        return 1;
    if (decision == SwitchState{.l1 = true, .l2 = true})
        return 2;
    if (decision == SwitchState{})
        return 3;
    if (decision == SwitchState{.s21 = true, .l1 = true})
        return 4;
    throw std::domain_error("switch state is not one of the four controller patterns");
}

std::string_view scenario_advantage(int scenario) {
    switch (scenario) {
    case 1: return "No supply to the load 1";
    case 2: return "Maximum supply to the loads";
    case 3: return "No supply to the loads";
    case 4: return "No supply to the load 2";
    default: throw std::domain_error("scenario index must be within 1..4");
    }
}

} // namespace pvshare
