#include "pvshare/load.hpp"

#include <stdexcept>

namespace pvshare {

void Appliance::validate() const {
    if (!(unit_power_w > 0.0))
        throw std::domain_error("appliance '" + name + "' unit power must be > 0");
    if (count < 1)
        throw std::domain_error("appliance '" + name + "' count must be >= 1");
}

void LoadConstitution::validate() const {
    for (const auto& a : appliances)
        a.validate();
}

double total_power(const LoadConstitution& constitution) {
    double watts = 0.0;
    for (const auto& a : constitution.appliances)
        watts += a.unit_power_w * a.count;
    return watts;
}

double demand(const LoadConstitution& constitution, bool relay_on) {
    return relay_on ? total_power(constitution) : 0.0;
}

LoadConstitution bundled_load1() {
    return LoadConstitution{
        "load1",
        {
            {"tube light", 45.0, 6},
            {"ceiling fan", 80.0, 7},
            {"computer", 100.0, 1},
        },
    };
}

LoadConstitution bundled_load2() {
    return LoadConstitution{
        "load2",
        {
            {"tube light", 45.0, 6},
            {"bulb", 100.0, 4},
            {"LCD TV", 200.0, 1},
        },
    };
}

} // namespace pvshare
