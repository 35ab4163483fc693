#pragma once

#include <string>
#include <vector>

namespace pvshare {

struct Appliance {
    std::string name;
    double unit_power_w = 0.0;
    int count = 0;

    void validate() const;
};

// A bank of appliances behind one load relay.
struct LoadConstitution {
    std::string label;
    std::vector<Appliance> appliances;

    void validate() const;
};

// Sum of unit_power * count over the bank.
double total_power(const LoadConstitution& constitution);

// Instantaneous draw: total power when the relay is closed, zero otherwise.
double demand(const LoadConstitution& constitution, bool relay_on);

// Default residential banks shipped with the simulator (930 W and 870 W).
LoadConstitution bundled_load1();
LoadConstitution bundled_load2();

} // namespace pvshare
