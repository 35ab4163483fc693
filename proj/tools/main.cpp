#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pvshare/config.hpp"
#include "pvshare/controller.hpp"
#include "pvshare/errors.hpp"
#include "pvshare/telemetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

int run_simulate(const std::string& config_path, const std::string& out_path) {
    pvshare::SystemConfig config = config_path.empty()
                                       ? pvshare::default_config()
                                       : pvshare::load_config_file(config_path);

    const auto records = pvshare::run(config);

    std::ofstream out(out_path);
    if (!out)
        throw pvshare::IoError("cannot write output file '" + out_path + "'");
    pvshare::write_telemetry_csv(out, records);
    out.flush();
    if (!out)
        throw pvshare::IoError("failed writing output file '" + out_path + "'");

    std::cout << "wrote " << out_path << " (" << records.size() << " rows)\n";
    pvshare::print_report(std::cout, pvshare::make_report(records, config));
    return kExitOk;
}

int run_scenario(double soc1, double soc2, double threshold) {
    const pvshare::ControllerConfig controller{threshold, 0.0};
    const auto decision = pvshare::decide(soc1, soc2, controller);
    const int scenario = pvshare::scenario_of(decision);

    const auto onoff = [](bool b) { return b ? "on" : "off"; };
    std::cout << "soc1 = " << soc1 << " %, soc2 = " << soc2 << " %, threshold = " << threshold
              << " %\n";
    std::cout << "switches: s12=" << onoff(decision.s12) << " s21=" << onoff(decision.s21)
              << "  loads: l1=" << onoff(decision.l1) << " l2=" << onoff(decision.l2) << "\n";
    std::cout << "scenario " << scenario << ": " << pvshare::scenario_advantage(scenario) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-subsystem solar+battery microgrid simulator with rule-based battery sharing"};
    app.set_version_flag("--version", "pvshare 1.0.0");
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto* simulate = app.add_subcommand("simulate", "Run a configured simulation and write telemetry CSV");
    simulate->add_option("--config", config_path, "Config file (omit to use built-in defaults)");
    simulate->add_option("--out", out_path, "Output telemetry CSV path")->required();

    double soc1 = 0.0;
    double soc2 = 0.0;
    double threshold = 50.0;
    auto* scenario = app.add_subcommand("scenario", "Evaluate the sharing decision for one SOC pair");
    scenario->add_option("--soc1", soc1, "Battery 1 state of charge, percent")->required();
    scenario->add_option("--soc2", soc2, "Battery 2 state of charge, percent")->required();
    scenario->add_option("--threshold", threshold, "Sufficiency threshold, percent")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (simulate->parsed())
            return run_simulate(config_path, out_path);
        return run_scenario(soc1, soc2, threshold);
    } catch (const pvshare::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
