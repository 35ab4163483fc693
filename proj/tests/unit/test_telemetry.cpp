#include "doctest.h"

#include <stdexcept>

#include <random>
#include <sstream>
#include <string>

#include "pvshare/config.hpp"
#include "pvshare/errors.hpp"
#include "pvshare/telemetry.hpp"

using namespace pvshare;

TEST_SUITE("telemetry") {

TEST_CASE("the CSV column order is pinned") {
    CHECK(telemetry_csv_header() ==
          "time_h,soc1,soc2,v1,v2,i1,i2,temp1,temp2,p_pv1,p_pv2,p_load1,p_load2,"
          "s12,s21,l1,l2,scenario,clamp1,clamp2");
}

TEST_CASE("a default run serializes to header plus one row per step") {
    const auto records = run(default_config());
    const auto csv = telemetry_to_csv(records);
    long lines = 0;
    for (char c : csv)
        if (c == '\n')
            ++lines;
    CHECK(lines == 361); // header + 360 steps
    CHECK(csv.rfind(telemetry_csv_header(), 0) == 0);
    CHECK(csv.back() == '\n');
}

TEST_CASE("serialized telemetry reads back bit-identically") {
    const auto records = run(default_config());
    CHECK(read_telemetry_csv(telemetry_to_csv(records)) == records);
}

TEST_CASE("round-trip holds for synthetic records") {
    std::mt19937 rng(52);
    std::uniform_real_distribution<double> value(-1000.0, 1000.0);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> scenario(1, 4);
    std::vector<TelemetryRecord> records;
    for (int i = 0; i < 200; ++i) {
        TelemetryRecord r;
        r.time_h = value(rng);
        r.soc1 = value(rng) / 10.0 + 50.0;
        r.soc2 = 100.0 / 3.0; // awkward decimal expansion on purpose
        r.v1 = value(rng);
        r.v2 = 1e-300;
        r.i1 = value(rng);
        r.i2 = value(rng);
        r.temp1 = value(rng);
        r.temp2 = value(rng);
        r.p_pv1 = value(rng);
        r.p_pv2 = value(rng);
        r.p_load1 = value(rng);
        r.p_load2 = value(rng);
        r.s12 = coin(rng) != 0;
        r.s21 = coin(rng) != 0;
        r.l1 = coin(rng) != 0;
        r.l2 = coin(rng) != 0;
        r.scenario = scenario(rng);
        r.clamp1 = coin(rng) != 0;
        r.clamp2 = coin(rng) != 0;
        records.push_back(r);
    }
    CHECK(read_telemetry_csv(telemetry_to_csv(records)) == records);
}

TEST_CASE("stream and string writers agree") {
    const auto records = run(default_config());
    std::ostringstream out;
    write_telemetry_csv(out, records);
    CHECK(out.str() == telemetry_to_csv(records));
    std::istringstream in(out.str());
    CHECK(read_telemetry_csv(in) == records);
}

TEST_CASE("the reader is strict about the format") {
    const std::string header(telemetry_csv_header());
    const std::string row =
        "9,50,50,12,12,0,0,30,30,0,0,0,0,0,0,1,1,2,0,0";

    CHECK(read_telemetry_csv(header + "\n" + row + "\n").size() == 1);
    CHECK(read_telemetry_csv(header + "\r\n" + row + "\r\n").size() == 1); // CRLF tolerated

    try {
        read_telemetry_csv(row + "\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }

    try {
        read_telemetry_csv(header + "\n9,50,50\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(read_telemetry_csv(""), ParseError);
    // booleans must be 0/1
    CHECK_THROWS_AS(
        read_telemetry_csv(header + "\n9,50,50,12,12,0,0,30,30,0,0,0,0,2,0,1,1,2,0,0\n"),
        ParseError);
    // scenario must be 1..4
    CHECK_THROWS_AS(
        read_telemetry_csv(header + "\n9,50,50,12,12,0,0,30,30,0,0,0,0,0,0,1,1,5,0,0\n"),
        ParseError);
    CHECK_THROWS_AS(
        read_telemetry_csv(header + "\n9,50,50,12,12,0,0,30,30,0,0,0,0,0,0,1,1,x,0,0\n"),
        ParseError);
    // numbers must parse in full
    CHECK_THROWS_AS(
        read_telemetry_csv(header + "\n9,50abc,50,12,12,0,0,30,30,0,0,0,0,0,0,1,1,2,0,0\n"),
        ParseError);
}

TEST_CASE("the run report aggregates the records") {
    SystemConfig config;
    config.battery1.initial_soc_pct = 100.0;
    config.battery2.initial_soc_pct = 100.0;
    config.load1 = bundled_load1();
    config.load2 = bundled_load2();
    config.profile1.samples = {{9.0, 0.0, 0.0, 30.0}};
    config.profile2.samples = {{9.0, 0.0, 0.0, 30.0}};
    config.dt_s = 3600.0;
    config.duration_s = 5400.0; // full hour plus a half-hour tail step

    const auto records = run(config);
    const auto report = make_report(records, config);
    CHECK(report.scenario_counts.at(2) == 2);
    CHECK(report.scenario_counts.size() == 1);
    CHECK(report.final_soc1_pct == records.back().soc1);
    CHECK(report.final_soc2_pct == records.back().soc2);
    CHECK(report.energy_load1_wh == doctest::Approx(1395.0).epsilon(1e-12)); // 930 * 1.5 h
    CHECK(report.energy_load2_wh == doctest::Approx(1305.0).epsilon(1e-12)); // 870 * 1.5 h
    CHECK(report.clamp_event_count == 0);

    std::ostringstream out;
    print_report(out, report);
    CHECK(out.str().find("scenario counts: 1:0 2:2 3:0 4:0 (2 steps)") != std::string::npos);
    CHECK(out.str().find("clamp events: 0") != std::string::npos);

    CHECK_THROWS_AS(make_report({}, config), std::domain_error);
}

} // TEST_SUITE
