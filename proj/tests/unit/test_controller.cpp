#include "doctest.h"

#include <stdexcept>

#include <random>

#include "pvshare/controller.hpp"

using namespace pvshare;

namespace {

SwitchState mirror(const SwitchState& s) {
    return {.s12 = s.s21, .s21 = s.s12, .l1 = s.l2, .l2 = s.l1};
}

} // namespace

TEST_SUITE("controller") {

TEST_CASE("decision table covers the four relay patterns") {
    CHECK(decide(52.0, 35.0) == SwitchState{.s12 = true, .l2 = true});
    CHECK(decide(90.0, 75.0) == SwitchState{.l1 = true, .l2 = true});
    CHECK(decide(35.0, 25.0) == SwitchState{});
    CHECK(decide(35.0, 90.0) == SwitchState{.s21 = true, .l1 = true});
}

TEST_CASE("sufficiency is inclusive at the threshold") {
    CHECK(scenario_of(decide(50.0, 50.0)) == 2);
    CHECK(scenario_of(decide(50.0, 49.999)) == 1);
    CHECK(scenario_of(decide(49.999, 50.0)) == 4);
    CHECK(scenario_of(decide(49.999, 49.999)) == 3);
}

TEST_CASE("threshold is configurable") {
    const ControllerConfig lax{.threshold_pct = 30.0};
    CHECK(scenario_of(decide(52.0, 35.0, lax)) == 2);
    const ControllerConfig strict{.threshold_pct = 80.0};
    CHECK(scenario_of(decide(52.0, 35.0, strict)) == 3);
}

TEST_CASE("swapping the batteries mirrors the decision") {
    std::mt19937 rng(49);
    std::uniform_real_distribution<double> soc(0.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = soc(rng), b = soc(rng);
        CHECK(decide(a, b) == mirror(decide(b, a)));
    }
    // including exactly at the threshold
    CHECK(decide(50.0, 20.0) == mirror(decide(20.0, 50.0)));
}

TEST_CASE("every decision is one of the four patterns") {
    std::mt19937 rng(50);
    std::uniform_real_distribution<double> soc(0.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const int scenario = scenario_of(decide(soc(rng), soc(rng)));
        CHECK(scenario >= 1);
        CHECK(scenario <= 4);
    }
}

TEST_CASE("a donating subsystem always sheds its own load") {
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> soc(0.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const auto d = decide(soc(rng), soc(rng));
        CHECK_FALSE((d.s12 && d.s21)); // at most one tie
        if (d.s12)
            CHECK_FALSE(d.l1);
        if (d.s21)
            CHECK_FALSE(d.l2);
    }
}

TEST_CASE("hysteresis holds the previous classification inside the dead band") {
    const ControllerConfig cfg{.threshold_pct = 50.0, .hysteresis_pct = 5.0};
    const SwitchState both_on{.l1 = true, .l2 = true};
    const SwitchState none{};

    // falling from sufficient: stays on through the band, drops below 45
    CHECK(decide(46.0, 60.0, cfg, both_on) == both_on);
    CHECK(decide(44.9, 60.0, cfg, both_on) == SwitchState{.s21 = true, .l1 = true});

    // rising from insufficient: stays off through the band, turns on at 55
    CHECK(decide(52.0, 60.0, cfg, SwitchState{.s21 = true, .l1 = true}) ==
          SwitchState{.s21 = true, .l1 = true});
    CHECK(decide(55.0, 60.0, cfg, SwitchState{.s21 = true, .l1 = true}) == both_on);

    // both held insufficient
    CHECK(decide(50.0, 50.0, cfg, none) == none);
    // both held sufficient
    CHECK(decide(50.0, 50.0, cfg, both_on) == both_on);

    // prior classifications are recovered from donor patterns too
    const SwitchState donor1{.s12 = true, .l2 = true}; // 1 sufficient, 2 not
    CHECK(decide(50.0, 50.0, cfg, donor1) == donor1);
    const SwitchState donor2{.s21 = true, .l1 = true}; // 2 sufficient, 1 not
    CHECK(decide(50.0, 50.0, cfg, donor2) == donor2);
}

TEST_CASE("without a previous decision the plain threshold applies") {
    const ControllerConfig cfg{.threshold_pct = 50.0, .hysteresis_pct = 5.0};
    CHECK(scenario_of(decide(52.0, 52.0, cfg)) == 2);
    CHECK(scenario_of(decide(48.0, 48.0, cfg)) == 3);
}

TEST_CASE("zero hysteresis ignores the previous decision") {
    const ControllerConfig cfg{.threshold_pct = 50.0, .hysteresis_pct = 0.0};
    const SwitchState both_on{.l1 = true, .l2 = true};
    CHECK(decide(49.0, 60.0, cfg, both_on) == SwitchState{.s21 = true, .l1 = true});
    CHECK(decide(51.0, 60.0, cfg, SwitchState{}) == both_on);
}

TEST_CASE("inputs are validated") {
    CHECK_THROWS_AS(decide(-0.1, 50.0), std::domain_error);
    CHECK_THROWS_AS(decide(50.0, 100.1), std::domain_error);
    CHECK_THROWS_AS(decide(50.0, 50.0, ControllerConfig{.threshold_pct = 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(decide(50.0, 50.0, ControllerConfig{.threshold_pct = 100.0}),
                    std::domain_error);
    CHECK_THROWS_AS(
        decide(50.0, 50.0, ControllerConfig{.threshold_pct = 50.0, .hysteresis_pct = -1.0}),
        std::domain_error);
    CHECK_THROWS_AS(
        decide(50.0, 50.0, ControllerConfig{.threshold_pct = 50.0, .hysteresis_pct = 50.0}),
        std::domain_error);
}

TEST_CASE("scenario indices map to the four patterns only") {
    CHECK(scenario_of(SwitchState{.s12 = true, .l2 = true}) == 1);
    CHECK(scenario_of(SwitchState{.l1 = true, .l2 = true}) == 2);
    CHECK(scenario_of(SwitchState{}) == 3);
    CHECK(scenario_of(SwitchState{.s21 = true, .l1 = true}) == 4);
    CHECK_THROWS_AS(scenario_of(SwitchState{.l1 = true}), std::domain_error);
    CHECK_THROWS_AS(scenario_of(SwitchState{.s12 = true}), std::domain_error);
    CHECK_THROWS_AS(scenario_of(SwitchState{.s12 = true, .s21 = true, .l1 = true, .l2 = true}),
                    std::domain_error);
}

TEST_CASE("scenario consequences") {
    CHECK(scenario_advantage(1) == "No supply to the load 1");
    CHECK(scenario_advantage(2) == "Maximum supply to the loads");
    CHECK(scenario_advantage(3) == "No supply to the loads");
    CHECK(scenario_advantage(4) == "No supply to the load 2");
    CHECK_THROWS_AS(scenario_advantage(0), std::domain_error);
    CHECK_THROWS_AS(scenario_advantage(5), std::domain_error);
}

} // TEST_SUITE
