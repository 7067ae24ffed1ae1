#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fdclutter/detect.hpp"

using namespace fdclutter;

namespace {

constexpr double kC = 299792458.0;

DetectionScenario small_scenario() {
    const double lam = kC / 10e9;
    DetectionScenario s;
    s.cfg = adapt_fda(32, 1, assign_random(32, 4, 3), 10e9, 1e6, lam / 4.0);
    s.region = clutter_region_fractions(s.cfg, 0.0, 1.0 / 8.0);
    s.region.range_grid = 24;
    s.region.direction_grid = 24;
    s.target_range_m = 0.4 * kC / (2.0 * s.cfg.freq_step_hz);
    s.target_direction_sine = 0.35 * unambiguous_direction_halfwidth(s.cfg);
    s.snr_db = {10.0, 16.0};
    s.pfa = 1e-2;
    s.trials_h0 = 5000;
    s.trials_h1 = 1500;
    s.seed = 9;
    s.jobs = 2;
    return s;
}

}  // namespace

TEST_CASE("very strong targets are always detected") {
    DetectionScenario s = small_scenario();
    s.snr_db = {60.0};
    const DetectionResult result = simulate_pd(s);
    REQUIRE(result.points.size() == 1);
    CHECK(result.points[0].pd > 0.999);
}

TEST_CASE("a zero-amplitude target alarms at the false-alarm rate") {
    DetectionScenario s = small_scenario();
    s.snr_db = {-300.0};  // amplitude numerically zero
    s.trials_h1 = 20000;
    const DetectionResult result = simulate_pd(s);
    const double sigma = std::sqrt(s.pfa * (1.0 - s.pfa) / s.trials_h1);
    CHECK(std::abs(result.points[0].pd - s.pfa) < 3.0 * sigma);
}

TEST_CASE("achieved false-alarm rate matches the design point") {
    const DetectionResult result = simulate_pd(small_scenario());
    const double pfa = 1e-2;
    const double sigma = std::sqrt(pfa * (1.0 - pfa) / 5000.0);
    CHECK(std::abs(result.pfa_achieved - pfa) < 3.0 * sigma);
}

TEST_CASE("detection probability grows with SNR") {
    DetectionScenario s = small_scenario();
    s.snr_db = {6.0, 10.0, 14.0, 18.0, 22.0};
    s.trials_h1 = 4000;
    const DetectionResult result = simulate_pd(s);
    for (std::size_t i = 1; i < result.points.size(); ++i) {
        const double a = result.points[i - 1].pd, b = result.points[i].pd;
        const double noise = 2.0 * std::sqrt((a * (1 - a) + b * (1 - b)) / s.trials_h1 +
                                             1e-12);
        CHECK(b >= a - noise);
    }
}

TEST_CASE("identical seeds and trial counts reproduce bit for bit") {
    DetectionScenario s = small_scenario();
    const DetectionResult a = simulate_pd(s);
    const DetectionResult b = simulate_pd(s);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].pd == b.points[i].pd);
    CHECK(a.threshold == b.threshold);
    CHECK(a.pfa_achieved == b.pfa_achieved);

    s.jobs = 1;  // worker count must not change the draw
    const DetectionResult c = simulate_pd(s);
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].pd == c.points[i].pd);

    s.jobs = 2;
    s.seed += 1;
    const DetectionResult d = simulate_pd(s);
    CHECK(a.threshold != d.threshold);
}

TEST_CASE("scenario validation") {
    DetectionScenario s = small_scenario();
    s.target_direction_sine = 0.0;  // inside the clutter direction region
    CHECK_THROWS_AS(simulate_pd(s), std::invalid_argument);

    s = small_scenario();
    s.pfa = 0.0;
    CHECK_THROWS_AS(simulate_pd(s), std::invalid_argument);

    s = small_scenario();
    s.trials_h0 = 100;  // below 10/pfa
    s.pfa = 1e-3;
    CHECK_THROWS_AS(simulate_pd(s), std::invalid_argument);
}

TEST_CASE("ridge-coupled scenario accepts targets off the ridge") {
    const double lam = kC / 10e9;
    DetectionScenario s;
    s.cfg = adapt_stap(4, 4, 4, assign_random(4, 2, 5), (lam / 2) / (2 * 1e-4), 10e9, 1e6,
                       4 * lam / 2, lam / 2, 1e-4);
    s.region = clutter_region_fractions(s.cfg, 0.0, 0.5);
    s.region.range_grid = 16;
    s.region.direction_grid = 16;
    // In the clutter direction band but moving off the ridge.
    s.target_range_m = 10.0;
    s.target_direction_sine = 0.1;
    s.target_velocity_mps = 30.0;
    s.snr_db = {20.0};
    s.pfa = 1e-2;
    s.trials_h0 = 4000;
    s.trials_h1 = 500;
    const DetectionResult result = simulate_pd(s);
    CHECK(result.points[0].pd > 0.0);

    s.target_velocity_mps = s.target_direction_sine * s.region.ridge_speed_mps;
    CHECK_THROWS_AS(simulate_pd(s), std::invalid_argument);
}
