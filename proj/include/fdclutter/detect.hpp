#pragma once

#include <cstdint>
#include <vector>

#include "fdclutter/covariance.hpp"

namespace fdclutter {

/// Point target in clutter plus white noise, square-law detector on the
/// optimal linear filter output, threshold at a fixed false-alarm rate.
struct DetectionScenario {
    WaveformConfig cfg;
    ClutterRegion region;

    double target_range_m = 0.0;
    double target_velocity_mps = 0.0;
    double target_direction_sine = 0.0;

    std::vector<double> snr_db;  // matched-filter SNR sweep
    double pfa = 1e-3;
    long trials_h0 = 100000;
    long trials_h1 = 10000;

    /// Per-voxel clutter amplitude power (circular complex Gaussian, iid);
    /// 0 resolves it from clutter_to_noise_db and the voxel count.
    double per_voxel_power = 0.0;
    double clutter_to_noise_db = 40.0;
    double noise_power = 1.0;

    std::uint64_t seed = 1;
    int jobs = 0;  // 0 = hardware concurrency
};

struct DetectionPoint {
    double snr_db = 0.0;
    double pd = 0.0;
};

struct DetectionResult {
    std::vector<DetectionPoint> points;
    double threshold = 0.0;
    double pfa_achieved = 0.0;  // on a fresh draw of trials_h0 baseline trials
    long trials_h0 = 0;
    long trials_h1 = 0;
};

/// Monte Carlo detection probabilities per SNR point. Deterministic given the
/// scenario seed and trial counts, independent of the worker count. Throws
/// when the target sits inside the clutter region.
DetectionResult simulate_pd(const DetectionScenario& scenario);

}  // namespace fdclutter
