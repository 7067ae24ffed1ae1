#include "fdclutter/detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdclutter/parallel.hpp"
#include "fdclutter/rng.hpp"

namespace fdclutter {

namespace {

constexpr std::uint64_t kTagH0 = 0x10000000ULL;
constexpr std::uint64_t kTagH0Fresh = 0x20000000ULL;
constexpr std::uint64_t kTagH1 = 0x40000000ULL;

struct Voxel {
    double range_m, velocity_mps, direction_sine;
};

std::vector<double> midpoints(const Interval& iv, int grid) {
    if (iv.is_point()) return {iv.lo};
    std::vector<double> out(grid);
    const double h = iv.width() / grid;
    for (int k = 0; k < grid; ++k) out[k] = iv.lo + (k + 0.5) * h;
    return out;
}

bool target_inside_region(const DetectionScenario& s) {
    if (!s.region.range_m.contains(s.target_range_m)) return false;
    if (!s.region.direction_sine.contains(s.target_direction_sine)) return false;
    if (s.region.has_ridge()) {
        const double ridge_v = s.target_direction_sine * s.region.ridge_speed_mps;
        const double scale = std::max(1.0, std::abs(ridge_v));
        return std::abs(s.target_velocity_mps - ridge_v) <= 1e-9 * scale;
    }
    return s.region.velocity_mps.contains(s.target_velocity_mps);
}

}  // namespace

DetectionResult simulate_pd(const DetectionScenario& scenario) {
    const WaveformConfig& cfg = scenario.cfg;
    cfg.validate();
    validate_region(cfg, scenario.region);
    if (scenario.pfa <= 0.0 || scenario.pfa >= 1.0)
        throw std::invalid_argument("pfa must lie in (0, 1)");
    if (scenario.trials_h0 < static_cast<long>(10.0 / scenario.pfa))
        throw std::invalid_argument("trials_h0 must be at least 10/pfa for a stable threshold");
    if (scenario.trials_h1 < 1) throw std::invalid_argument("trials_h1 must be >= 1");
    if (scenario.noise_power <= 0.0) throw std::invalid_argument("noise power must be > 0");
    if (target_inside_region(scenario))
        throw std::invalid_argument("target must lie outside the clutter region");

    const AugmentedFdcm afdcm = build_afdcm(cfg);
    const SampleGeometry geom = sample_geometry(cfg, afdcm);
    const auto blocks = partition_blocks(cfg, afdcm);
    const int dim = geom.size();

    // Voxel grid over the clutter region. The range grid must resolve every
    // code difference so the voxel covariance keeps the exact block zeros.
    int code_span = 0;
    for (int i = 0; i < dim; ++i)
        code_span = std::max(code_span, geom.code[i] - geom.code.minCoeff());
    const int grid_d =
        scenario.region.range_grid > 0 ? scenario.region.range_grid : std::max(64, code_span + 1);
    if (grid_d <= code_span)
        throw std::invalid_argument("range grid too coarse for the code spread");
    const int grid_v = scenario.region.velocity_grid > 0 ? scenario.region.velocity_grid : 96;
    const int grid_a = scenario.region.direction_grid > 0 ? scenario.region.direction_grid : 96;

    const std::vector<double> ranges = midpoints(scenario.region.range_m, grid_d);
    std::vector<Voxel> voxels;
    if (scenario.region.has_ridge()) {
        for (double d : ranges)
            for (double a : midpoints(scenario.region.direction_sine, grid_a))
                voxels.push_back({d, a * scenario.region.ridge_speed_mps, a});
    } else {
        for (double d : ranges)
            for (double v : midpoints(scenario.region.velocity_mps, grid_v))
                for (double a : midpoints(scenario.region.direction_sine, grid_a))
                    voxels.push_back({d, v, a});
    }
    const long voxel_count = static_cast<long>(voxels.size());
    const double pvp = scenario.per_voxel_power > 0.0
                           ? scenario.per_voxel_power
                           : std::pow(10.0, scenario.clutter_to_noise_db / 10.0) *
                                 scenario.noise_power / static_cast<double>(voxel_count);

    const Eigen::VectorXcd target = steering_vector(geom, scenario.target_range_m,
                                                    scenario.target_velocity_mps,
                                                    scenario.target_direction_sine);

    // The voxel clutter covariance is block diagonal across frequency codes,
    // so the filter solves block by block; a = C^H w is all the trial loop
    // needs, since w^H x depends on the echo only through it.
    Eigen::VectorXcd filter_on_voxels = Eigen::VectorXcd::Zero(voxel_count);
    std::complex<double> filter_dot_target = 0.0;
    double filter_norm2 = 0.0;
    for (const auto& blk : blocks) {
        const int k = blk.dimension;
        Eigen::MatrixXcd columns(k, voxel_count);
        for (long vx = 0; vx < voxel_count; ++vx) {
            const Voxel& v = voxels[static_cast<std::size_t>(vx)];
            for (int i = 0; i < k; ++i) {
                const int n = blk.member_indices[i];
                const double phase = geom.range_rate[n] * v.range_m +
                                     geom.velocity_rate[n] * v.velocity_mps +
                                     geom.direction_rate[n] * v.direction_sine;
                columns(i, vx) = geom.modulation_power[n] * std::polar(1.0, -phase);
            }
        }
        Eigen::MatrixXcd cov = pvp * (columns * columns.adjoint());
        cov.diagonal().array() += scenario.noise_power;
        Eigen::VectorXcd target_block(k);
        for (int i = 0; i < k; ++i) target_block[i] = target[blk.member_indices[i]];
        const Eigen::VectorXcd w_block = Eigen::LLT<Eigen::MatrixXcd>(cov).solve(target_block);
        filter_on_voxels += columns.adjoint() * w_block;
        filter_dot_target += w_block.dot(target_block);
        filter_norm2 += w_block.squaredNorm();
    }
    const double wnorm = std::sqrt(filter_norm2);
    filter_on_voxels /= wnorm;
    filter_dot_target /= wnorm;

    const double clutter_scale = std::sqrt(pvp / 2.0);
    const double noise_scale = std::sqrt(scenario.noise_power / 2.0);
    const Eigen::VectorXcd& a = filter_on_voxels;

    auto trial_statistic = [&](Xoshiro256pp& rng, std::complex<double> mean) {
        std::complex<double> s = mean;
        double g0, g1;
        for (long vx = 0; vx < voxel_count; ++vx) {
            rng.gaussian_pair(g0, g1);
            s += std::conj(a[vx]) * (clutter_scale * std::complex<double>(g0, g1));
        }
        rng.gaussian_pair(g0, g1);
        s += noise_scale * std::complex<double>(g0, g1);
        return std::norm(s);
    };

    auto run_trials = [&](std::uint64_t tag, long count, std::complex<double> mean,
                          std::vector<double>& out) {
        out.resize(static_cast<std::size_t>(count));
        parallel_for(count, scenario.jobs, [&](long i) {
            Xoshiro256pp rng = substream(scenario.seed, tag + static_cast<std::uint64_t>(i));
            out[static_cast<std::size_t>(i)] = trial_statistic(rng, mean);
        });
    };

    std::vector<double> baseline;
    run_trials(kTagH0, scenario.trials_h0, 0.0, baseline);
    std::vector<double> sorted = baseline;
    const long k = std::max<long>(1, std::lround(scenario.pfa * scenario.trials_h0));
    std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end(),
                     std::greater<double>());
    const double threshold = sorted[static_cast<std::size_t>(k - 1)];

    std::vector<double> fresh;
    run_trials(kTagH0Fresh, scenario.trials_h0, 0.0, fresh);
    long alarms = 0;
    for (double s : fresh) alarms += s > threshold;

    DetectionResult result;
    result.threshold = threshold;
    result.pfa_achieved = static_cast<double>(alarms) / static_cast<double>(scenario.trials_h0);
    result.trials_h0 = scenario.trials_h0;
    result.trials_h1 = scenario.trials_h1;
    for (std::size_t j = 0; j < scenario.snr_db.size(); ++j) {
        const double snr_linear = std::pow(10.0, scenario.snr_db[j] / 10.0);
        const double amplitude =
            std::sqrt(snr_linear * scenario.noise_power / target.squaredNorm());
        const std::complex<double> mean = amplitude * filter_dot_target;
        std::vector<double> stats;
        run_trials(kTagH1 + static_cast<std::uint64_t>(j) * 0x100000ULL, scenario.trials_h1,
                   mean, stats);
        long detections = 0;
        for (double s : stats) detections += s > threshold;
        result.points.push_back(
            {scenario.snr_db[j],
             static_cast<double>(detections) / static_cast<double>(scenario.trials_h1)});
    }
    return result;
}

}  // namespace fdclutter
