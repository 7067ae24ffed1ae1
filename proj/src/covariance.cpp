#include "fdclutter/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace fdclutter {

namespace {

constexpr double kRelTol = 1e-9;

/// Sorted unique values with a relative merge tolerance; exact float
/// arithmetic is not guaranteed for positions assembled from spacings.
std::vector<double> unique_sorted(std::vector<double> values) {
    if (values.empty()) return values;
    std::sort(values.begin(), values.end());
    const double scale = std::max(1.0, std::abs(values.back()));
    std::vector<double> out;
    out.push_back(values.front());
    for (double v : values)
        if (v - out.back() > kRelTol * scale) out.push_back(v);
    return out;
}

bool near(double a, double b, double scale) {
    return std::abs(a - b) <= kRelTol * std::max(1.0, std::abs(scale));
}

}  // namespace

double unambiguous_velocity_halfwidth_mps(const WaveformConfig& cfg) {
    return kSpeedOfLight / (4.0 * cfg.carrier_hz * cfg.pri_s);
}

double unambiguous_direction_halfwidth(const WaveformConfig& cfg) {
    const double spacing = cfg.rx_spacing_m;
    if (spacing <= 0.0) return std::numeric_limits<double>::infinity();
    const double denom = (cfg.monostatic_fda ? 4.0 : 2.0) * spacing * cfg.carrier_hz;
    return kSpeedOfLight / denom;
}

ClutterRegion clutter_region_fractions(const WaveformConfig& cfg, double velocity_fraction,
                                       double direction_fraction) {
    if (velocity_fraction < 0.0 || velocity_fraction > 1.0 || direction_fraction < 0.0 ||
        direction_fraction > 1.0)
        throw std::invalid_argument("region fractions must lie in [0, 1]");
    ClutterRegion region;
    region.range_m = {0.0, kSpeedOfLight / (2.0 * cfg.freq_step_hz)};
    const bool has_velocity = cfg.pulses > 1 && cfg.platform_speed_mps == 0.0;
    if (has_velocity) {
        const double v = velocity_fraction * unambiguous_velocity_halfwidth_mps(cfg);
        region.velocity_mps = {-v, v};
    }
    const bool has_direction = cfg.tx_count * cfg.rx_count > 1 &&
                               (cfg.tx_spacing_m > 0.0 || cfg.rx_spacing_m > 0.0);
    if (has_direction) {
        const double a = direction_fraction * unambiguous_direction_halfwidth(cfg);
        region.direction_sine = {-a, a};
    }
    if (cfg.platform_speed_mps > 0.0) {
        region.ridge_speed_mps = cfg.platform_speed_mps;
        region.velocity_mps = {region.direction_sine.lo * cfg.platform_speed_mps,
                               region.direction_sine.hi * cfg.platform_speed_mps};
    }
    return region;
}

ClutterRegion full_clutter_region(const WaveformConfig& cfg) {
    return clutter_region_fractions(cfg, 1.0, 1.0);
}

void validate_region(const WaveformConfig& cfg, const ClutterRegion& region) {
    if (region.range_m.width() < 0.0 || region.velocity_mps.width() < 0.0 ||
        region.direction_sine.width() < 0.0)
        throw std::invalid_argument("region interval is inverted");
    const double range_max = kSpeedOfLight / (2.0 * cfg.freq_step_hz);
    if (region.range_m.lo < -kRelTol * range_max ||
        region.range_m.hi > range_max * (1.0 + kRelTol))
        throw std::invalid_argument("range region exceeds the unambiguous interval");
    const double vmax = unambiguous_velocity_halfwidth_mps(cfg) * (1.0 + kRelTol);
    if (!region.has_ridge() &&
        (region.velocity_mps.lo < -vmax || region.velocity_mps.hi > vmax))
        throw std::invalid_argument("velocity region exceeds the unambiguous interval");
    const double amax = unambiguous_direction_halfwidth(cfg);
    if (std::isfinite(amax) &&
        (region.direction_sine.lo < -amax * (1.0 + kRelTol) ||
         region.direction_sine.hi > amax * (1.0 + kRelTol)))
        throw std::invalid_argument("direction region exceeds the unambiguous interval");
    if (region.ridge_speed_mps < 0.0) throw std::invalid_argument("ridge speed must be >= 0");
    if (region.has_ridge() && cfg.platform_speed_mps > 0.0 &&
        !near(region.ridge_speed_mps, cfg.platform_speed_mps, cfg.platform_speed_mps))
        throw std::invalid_argument("region ridge speed differs from the waveform platform speed");
    if (region.has_ridge() && cfg.platform_speed_mps == 0.0)
        throw std::invalid_argument("ridge-coupled region needs a waveform platform speed");
    if (region.range_grid < 0 || region.velocity_grid < 0 || region.direction_grid < 0)
        throw std::invalid_argument("grid counts must be >= 0");
}

std::vector<FrequencyBlock> partition_blocks(const WaveformConfig& cfg,
                                             const AugmentedFdcm& afdcm) {
    const SampleGeometry geom = sample_geometry(cfg, afdcm);
    std::map<int, FrequencyBlock> by_code;
    for (int n = 0; n < geom.size(); ++n) {
        FrequencyBlock& blk = by_code[geom.code[n]];
        blk.code = geom.code[n];
        blk.member_indices.push_back(n);
    }
    std::vector<FrequencyBlock> blocks;
    blocks.reserve(by_code.size());
    for (auto& [code, blk] : by_code) {
        blk.dimension = static_cast<int>(blk.member_indices.size());
        std::vector<double> times, positions, embedded;
        for (int n : blk.member_indices) {
            times.push_back(geom.pulse_time_s[n]);
            positions.push_back(geom.position_m[n]);
            if (geom.ridge_position_m.size() > 0) embedded.push_back(geom.ridge_position_m[n]);
        }
        blk.temporal_aperture_s = unique_sorted(std::move(times));
        blk.spatial_aperture_m = unique_sorted(std::move(positions));
        blk.embedded_aperture_m = unique_sorted(std::move(embedded));
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

namespace {

struct SampleDecode {
    int p, l, r, q;
};

SampleDecode decode_sample(const WaveformConfig& cfg, int n) {
    const int pq = cfg.pulses * cfg.subbands;
    const int row = n % pq;
    const int col = n / pq;
    return {row / cfg.subbands, col / cfg.rx_count, col % cfg.rx_count, row % cfg.subbands};
}

}  // namespace

Eigen::VectorXcd sub_velocity_steering(const FrequencyBlock& block, const WaveformConfig& cfg,
                                       double velocity_mps) {
    const double f = cfg.carrier_hz + cfg.freq_step_hz * block.code;
    const double rate = 4.0 * M_PI / kSpeedOfLight * f * velocity_mps;
    Eigen::VectorXcd out(block.dimension);
    for (int i = 0; i < block.dimension; ++i) {
        const SampleDecode s = decode_sample(cfg, block.member_indices[i]);
        out[i] = std::polar(1.0, -rate * cfg.pri_s * s.p);
    }
    return out;
}

Eigen::VectorXcd sub_direction_steering(const FrequencyBlock& block, const WaveformConfig& cfg,
                                        double direction_sine) {
    const double f = cfg.carrier_hz + cfg.freq_step_hz * block.code;
    const double scale = cfg.monostatic_fda ? 2.0 : 1.0;
    const double rate = scale * 2.0 * M_PI / kSpeedOfLight * f * direction_sine;
    Eigen::VectorXcd out(block.dimension);
    for (int i = 0; i < block.dimension; ++i) {
        const SampleDecode s = decode_sample(cfg, block.member_indices[i]);
        const double pos = cfg.monostatic_fda ? cfg.tx_spacing_m * s.l
                                              : cfg.tx_spacing_m * s.l + cfg.rx_spacing_m * s.r;
        out[i] = std::polar(1.0, -rate * pos);
    }
    return out;
}

std::complex<double> rd_entry(const WaveformConfig& cfg, const AugmentedFdcm& afdcm, int a,
                              int b) {
    const int n = cfg.measurement_dimension();
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("sample index out of range");
    const int pq = cfg.pulses * cfg.subbands;
    const int code_a = afdcm.rx_expanded(a % pq, a / pq);
    const int code_b = afdcm.rx_expanded(b % pq, b / pq);
    if (code_a != code_b) return 0.0;
    return kSpeedOfLight / (2.0 * cfg.freq_step_hz);
}

std::complex<double> phase_interval_integral(double rate, const Interval& iv) {
    if (iv.is_point()) return std::polar(1.0, -rate * iv.lo);
    if (rate == 0.0) return iv.width();
    const std::complex<double> num =
        std::polar(1.0, -rate * iv.hi) - std::polar(1.0, -rate * iv.lo);
    return num / std::complex<double>(0.0, -rate);
}

namespace {

void require_full_range(const WaveformConfig& cfg, const ClutterRegion& region,
                        const char* what) {
    const double full = kSpeedOfLight / (2.0 * cfg.freq_step_hz);
    if (!near(region.range_m.lo, 0.0, full) || !near(region.range_m.hi, full, full))
        throw std::invalid_argument(std::string(what) +
                                    " requires the full unambiguous range region");
}

void require_nonempty(const ClutterRegion& region) {
    if (region.range_m.width() < 0.0 || region.velocity_mps.width() < 0.0 ||
        region.direction_sine.width() < 0.0)
        throw std::invalid_argument("region interval is inverted");
}

}  // namespace

ClutterGramian gramian_analytic(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                const ClutterRegion& region) {
    require_nonempty(region);
    require_full_range(cfg, region, "gramian_analytic");
    const SampleGeometry geom = sample_geometry(cfg, afdcm);
    const int n = geom.size();
    const double rd = kSpeedOfLight / (2.0 * cfg.freq_step_hz);
    const bool ridge = region.has_ridge();

    Eigen::MatrixXcd m(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b <= a; ++b) {
            if (geom.code[a] != geom.code[b]) {
                m(a, b) = 0.0;
                m(b, a) = 0.0;
                continue;
            }
            const double beta = geom.modulation_power[a] * geom.modulation_power[b];
            std::complex<double> value;
            if (ridge) {
                const double rate =
                    (geom.velocity_rate[a] - geom.velocity_rate[b]) * region.ridge_speed_mps +
                    geom.direction_rate[a] - geom.direction_rate[b];
                value = phase_interval_integral(rate, region.direction_sine);
            } else {
                value = phase_interval_integral(geom.velocity_rate[a] - geom.velocity_rate[b],
                                                region.velocity_mps) *
                        phase_interval_integral(geom.direction_rate[a] - geom.direction_rate[b],
                                                region.direction_sine);
            }
            value *= beta * rd;
            m(a, b) = value;
            m(b, a) = std::conj(value);
        }
    }
    return {std::move(m), GramianKind::analytic};
}

int auto_grid_count(const WaveformConfig& cfg, const std::vector<FrequencyBlock>& blocks) {
    (void)cfg;
    int largest = 1;
    for (const auto& blk : blocks) largest = std::max(largest, blk.dimension);
    return std::max(64, 8 * largest);
}

namespace {

/// h * Phi Phi^H over the midpoint grid, the Riemann factor of one axis. A
/// point interval contributes unit-weight copies of its single grid point,
/// one per explicitly requested grid cell.
Eigen::MatrixXcd axis_gramian(const Eigen::VectorXd& rate, const Interval& iv, int grid,
                              int point_copies) {
    const int n = static_cast<int>(rate.size());
    if (iv.is_point()) {
        Eigen::VectorXcd phi(n);
        for (int i = 0; i < n; ++i) phi[i] = std::polar(1.0, -rate[i] * iv.lo);
        return static_cast<double>(point_copies) * (phi * phi.adjoint());
    }
    const double h = iv.width() / grid;
    Eigen::MatrixXcd phi(n, grid);
    for (int k = 0; k < grid; ++k) {
        const double x = iv.lo + (k + 0.5) * h;
        for (int i = 0; i < n; ++i) phi(i, k) = std::polar(1.0, -rate[i] * x);
    }
    return h * (phi * phi.adjoint());
}

}  // namespace

ClutterGramian gramian_discrete(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                const ClutterRegion& region) {
    require_nonempty(region);
    const SampleGeometry geom = sample_geometry(cfg, afdcm);
    const auto blocks = partition_blocks(cfg, afdcm);
    const int auto_grid = auto_grid_count(cfg, blocks);
    const int grid_d = region.range_grid > 0 ? region.range_grid : auto_grid;
    const int grid_v = region.velocity_grid > 0 ? region.velocity_grid : auto_grid;
    const int grid_a = region.direction_grid > 0 ? region.direction_grid : auto_grid;

    const int copies_d = std::max(1, region.range_grid);
    const int copies_v = std::max(1, region.velocity_grid);
    const int copies_a = std::max(1, region.direction_grid);
    Eigen::MatrixXcd m = axis_gramian(geom.range_rate, region.range_m, grid_d, copies_d);
    if (region.has_ridge()) {
        const Eigen::VectorXd coupled =
            geom.velocity_rate * region.ridge_speed_mps + geom.direction_rate;
        m = m.cwiseProduct(axis_gramian(coupled, region.direction_sine, grid_a, copies_a));
    } else {
        m = m.cwiseProduct(
            axis_gramian(geom.velocity_rate, region.velocity_mps, grid_v, copies_v));
        m = m.cwiseProduct(
            axis_gramian(geom.direction_rate, region.direction_sine, grid_a, copies_a));
    }
    const Eigen::VectorXd& beta = geom.modulation_power;
    m = beta.asDiagonal() * m * beta.asDiagonal();
    return {std::move(m), GramianKind::discrete};
}

PermutedGramian permute_block_diagonal(const ClutterGramian& gramian,
                                       const std::vector<FrequencyBlock>& blocks) {
    const Eigen::Index n = gramian.matrix.rows();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (const auto& blk : blocks) {
        for (int idx : blk.member_indices) {
            if (idx < 0 || idx >= n || seen[static_cast<std::size_t>(idx)])
                throw std::invalid_argument("blocks do not partition the sample index set");
            seen[static_cast<std::size_t>(idx)] = 1;
            order.push_back(idx);
        }
    }
    if (order.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("blocks do not partition the sample index set");

    Eigen::MatrixXcd permuted(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            permuted(i, j) = gramian.matrix(order[static_cast<std::size_t>(i)],
                                            order[static_cast<std::size_t>(j)]);
    return {{std::move(permuted), gramian.provenance}, std::move(order)};
}

std::vector<ClutterGramian> block_gramians(const WaveformConfig& cfg,
                                           const std::vector<FrequencyBlock>& blocks,
                                           const ClutterRegion& region) {
    require_nonempty(region);
    require_full_range(cfg, region, "block_gramians");
    const double rd = kSpeedOfLight / (2.0 * cfg.freq_step_hz);
    std::vector<ClutterGramian> out;
    out.reserve(blocks.size());
    for (const auto& blk : blocks) {
        const double f = cfg.carrier_hz + cfg.freq_step_hz * blk.code;
        const double rate_v = 4.0 * M_PI / kSpeedOfLight * f;
        const double rate_a = (cfg.monostatic_fda ? 2.0 : 1.0) * 2.0 * M_PI / kSpeedOfLight * f;
        const int k = blk.dimension;
        Eigen::VectorXd times(k), positions(k), beta(k);
        for (int i = 0; i < k; ++i) {
            const SampleDecode s = decode_sample(cfg, blk.member_indices[i]);
            times[i] = cfg.pri_s * s.p;
            positions[i] = cfg.monostatic_fda
                               ? cfg.tx_spacing_m * s.l
                               : cfg.tx_spacing_m * s.l + cfg.rx_spacing_m * s.r;
            beta[i] = cfg.modulation_power(s.p, s.l, s.q);
        }
        Eigen::MatrixXcd m(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j <= i; ++j) {
                std::complex<double> value;
                if (region.has_ridge()) {
                    const double rate =
                        rate_v * region.ridge_speed_mps * (times[i] - times[j]) +
                        rate_a * (positions[i] - positions[j]);
                    value = phase_interval_integral(rate, region.direction_sine);
                } else {
                    value = phase_interval_integral(rate_v * (times[i] - times[j]),
                                                    region.velocity_mps) *
                            phase_interval_integral(rate_a * (positions[i] - positions[j]),
                                                    region.direction_sine);
                }
                value *= rd * beta[i] * beta[j];
                m(i, j) = value;
                m(j, i) = std::conj(value);
            }
        }
        out.push_back({std::move(m), GramianKind::analytic});
    }
    return out;
}

}  // namespace fdclutter
