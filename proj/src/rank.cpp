#include "fdclutter/rank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdclutter {

namespace {

/// ceil with a small relative guard so exact products do not round up.
long guarded_ceil(double x) {
    return static_cast<long>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

long pswf_count(double cycles) { return guarded_ceil(cycles) + 1; }

int eigen_count_above(const Eigen::VectorXd& eigenvalues, double rel_tol) {
    const double top = eigenvalues.size() ? eigenvalues.maxCoeff() : 0.0;
    if (top <= 0.0) return 0;
    int count = 0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] > rel_tol * top) ++count;
    return count;
}

double block_carrier(const FrequencyBlock& block, const WaveformConfig& cfg) {
    return cfg.carrier_hz + cfg.freq_step_hz * block.code;
}

double aperture_extent(const std::vector<double>& aperture) {
    return aperture.empty() ? 0.0 : aperture.back() - aperture.front();
}

/// Shared shape of the three estimators: min over the aperture size, the
/// whole-aperture bandlimited dimension, and its split-aperture refinement.
long aperture_rank_estimate(const std::vector<double>& aperture, double region_extent,
                            double carrier_hz, double cycles_per_meter_extent,
                            ApertureKind kind, bool monostatic) {
    if (aperture.empty()) return 0;
    if (region_extent <= 0.0 || aperture.size() == 1) return 1;
    const long size_cap = static_cast<long>(aperture.size());
    const long whole = pswf_count(cycles_per_meter_extent * aperture_extent(aperture));
    const ApertureSplit split =
        split_aperture(aperture, region_extent, carrier_hz, kind, monostatic);
    long split_sum = 0;
    for (const auto& sub : split.sub_apertures)
        split_sum += pswf_count(cycles_per_meter_extent * aperture_extent(sub));
    return std::min(size_cap, std::min(whole, split_sum));
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& hermitian_psd, double rel_tol) {
    if (hermitian_psd.rows() != hermitian_psd.cols())
        throw std::invalid_argument("numerical_rank needs a square matrix");
    const double scale = hermitian_psd.cwiseAbs().maxCoeff();
    const double asym = (hermitian_psd - hermitian_psd.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 8.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0))
        throw std::invalid_argument("numerical_rank needs a Hermitian matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_psd,
                                                           Eigen::EigenvaluesOnly);
    return eigen_count_above(solver.eigenvalues(), rel_tol);
}

ApertureSplit split_aperture(const std::vector<double>& aperture, double region_extent,
                             double carrier_hz, ApertureKind kind, bool monostatic) {
    ApertureSplit out;
    if (aperture.empty()) return out;
    double scale = kind == ApertureKind::temporal ? 2.0 : 1.0;
    if (kind == ApertureKind::spatial && monostatic) scale = 2.0;
    out.threshold = region_extent > 0.0
                        ? kSpeedOfLight / (scale * carrier_hz * region_extent)
                        : std::numeric_limits<double>::infinity();
    out.sub_apertures.push_back({aperture.front()});
    for (std::size_t i = 1; i < aperture.size(); ++i) {
        if (aperture[i] - out.sub_apertures.back().back() > out.threshold)
            out.sub_apertures.push_back({});
        out.sub_apertures.back().push_back(aperture[i]);
    }
    return out;
}

long velocity_rank_estimate(const FrequencyBlock& block, const WaveformConfig& cfg,
                            const Interval& velocity_mps) {
    const double f = block_carrier(block, cfg);
    return aperture_rank_estimate(block.temporal_aperture_s, velocity_mps.width(), f,
                                  2.0 / kSpeedOfLight * f * velocity_mps.width(),
                                  ApertureKind::temporal, false);
}

long direction_rank_estimate(const FrequencyBlock& block, const WaveformConfig& cfg,
                             const Interval& direction_sine) {
    const double f = block_carrier(block, cfg);
    const double scale = cfg.monostatic_fda ? 2.0 : 1.0;
    return aperture_rank_estimate(block.spatial_aperture_m, direction_sine.width(), f,
                                  scale / kSpeedOfLight * f * direction_sine.width(),
                                  ApertureKind::spatial, cfg.monostatic_fda);
}

long ridge_rank_estimate(const FrequencyBlock& block, const WaveformConfig& cfg,
                         const Interval& direction_sine) {
    if (block.embedded_aperture_m.empty())
        throw std::invalid_argument("ridge estimate needs a waveform with platform speed");
    const double f = block_carrier(block, cfg);
    const double scale = cfg.monostatic_fda ? 2.0 : 1.0;
    return aperture_rank_estimate(block.embedded_aperture_m, direction_sine.width(), f,
                                  scale / kSpeedOfLight * f * direction_sine.width(),
                                  ApertureKind::spatial, cfg.monostatic_fda);
}

RankBounds block_rank_bounds(const FrequencyBlock& block, const WaveformConfig& cfg,
                             const ClutterRegion& region) {
    const long k = block.dimension;
    if (region.has_ridge()) {
        const long e = std::min(k, ridge_rank_estimate(block, cfg, region.direction_sine));
        return {e, e};
    }
    const long uv = velocity_rank_estimate(block, cfg, region.velocity_mps);
    const long ua = direction_rank_estimate(block, cfg, region.direction_sine);
    return {std::min(k, uv + ua - 1), std::min(k, uv * ua)};
}

namespace {

struct CompressedKernel {
    std::vector<double> time_s;
    std::vector<double> position_m;
    std::vector<double> weight;  // summed modulation power per unique coordinate
};

/// Reduce a block to unique sampling coordinates along the active region
/// axes. Duplicates only reweight the spectrum; a point-interval axis only
/// applies a diagonal unitary congruence. The nonzero eigenvalues of the
/// block Gramian are preserved exactly either way.
CompressedKernel compress_block(const FrequencyBlock& block, const WaveformConfig& cfg,
                                const ClutterRegion& region) {
    struct Entry {
        double t, s, w;
    };
    const bool ridge = region.has_ridge();
    const bool use_time = !ridge && !region.velocity_mps.is_point();
    const bool use_pos = !region.direction_sine.is_point();
    std::vector<Entry> entries;
    entries.reserve(block.member_indices.size());
    const int pq = cfg.pulses * cfg.subbands;
    const double stride = cfg.monostatic_fda ? 1.0 : 2.0;
    for (int n : block.member_indices) {
        const int row = n % pq;
        const int col = n / pq;
        const int p = row / cfg.subbands;
        const int q = row % cfg.subbands;
        const int l = col / cfg.rx_count;
        const int r = col % cfg.rx_count;
        const double t = cfg.pri_s * p;
        double s = cfg.monostatic_fda ? cfg.tx_spacing_m * l
                                      : cfg.tx_spacing_m * l + cfg.rx_spacing_m * r;
        if (ridge) s += stride * cfg.platform_speed_mps * t;
        entries.push_back({use_time ? t : 0.0, use_pos ? s : 0.0,
                           cfg.modulation_power(p, l, q)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.t != b.t ? a.t < b.t : a.s < b.s;
    });
    double tscale = 1.0, sscale = 1.0;
    for (const auto& e : entries) {
        tscale = std::max(tscale, std::abs(e.t));
        sscale = std::max(sscale, std::abs(e.s));
    }
    CompressedKernel out;
    for (const auto& e : entries) {
        if (!out.time_s.empty() && std::abs(e.t - out.time_s.back()) <= 1e-9 * tscale &&
            std::abs(e.s - out.position_m.back()) <= 1e-9 * sscale) {
            out.weight.back() += e.w;
        } else {
            out.time_s.push_back(e.t);
            out.position_m.push_back(e.s);
            out.weight.push_back(e.w);
        }
    }
    return out;
}

}  // namespace

int block_numerical_rank(const FrequencyBlock& block, const WaveformConfig& cfg,
                         const ClutterRegion& region, double rel_tol) {
    const bool ridge = region.has_ridge();
    const CompressedKernel kernel = compress_block(block, cfg, region);
    const int u = static_cast<int>(kernel.weight.size());
    const double f = block_carrier(block, cfg);
    const double rate_v = 4.0 * M_PI / kSpeedOfLight * f;
    const double rate_a = (cfg.monostatic_fda ? 2.0 : 1.0) * 2.0 * M_PI / kSpeedOfLight * f;
    const double rd = kSpeedOfLight / (2.0 * cfg.freq_step_hz);

    Eigen::MatrixXcd m(u, u);
    for (int i = 0; i < u; ++i) {
        const double wi = std::sqrt(kernel.weight[i]);
        for (int j = 0; j <= i; ++j) {
            const double wj = std::sqrt(kernel.weight[j]);
            std::complex<double> value;
            if (ridge) {
                value = phase_interval_integral(
                    rate_a * (kernel.position_m[i] - kernel.position_m[j]),
                    region.direction_sine);
            } else {
                value = phase_interval_integral(rate_v * (kernel.time_s[i] - kernel.time_s[j]),
                                                region.velocity_mps) *
                        phase_interval_integral(
                            rate_a * (kernel.position_m[i] - kernel.position_m[j]),
                            region.direction_sine);
            }
            value *= rd * wi * wj;
            m(i, j) = value;
            m(j, i) = std::conj(value);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return eigen_count_above(solver.eigenvalues(), rel_tol);
}

RankReport clutter_rank_bounds(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                               const ClutterRegion& region, double rel_tol) {
    validate_region(cfg, region);
    const double full = kSpeedOfLight / (2.0 * cfg.freq_step_hz);
    if (std::abs(region.range_m.lo) > 1e-9 * full ||
        std::abs(region.range_m.hi - full) > 1e-9 * full)
        throw std::invalid_argument(
            "clutter_rank_bounds requires the full unambiguous range region");

    RankReport report;
    report.tolerance_used = rel_tol;
    const auto blocks = partition_blocks(cfg, afdcm);
    for (const auto& blk : blocks) {
        RankReport::PerBlock row;
        row.code = blk.code;
        row.dimension = blk.dimension;
        const RankBounds bounds = block_rank_bounds(blk, cfg, region);
        row.lower = bounds.lower;
        row.upper = bounds.upper;
        if (region.has_ridge()) {
            row.velocity_estimate = 1;
            row.direction_estimate = ridge_rank_estimate(blk, cfg, region.direction_sine);
        } else {
            row.velocity_estimate = velocity_rank_estimate(blk, cfg, region.velocity_mps);
            row.direction_estimate = direction_rank_estimate(blk, cfg, region.direction_sine);
        }
        row.rank = block_numerical_rank(blk, cfg, region, rel_tol);
        report.numerical_rank += row.rank;
        report.lower_bound += row.lower;
        report.upper_bound += row.upper;
        report.temporal_aperture_size += static_cast<long>(blk.temporal_aperture_s.size());
        report.spatial_aperture_size += static_cast<long>(
            region.has_ridge() ? blk.embedded_aperture_m.size() : blk.spatial_aperture_m.size());
        report.per_block.push_back(row);
    }
    report.ncr = static_cast<double>(report.numerical_rank) / cfg.measurement_dimension();
    return report;
}

long closed_form_clutter_rank(WaveformKind kind, const WaveformConfig& cfg,
                              const AugmentedFdcm& afdcm, const ClutterRegion& region) {
    if (cfg.kind != kind)
        throw std::invalid_argument("waveform was not built by the matching adapter");
    const auto blocks = partition_blocks(cfg, afdcm);
    long total = 0;
    switch (kind) {
        case WaveformKind::fda:
        case WaveformKind::fd_mimo:
            for (const auto& blk : blocks)
                total += std::min<long>(blk.dimension,
                                        direction_rank_estimate(blk, cfg, region.direction_sine));
            break;
        case WaveformKind::sf:
            for (const auto& blk : blocks)
                total += std::min<long>(blk.dimension,
                                        velocity_rank_estimate(blk, cfg, region.velocity_mps));
            break;
        case WaveformKind::stap:
            if (!region.has_ridge())
                throw std::invalid_argument("stap estimate needs a ridge-coupled region");
            for (const auto& blk : blocks)
                total += std::min<long>(blk.dimension,
                                        ridge_rank_estimate(blk, cfg, region.direction_sine));
            break;
        case WaveformKind::rfd_mimo:
            throw std::invalid_argument("no closed form for the general waveform");
    }
    return total;
}

}  // namespace fdclutter
