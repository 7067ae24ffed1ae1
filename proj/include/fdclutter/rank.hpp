#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fdclutter/covariance.hpp"

namespace fdclutter {

/// Tolerance for counting clutter eigenvalues in the rank-estimation pipeline:
/// eigenvalues above this fraction of the largest are counted. Counts the
/// dimension at the spectral cliff that the sampling-aperture estimators
/// target; see README for the calibration.
inline constexpr double kRankEstimateTolerance = 0.1;

/// Count of eigenvalues above rel_tol times the largest. Throws on
/// non-Hermitian input (asymmetry beyond 8 machine epsilons of the scale).
int numerical_rank(const Eigen::MatrixXcd& hermitian_psd, double rel_tol = 1e-6);

enum class ApertureKind { temporal, spatial };

struct ApertureSplit {
    std::vector<std::vector<double>> sub_apertures;
    double threshold = 0.0;  // gap above which the aperture splits
};

/// Split a sorted aperture at gaps beyond the Nyquist interval of the region:
/// c/(2*carrier*extent) for temporal apertures, c/(carrier*extent) for spatial
/// ones (halved again for monostatic arrays, whose phase rate doubles).
ApertureSplit split_aperture(const std::vector<double>& aperture, double region_extent,
                             double carrier_hz, ApertureKind kind, bool monostatic = false);

/// Rank estimate of a block's velocity factor over the velocity interval.
long velocity_rank_estimate(const FrequencyBlock& block, const WaveformConfig& cfg,
                            const Interval& velocity_mps);

/// Rank estimate of a block's direction factor over the direction interval.
long direction_rank_estimate(const FrequencyBlock& block, const WaveformConfig& cfg,
                             const Interval& direction_sine);

/// Rank estimate over a block's embedded (ridge) aperture.
long ridge_rank_estimate(const FrequencyBlock& block, const WaveformConfig& cfg,
                         const Interval& direction_sine);

struct RankBounds {
    long lower = 0;
    long upper = 0;
};

/// min{K, Uv+Ua-1} <= block rank <= min{K, Uv*Ua}; collapses to the ridge
/// estimate on both sides for ridge-coupled regions.
RankBounds block_rank_bounds(const FrequencyBlock& block, const WaveformConfig& cfg,
                             const ClutterRegion& region);

/// Numerical rank of the block's analytic Gramian, computed on the compressed
/// kernel over unique sampling coordinates (exact nonzero spectrum).
int block_numerical_rank(const FrequencyBlock& block, const WaveformConfig& cfg,
                         const ClutterRegion& region,
                         double rel_tol = kRankEstimateTolerance);

struct RankReport {
    struct PerBlock {
        int code = 0;
        int dimension = 0;
        int rank = 0;
        long velocity_estimate = 1;
        long direction_estimate = 1;
        long lower = 0;
        long upper = 0;
    };

    int numerical_rank = 0;  // sum of per-block ranks
    long lower_bound = 0;
    long upper_bound = 0;
    std::vector<PerBlock> per_block;
    double ncr = 0.0;  // numerical_rank / measurement dimension
    double tolerance_used = kRankEstimateTolerance;

    /// Sum of unique sampling instants (temporal) or positions (spatial/ridge)
    /// across blocks; the alternative normalizer used by the sweep tables.
    long temporal_aperture_size = 0;
    long spatial_aperture_size = 0;
};

/// Block-by-block numerical ranks and analytical bounds for the full waveform.
/// Requires the full unambiguous range interval.
RankReport clutter_rank_bounds(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                               const ClutterRegion& region,
                               double rel_tol = kRankEstimateTolerance);

/// Closed-form whole-waveform rank estimate for an adapted waveform; throws
/// when the config was not built by the matching adapter.
long closed_form_clutter_rank(WaveformKind kind, const WaveformConfig& cfg,
                              const AugmentedFdcm& afdcm, const ClutterRegion& region);

}  // namespace fdclutter
