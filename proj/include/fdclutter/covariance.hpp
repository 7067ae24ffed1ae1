#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fdclutter/steering.hpp"
#include "fdclutter/types.hpp"
#include "fdclutter/waveform.hpp"

namespace fdclutter {

/// Clutter range / velocity / direction-sine region with discretization grids.
struct ClutterRegion {
    Interval range_m;
    Interval velocity_mps;
    Interval direction_sine;
    int range_grid = 0;      // 0 = auto
    int velocity_grid = 0;
    int direction_grid = 0;

    /// > 0 slaves clutter velocity to direction: v = direction_sine * speed.
    double ridge_speed_mps = 0.0;

    bool has_ridge() const { return ridge_speed_mps > 0.0; }
};

double unambiguous_velocity_halfwidth_mps(const WaveformConfig& cfg);
double unambiguous_direction_halfwidth(const WaveformConfig& cfg);

/// Full range region with velocity/direction intervals covering the given
/// fractions of their unambiguous extents, centered on zero. Trivialized axes
/// (single pulse, no array) collapse to points at zero.
ClutterRegion clutter_region_fractions(const WaveformConfig& cfg, double velocity_fraction,
                                       double direction_fraction);
ClutterRegion full_clutter_region(const WaveformConfig& cfg);

/// Throws when the region leaves the unambiguous extents or an interval is inverted.
void validate_region(const WaveformConfig& cfg, const ClutterRegion& region);

/// Samples sharing one frequency code, with their sampling apertures.
struct FrequencyBlock {
    int code = 0;
    std::vector<int> member_indices;          // ascending sample indices
    std::vector<double> temporal_aperture_s;  // sorted unique pulse times
    std::vector<double> spatial_aperture_m;   // sorted unique element positions
    std::vector<double> embedded_aperture_m;  // sorted unique ridge positions; empty unless set
    int dimension = 0;                        // K_m = member count
};

std::vector<FrequencyBlock> partition_blocks(const WaveformConfig& cfg,
                                             const AugmentedFdcm& afdcm);

Eigen::VectorXcd sub_velocity_steering(const FrequencyBlock& block, const WaveformConfig& cfg,
                                       double velocity_mps);
Eigen::VectorXcd sub_direction_steering(const FrequencyBlock& block, const WaveformConfig& cfg,
                                        double direction_sine);

/// Range-factor Gramian entry over the full unambiguous range region:
/// exactly c/(2*freq_step) when samples a and b share a code, else exactly 0.
std::complex<double> rd_entry(const WaveformConfig& cfg, const AugmentedFdcm& afdcm, int a,
                              int b);

/// Integral of exp(-i*rate*x) over the interval; unit-weight point evaluation
/// when the interval is a point.
std::complex<double> phase_interval_integral(double rate, const Interval& iv);

enum class GramianKind { analytic, discrete };

struct ClutterGramian {
    Eigen::MatrixXcd matrix;
    GramianKind provenance = GramianKind::analytic;
};

/// Closed-form clutter Gramian: modulation outer product Hadamard the exact
/// range pattern and the interval integrals of the velocity/direction factors
/// (merged into one direction integral when the region has a ridge).
/// Requires the full unambiguous range interval.
ClutterGramian gramian_analytic(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                const ClutterRegion& region);

/// Riemann-sum Gramian over the midpoint grid of the region, cell-volume
/// scaled. Equal to the sum of steering outer products over the product grid.
ClutterGramian gramian_discrete(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                const ClutterRegion& region);

/// Grid count used when a region grid is 0: max(64, 8 * largest block dimension).
int auto_grid_count(const WaveformConfig& cfg, const std::vector<FrequencyBlock>& blocks);

struct PermutedGramian {
    ClutterGramian gramian;
    std::vector<int> permutation;  // permuted row i = original row permutation[i]
};

/// Symmetric permutation grouping samples block by block. Throws when the
/// blocks do not partition the index set.
PermutedGramian permute_block_diagonal(const ClutterGramian& gramian,
                                       const std::vector<FrequencyBlock>& blocks);

/// Per-block Gramians from the closed-form factor integrals, including the
/// within-block range factor c/(2*freq_step).
std::vector<ClutterGramian> block_gramians(const WaveformConfig& cfg,
                                           const std::vector<FrequencyBlock>& blocks,
                                           const ClutterRegion& region);

}  // namespace fdclutter
