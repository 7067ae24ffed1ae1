#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "fdclutter/rank.hpp"

namespace fdclutter {

struct ScnrResult {
    double exact_db = 0.0;
    double approx_db = 0.0;
    double noise_power = 0.0;
    int clutter_rank_used = 0;
};

/// Optimal filtered SCNR u^H (R + sigma2 I)^-1 u in dB, via a Hermitian solve.
double scnr_exact_db(const Eigen::MatrixXcd& clutter_cov, double noise_power,
                     const Eigen::VectorXcd& target);

/// Projection approximation ||P_perp u||^2 / sigma2 in dB, where P_perp
/// removes the eigenvectors with eigenvalue above rel_tol times the largest.
double scnr_approx_db(const Eigen::MatrixXcd& clutter_cov, double noise_power,
                      const Eigen::VectorXcd& target, double rel_tol = 1e-6);

ScnrResult scnr(const Eigen::MatrixXcd& clutter_cov, double noise_power,
                const Eigen::VectorXcd& target, double rel_tol = 1e-6);

/// Monte Carlo mean of ||P_perp u||^2 / ||u||^2 over targets uniform on the
/// unambiguous range/velocity/direction extents.
double mean_projected_power(const Eigen::MatrixXcd& clutter_cov, const WaveformConfig& cfg,
                            int sample_count, std::uint64_t seed,
                            double rel_tol = kRankEstimateTolerance);

/// 10*log10((1 - ncr_diverse) / (1 - ncr_fixed)); -inf when the diverse
/// waveform's clutter fills the space. Throws when ncr_fixed == 1 or either
/// argument leaves [0, 1].
double frequency_diversity_loss_db(double ncr_diverse, double ncr_fixed);

}  // namespace fdclutter
