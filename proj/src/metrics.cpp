#include "fdclutter/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "fdclutter/rng.hpp"

namespace fdclutter {

namespace {

void check_scnr_args(const Eigen::MatrixXcd& cov, double noise_power,
                     const Eigen::VectorXcd& target) {
    if (noise_power <= 0.0) throw std::invalid_argument("noise power must be > 0");
    if (cov.rows() != cov.cols() || cov.rows() != target.size())
        throw std::invalid_argument("covariance and target dimensions disagree");
}

}  // namespace

double scnr_exact_db(const Eigen::MatrixXcd& clutter_cov, double noise_power,
                     const Eigen::VectorXcd& target) {
    check_scnr_args(clutter_cov, noise_power, target);
    Eigen::MatrixXcd shifted = clutter_cov;
    shifted.diagonal().array() += noise_power;
    const Eigen::VectorXcd solved = Eigen::LLT<Eigen::MatrixXcd>(shifted).solve(target);
    const double scnr = std::real(target.dot(solved));
    return 10.0 * std::log10(scnr);
}

double scnr_approx_db(const Eigen::MatrixXcd& clutter_cov, double noise_power,
                      const Eigen::VectorXcd& target, double rel_tol) {
    check_scnr_args(clutter_cov, noise_power, target);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(clutter_cov);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    const double top = ev.maxCoeff();
    Eigen::VectorXcd residual = target;
    if (top > 0.0) {
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev[i] > rel_tol * top) {
                const Eigen::VectorXcd v = solver.eigenvectors().col(i);
                residual -= v * v.dot(residual);
            }
        }
    }
    return 10.0 * std::log10(residual.squaredNorm() / noise_power);
}

ScnrResult scnr(const Eigen::MatrixXcd& clutter_cov, double noise_power,
                const Eigen::VectorXcd& target, double rel_tol) {
    ScnrResult out;
    out.noise_power = noise_power;
    out.exact_db = scnr_exact_db(clutter_cov, noise_power, target);
    out.approx_db = scnr_approx_db(clutter_cov, noise_power, target, rel_tol);
    out.clutter_rank_used = numerical_rank(clutter_cov, rel_tol);
    return out;
}

double mean_projected_power(const Eigen::MatrixXcd& clutter_cov, const WaveformConfig& cfg,
                            int sample_count, std::uint64_t seed, double rel_tol) {
    if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    if (clutter_cov.rows() != cfg.measurement_dimension())
        throw std::invalid_argument("covariance does not match the waveform dimension");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(clutter_cov);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    const double top = ev.maxCoeff();
    std::vector<Eigen::Index> clutter_cols;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (top > 0.0 && ev[i] > rel_tol * top) clutter_cols.push_back(i);

    const AugmentedFdcm afdcm = build_afdcm(cfg);
    const SampleGeometry geom = sample_geometry(cfg, afdcm);
    const double range_max = kSpeedOfLight / (2.0 * cfg.freq_step_hz);
    const double vmax = cfg.pulses > 1 ? unambiguous_velocity_halfwidth_mps(cfg) : 0.0;
    const double amax_raw = unambiguous_direction_halfwidth(cfg);
    const bool has_dir = cfg.tx_count * cfg.rx_count > 1 && std::isfinite(amax_raw);
    const double amax = has_dir ? amax_raw : 0.0;

    double total = 0.0;
    for (int i = 0; i < sample_count; ++i) {
        Xoshiro256pp rng = substream(seed, static_cast<std::uint64_t>(i));
        const double d = rng.uniform(0.0, range_max);
        const double v = vmax > 0.0 ? rng.uniform(-vmax, vmax) : 0.0;
        const double a = amax > 0.0 ? rng.uniform(-amax, amax) : 0.0;
        Eigen::VectorXcd u = steering_vector(geom, d, v, a);
        const double norm2 = u.squaredNorm();
        for (Eigen::Index col : clutter_cols) {
            const Eigen::VectorXcd vvec = solver.eigenvectors().col(col);
            u -= vvec * vvec.dot(u);
        }
        total += u.squaredNorm() / norm2;
    }
    return total / sample_count;
}

double frequency_diversity_loss_db(double ncr_diverse, double ncr_fixed) {
    if (ncr_diverse < 0.0 || ncr_diverse > 1.0 || ncr_fixed < 0.0 || ncr_fixed > 1.0)
        throw std::invalid_argument("NCR arguments must lie in [0, 1]");
    if (ncr_fixed == 1.0)
        throw std::invalid_argument("reference waveform clutter fills the space");
    if (ncr_diverse == 1.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10((1.0 - ncr_diverse) / (1.0 - ncr_fixed));
}

}  // namespace fdclutter
