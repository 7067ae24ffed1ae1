#include "fdclutter/steering.hpp"

#include <cmath>
#include <stdexcept>

#include "fdclutter/types.hpp"

namespace fdclutter {

int sample_index(const WaveformConfig& cfg, int p, int l, int r, int q) {
    return (l * cfg.rx_count + r) * cfg.pulses * cfg.subbands + p * cfg.subbands + q;
}

SampleGeometry sample_geometry(const WaveformConfig& cfg, const AugmentedFdcm& afdcm) {
    const int n = cfg.measurement_dimension();
    const bool ridge = cfg.platform_speed_mps > 0.0;
    constexpr double c = kSpeedOfLight;

    SampleGeometry g;
    g.code.resize(n);
    g.carrier_hz.resize(n);
    g.range_rate.resize(n);
    g.velocity_rate.resize(n);
    g.direction_rate.resize(n);
    g.pulse_time_s.resize(n);
    g.position_m.resize(n);
    g.modulation_power.resize(n);
    if (ridge) g.ridge_position_m.resize(n);

    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int l = 0; l < cfg.tx_count; ++l) {
        for (int r = 0; r < cfg.rx_count; ++r) {
            for (int p = 0; p < cfg.pulses; ++p) {
                for (int q = 0; q < cfg.subbands; ++q) {
                    const int idx = sample_index(cfg, p, l, r, q);
                    const int code = afdcm.codes(p * cfg.subbands + q, l);
                    const double f = cfg.carrier_hz + cfg.freq_step_hz * code;
                    const double t = cfg.pri_s * p;
                    const double pos = cfg.monostatic_fda
                                           ? cfg.tx_spacing_m * l
                                           : cfg.tx_spacing_m * l + cfg.rx_spacing_m * r;
                    g.code[idx] = code;
                    g.carrier_hz[idx] = f;
                    g.range_rate[idx] = 2.0 * two_pi / c * f;
                    g.velocity_rate[idx] = 2.0 * two_pi / c * f * t;
                    // The monostatic array sees the two-way path per element.
                    g.direction_rate[idx] =
                        (cfg.monostatic_fda ? 2.0 : 1.0) * two_pi / c * f * pos;
                    g.pulse_time_s[idx] = t;
                    g.position_m[idx] = pos;
                    g.modulation_power[idx] = cfg.modulation_power(p, l, q);
                    if (ridge) {
                        // Position whose direction phase matches the coupled
                        // velocity term: halves for the doubled monostatic rate.
                        const double stride = cfg.monostatic_fda ? 1.0 : 2.0;
                        g.ridge_position_m[idx] = pos + stride * cfg.platform_speed_mps * t;
                    }
                }
            }
        }
    }
    return g;
}

Eigen::VectorXd modulation_vector(const WaveformConfig& cfg) {
    const int n = cfg.measurement_dimension();
    Eigen::VectorXd out(n);
    for (int l = 0; l < cfg.tx_count; ++l)
        for (int r = 0; r < cfg.rx_count; ++r)
            for (int p = 0; p < cfg.pulses; ++p)
                for (int q = 0; q < cfg.subbands; ++q)
                    out[sample_index(cfg, p, l, r, q)] = cfg.modulation_power(p, l, q);
    return out;
}

namespace {

Eigen::VectorXcd unit_phasors(const Eigen::VectorXd& phase) {
    Eigen::VectorXcd out(phase.size());
    for (Eigen::Index i = 0; i < phase.size(); ++i)
        out[i] = std::polar(1.0, -phase[i]);
    return out;
}

}  // namespace

Eigen::VectorXcd range_factor(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                              double range_m) {
    if (range_m < 0.0) throw std::invalid_argument("range must be >= 0");
    const SampleGeometry g = sample_geometry(cfg, afdcm);
    return unit_phasors(g.range_rate * range_m);
}

Eigen::VectorXcd velocity_factor(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                 double velocity_mps) {
    const SampleGeometry g = sample_geometry(cfg, afdcm);
    return unit_phasors(g.velocity_rate * velocity_mps);
}

Eigen::VectorXcd direction_factor(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                  double direction_sine) {
    const SampleGeometry g = sample_geometry(cfg, afdcm);
    return unit_phasors(g.direction_rate * direction_sine);
}

Eigen::VectorXcd steering_vector(const SampleGeometry& geom, double range_m,
                                 double velocity_mps, double direction_sine) {
    const int n = geom.size();
    Eigen::VectorXcd out(n);
    for (int i = 0; i < n; ++i) {
        // Product of the per-factor phasors, not exp of the summed phase, so
        // the factorization identity holds to a few ulps at large phases.
        out[i] = geom.modulation_power[i] *
                 std::polar(1.0, -geom.range_rate[i] * range_m) *
                 std::polar(1.0, -geom.velocity_rate[i] * velocity_mps) *
                 std::polar(1.0, -geom.direction_rate[i] * direction_sine);
    }
    return out;
}

Eigen::VectorXcd steering_vector(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                 double range_m, double velocity_mps, double direction_sine) {
    return steering_vector(sample_geometry(cfg, afdcm), range_m, velocity_mps, direction_sine);
}

}  // namespace fdclutter
