#pragma once

#include <Eigen/Dense>

#include "fdclutter/waveform.hpp"

namespace fdclutter {

/// Per-sample phase rates of the measurement vector.
///
/// Samples are laid out with index n = (l*R + r)*P*Q + p*Q + q. A scatterer at
/// range D, radial velocity v, and direction sine alpha produces the sample
/// exp(-i*(range_rate*D + velocity_rate*v + direction_rate*alpha)) scaled by
/// the modulation power.
struct SampleGeometry {
    Eigen::VectorXi code;
    Eigen::VectorXd carrier_hz;       // per-sample carrier
    Eigen::VectorXd range_rate;       // rad per metre
    Eigen::VectorXd velocity_rate;    // rad per (m/s)
    Eigen::VectorXd direction_rate;   // rad per unit direction sine
    Eigen::VectorXd pulse_time_s;     // T * p
    Eigen::VectorXd position_m;       // d_T*l + d_R*r (d_T*l when monostatic)
    Eigen::VectorXd ridge_position_m; // position + 2*v_p*T*p; empty unless platform speed set
    Eigen::VectorXd modulation_power;

    int size() const { return static_cast<int>(code.size()); }
};

SampleGeometry sample_geometry(const WaveformConfig& cfg, const AugmentedFdcm& afdcm);

int sample_index(const WaveformConfig& cfg, int p, int l, int r, int q);

/// Squared moduli of the modulation coefficients in sample layout.
Eigen::VectorXd modulation_vector(const WaveformConfig& cfg);

Eigen::VectorXcd range_factor(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                              double range_m);
Eigen::VectorXcd velocity_factor(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                 double velocity_mps);
Eigen::VectorXcd direction_factor(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                  double direction_sine);

/// modulation (.) range (.) velocity (.) direction, elementwise.
Eigen::VectorXcd steering_vector(const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                 double range_m, double velocity_mps, double direction_sine);
Eigen::VectorXcd steering_vector(const SampleGeometry& geom, double range_m,
                                 double velocity_mps, double direction_sine);

}  // namespace fdclutter
