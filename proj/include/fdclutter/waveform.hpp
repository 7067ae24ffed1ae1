#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fdclutter/types.hpp"

namespace fdclutter {

enum class WaveformKind { rfd_mimo, fda, sf, fd_mimo, stap };

const char* waveform_kind_name(WaveformKind kind);
WaveformKind waveform_kind_from_name(const std::string& name);

/// Full parameter set of a random-frequency-diverse MIMO waveform.
///
/// `codes` holds one integer frequency code per (pulse, tx element); the
/// carrier of sub-band q in pulse p at element l is
/// carrier_hz + freq_step_hz * (codes(p, l) + q).
struct WaveformConfig {
    int pulses = 1;     // P
    int subbands = 1;   // Q
    int tx_count = 1;   // L
    int rx_count = 1;   // R
    double carrier_hz = 10.0e9;
    double freq_step_hz = 1.0e6;
    double tx_spacing_m = 0.0;
    double rx_spacing_m = 0.0;
    double pri_s = 1.0e-4;
    Eigen::MatrixXi codes;  // pulses x tx_count

    /// Modulation coefficients indexed (p, l, q); empty means unit modulus.
    Eigen::VectorXcd modulation;

    /// Each element transmits and filters only its own carrier; the direction
    /// phase doubles and the receive channel collapses onto the transmit one.
    bool monostatic_fda = false;

    /// Platform speed for side-looking airborne use; > 0 couples clutter
    /// velocity to direction and defines the embedded sampling aperture.
    double platform_speed_mps = 0.0;

    WaveformKind kind = WaveformKind::rfd_mimo;

    int measurement_dimension() const { return pulses * subbands * tx_count * rx_count; }
    int modulation_index(int p, int l, int q) const { return (p * tx_count + l) * subbands + q; }
    double modulation_power(int p, int l, int q) const;

    /// Throws std::invalid_argument on shape or parameter violations.
    void validate() const;
};

/// Augmented code matrix with the per-pulse sub-band offsets folded in.
struct AugmentedFdcm {
    Eigen::MatrixXi codes;        // (P*Q) x L
    Eigen::MatrixXi rx_expanded;  // (P*Q) x (L*R), codes repeated per rx element
    std::vector<int> unique_codes;
};

/// A (+) B = A kron ones(size(B)) + ones(size(A)) kron B.
Eigen::MatrixXi stretched_sum(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b);
std::vector<double> stretched_sum(const std::vector<double>& a, const std::vector<double>& b);

AugmentedFdcm build_afdcm(const WaveformConfig& cfg);

/// Cyclic code assignment i mod code_count.
std::vector<int> assign_linear(int count, int code_count);
/// Independent uniform draws from {0, ..., code_count-1}.
std::vector<int> assign_random(int count, int code_count, std::uint64_t seed);
/// Balanced multiset of codes in seeded random order (repeat-free per cycle).
std::vector<int> assign_shuffled(int count, int code_count, std::uint64_t seed);

WaveformConfig adapt_fda(int tx_count, int subbands, const std::vector<int>& element_codes,
                         double carrier_hz, double freq_step_hz, double element_spacing_m);

WaveformConfig adapt_sf(int pulses, int subbands, const std::vector<int>& pulse_codes,
                        double carrier_hz, double freq_step_hz, double pri_s);

WaveformConfig adapt_fdmimo(int tx_count, int rx_count, int subbands,
                            const std::vector<int>& element_codes, double carrier_hz,
                            double freq_step_hz, double tx_spacing_m, double rx_spacing_m);

WaveformConfig adapt_stap(int tx_count, int rx_count, int pulses,
                          const std::vector<int>& element_codes, double platform_speed_mps,
                          double carrier_hz, double freq_step_hz, double tx_spacing_m,
                          double rx_spacing_m, double pri_s);

}  // namespace fdclutter
