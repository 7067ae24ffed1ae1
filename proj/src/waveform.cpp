#include "fdclutter/waveform.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "fdclutter/rng.hpp"

namespace fdclutter {

const char* waveform_kind_name(WaveformKind kind) {
    switch (kind) {
        case WaveformKind::rfd_mimo: return "rfd_mimo";
        case WaveformKind::fda: return "fda";
        case WaveformKind::sf: return "sf";
        case WaveformKind::fd_mimo: return "fd_mimo";
        case WaveformKind::stap: return "stap";
    }
    return "rfd_mimo";
}

WaveformKind waveform_kind_from_name(const std::string& name) {
    if (name == "rfd_mimo") return WaveformKind::rfd_mimo;
    if (name == "fda") return WaveformKind::fda;
    if (name == "sf") return WaveformKind::sf;
    if (name == "fd_mimo") return WaveformKind::fd_mimo;
    if (name == "stap") return WaveformKind::stap;
    throw std::invalid_argument("unknown waveform kind: " + name);
}

double WaveformConfig::modulation_power(int p, int l, int q) const {
    if (modulation.size() == 0) return 1.0;
    return std::norm(modulation[modulation_index(p, l, q)]);
}

void WaveformConfig::validate() const {
    if (pulses < 1 || subbands < 1 || tx_count < 1 || rx_count < 1)
        throw std::invalid_argument("pulse, sub-band and element counts must be >= 1");
    if (codes.rows() != pulses || codes.cols() != tx_count)
        throw std::invalid_argument("code matrix must be pulses x tx_count");
    if (freq_step_hz <= 0.0) throw std::invalid_argument("freq_step_hz must be > 0");
    if (carrier_hz <= 0.0) throw std::invalid_argument("carrier_hz must be > 0");
    if (pri_s <= 0.0) throw std::invalid_argument("pri_s must be > 0");
    if (tx_spacing_m < 0.0 || rx_spacing_m < 0.0)
        throw std::invalid_argument("element spacings must be >= 0");
    if (modulation.size() != 0 &&
        modulation.size() != static_cast<Eigen::Index>(pulses) * tx_count * subbands)
        throw std::invalid_argument("modulation must be empty or of size P*L*Q");
    if (monostatic_fda) {
        // One receive channel per element pair; the array is shared, so the
        // recorded receive spacing must match the transmit spacing.
        if (rx_count != 1)
            throw std::invalid_argument("monostatic FDA configs use a single receive channel");
        if (rx_spacing_m != tx_spacing_m)
            throw std::invalid_argument("monostatic FDA configs require d_R = d_T");
    }
    if (platform_speed_mps < 0.0) throw std::invalid_argument("platform speed must be >= 0");
}

Eigen::MatrixXi stretched_sum(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    Eigen::MatrixXi out(rows, cols);
    for (Eigen::Index ia = 0; ia < a.rows(); ++ia)
        for (Eigen::Index ib = 0; ib < b.rows(); ++ib)
            for (Eigen::Index ja = 0; ja < a.cols(); ++ja)
                for (Eigen::Index jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) + b(ib, jb);
    return out;
}

std::vector<double> stretched_sum(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double va : a)
        for (double vb : b) out.push_back(va + vb);
    return out;
}

AugmentedFdcm build_afdcm(const WaveformConfig& cfg) {
    cfg.validate();
    Eigen::MatrixXi offsets(cfg.subbands, 1);
    for (int q = 0; q < cfg.subbands; ++q) offsets(q, 0) = q;

    AugmentedFdcm out;
    out.codes = stretched_sum(cfg.codes, offsets);
    out.rx_expanded.resize(out.codes.rows(), out.codes.cols() * cfg.rx_count);
    for (Eigen::Index r = 0; r < out.codes.rows(); ++r)
        for (Eigen::Index c = 0; c < out.codes.cols(); ++c)
            for (int k = 0; k < cfg.rx_count; ++k)
                out.rx_expanded(r, c * cfg.rx_count + k) = out.codes(r, c);

    std::set<int> uniq(out.codes.data(), out.codes.data() + out.codes.size());
    out.unique_codes.assign(uniq.begin(), uniq.end());
    return out;
}

std::vector<int> assign_linear(int count, int code_count) {
    if (count < 1 || code_count < 1)
        throw std::invalid_argument("assignment needs count >= 1 and code_count >= 1");
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) out[i] = i % code_count;
    return out;
}

std::vector<int> assign_random(int count, int code_count, std::uint64_t seed) {
    if (count < 1 || code_count < 1)
        throw std::invalid_argument("assignment needs count >= 1 and code_count >= 1");
    Xoshiro256pp rng(seed);
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) out[i] = rng.uniform_int(code_count);
    return out;
}

std::vector<int> assign_shuffled(int count, int code_count, std::uint64_t seed) {
    std::vector<int> out = assign_linear(count, code_count);
    std::sort(out.begin(), out.end());
    std::uint64_t state = seed ^ 0x5bf03635dee39d1dULL;
    Xoshiro256pp rng(state);
    for (int i = count - 1; i > 0; --i)
        std::swap(out[i], out[rng.uniform_int(i + 1)]);
    return out;
}

namespace {

Eigen::MatrixXi row_codes(const std::vector<int>& codes) {
    Eigen::MatrixXi g(1, static_cast<Eigen::Index>(codes.size()));
    for (std::size_t i = 0; i < codes.size(); ++i) g(0, static_cast<Eigen::Index>(i)) = codes[i];
    return g;
}

}  // namespace

WaveformConfig adapt_fda(int tx_count, int subbands, const std::vector<int>& element_codes,
                         double carrier_hz, double freq_step_hz, double element_spacing_m) {
    if (static_cast<int>(element_codes.size()) != tx_count)
        throw std::invalid_argument("adapt_fda needs one code per element");
    WaveformConfig cfg;
    cfg.pulses = 1;
    cfg.subbands = subbands;
    cfg.tx_count = tx_count;
    cfg.rx_count = 1;
    cfg.carrier_hz = carrier_hz;
    cfg.freq_step_hz = freq_step_hz;
    cfg.tx_spacing_m = element_spacing_m;
    cfg.rx_spacing_m = element_spacing_m;
    cfg.pri_s = 1.0e-4;
    cfg.codes = row_codes(element_codes);
    cfg.monostatic_fda = true;
    cfg.kind = WaveformKind::fda;
    cfg.validate();
    return cfg;
}

WaveformConfig adapt_sf(int pulses, int subbands, const std::vector<int>& pulse_codes,
                        double carrier_hz, double freq_step_hz, double pri_s) {
    if (static_cast<int>(pulse_codes.size()) != pulses)
        throw std::invalid_argument("adapt_sf needs one code per pulse");
    WaveformConfig cfg;
    cfg.pulses = pulses;
    cfg.subbands = subbands;
    cfg.tx_count = 1;
    cfg.rx_count = 1;
    cfg.carrier_hz = carrier_hz;
    cfg.freq_step_hz = freq_step_hz;
    cfg.tx_spacing_m = 0.0;
    cfg.rx_spacing_m = 0.0;
    cfg.pri_s = pri_s;
    cfg.codes = row_codes(pulse_codes).transpose();
    cfg.kind = WaveformKind::sf;
    cfg.validate();
    return cfg;
}

WaveformConfig adapt_fdmimo(int tx_count, int rx_count, int subbands,
                            const std::vector<int>& element_codes, double carrier_hz,
                            double freq_step_hz, double tx_spacing_m, double rx_spacing_m) {
    if (static_cast<int>(element_codes.size()) != tx_count)
        throw std::invalid_argument("adapt_fdmimo needs one code per transmit element");
    WaveformConfig cfg;
    cfg.pulses = 1;
    cfg.subbands = subbands;
    cfg.tx_count = tx_count;
    cfg.rx_count = rx_count;
    cfg.carrier_hz = carrier_hz;
    cfg.freq_step_hz = freq_step_hz;
    cfg.tx_spacing_m = tx_spacing_m;
    cfg.rx_spacing_m = rx_spacing_m;
    cfg.pri_s = 1.0e-4;
    cfg.codes = row_codes(element_codes);
    cfg.kind = WaveformKind::fd_mimo;
    cfg.validate();
    return cfg;
}

WaveformConfig adapt_stap(int tx_count, int rx_count, int pulses,
                          const std::vector<int>& element_codes, double platform_speed_mps,
                          double carrier_hz, double freq_step_hz, double tx_spacing_m,
                          double rx_spacing_m, double pri_s) {
    if (static_cast<int>(element_codes.size()) != tx_count)
        throw std::invalid_argument("adapt_stap needs one code per transmit element");
    if (platform_speed_mps <= 0.0)
        throw std::invalid_argument("adapt_stap needs a positive platform speed");
    WaveformConfig cfg;
    cfg.pulses = pulses;
    cfg.subbands = 1;
    cfg.tx_count = tx_count;
    cfg.rx_count = rx_count;
    cfg.carrier_hz = carrier_hz;
    cfg.freq_step_hz = freq_step_hz;
    cfg.tx_spacing_m = tx_spacing_m;
    cfg.rx_spacing_m = rx_spacing_m;
    cfg.pri_s = pri_s;
    // Element carriers stay fixed over the train; every pulse row repeats the
    // element code vector.
    cfg.codes.resize(pulses, tx_count);
    for (int p = 0; p < pulses; ++p)
        for (int l = 0; l < tx_count; ++l) cfg.codes(p, l) = element_codes[l];
    cfg.platform_speed_mps = platform_speed_mps;
    cfg.kind = WaveformKind::stap;
    cfg.validate();
    return cfg;
}

}  // namespace fdclutter
