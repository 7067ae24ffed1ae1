#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdclutter/config_file.hpp"
#include "fdclutter/covariance.hpp"
#include "fdclutter/rank.hpp"

namespace fdclutter {

inline constexpr const char* kVersion = "0.1.0";

/// Config-driven experiment runner. Presets reproduce the library's standard
/// study configurations as data tables; `custom` runs a user config.
struct ExperimentSpec {
    std::string preset;        // fig3..fig10 or custom
    std::string config_path;   // required for custom
    std::string output_dir = ".";
    std::uint64_t seed = 1;
    int jobs = 0;              // 0 = hardware concurrency
    double rel_tol = kRankEstimateTolerance;
    bool long_run = false;     // detection presets: pfa 1e-5 scale trial counts
};

const std::vector<std::string>& preset_names();

/// Runs the experiment, writing a results table and a run manifest (plus the
/// permuted-Gramian magnitude file for fig3) under output_dir. Throws on
/// config violations; returns 0 on success.
int run_experiment(const ExperimentSpec& spec);

/// Builds a waveform from [waveform] + [assignment] config sections; shared
/// by the custom preset and the manifest round trip.
WaveformConfig resolve_waveform(const ConfigFile& file, std::uint64_t default_seed);

/// Builds the clutter region from the [region] section of a config.
ClutterRegion resolve_region(const ConfigFile& file, const WaveformConfig& cfg);

/// Writes the fully resolved config + run parameters; parsing the result with
/// resolve_waveform/resolve_region reproduces the same experiment.
void write_manifest(const ExperimentSpec& spec, const ConfigFile& resolved,
                    const std::string& path);

}  // namespace fdclutter
