#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdclutter/detect.hpp"
#include "fdclutter/experiment.hpp"
#include "fdclutter/metrics.hpp"
#include "fdclutter/rank.hpp"

namespace py = pybind11;
using namespace fdclutter;

PYBIND11_MODULE(fdclutter, m) {
    m.doc() = "Clutter-rank analysis of frequency diverse radar waveforms";

    py::enum_<WaveformKind>(m, "WaveformKind")
        .value("rfd_mimo", WaveformKind::rfd_mimo)
        .value("fda", WaveformKind::fda)
        .value("sf", WaveformKind::sf)
        .value("fd_mimo", WaveformKind::fd_mimo)
        .value("stap", WaveformKind::stap);

    py::class_<WaveformConfig>(m, "WaveformConfig")
        .def(py::init<>())
        .def_readwrite("pulses", &WaveformConfig::pulses)
        .def_readwrite("subbands", &WaveformConfig::subbands)
        .def_readwrite("tx_count", &WaveformConfig::tx_count)
        .def_readwrite("rx_count", &WaveformConfig::rx_count)
        .def_readwrite("carrier_hz", &WaveformConfig::carrier_hz)
        .def_readwrite("freq_step_hz", &WaveformConfig::freq_step_hz)
        .def_readwrite("tx_spacing_m", &WaveformConfig::tx_spacing_m)
        .def_readwrite("rx_spacing_m", &WaveformConfig::rx_spacing_m)
        .def_readwrite("pri_s", &WaveformConfig::pri_s)
        .def_readwrite("codes", &WaveformConfig::codes)
        .def_readwrite("monostatic_fda", &WaveformConfig::monostatic_fda)
        .def_readwrite("platform_speed_mps", &WaveformConfig::platform_speed_mps)
        .def_readwrite("kind", &WaveformConfig::kind)
        .def("measurement_dimension", &WaveformConfig::measurement_dimension)
        .def("validate", &WaveformConfig::validate);

    py::class_<AugmentedFdcm>(m, "AugmentedFdcm")
        .def_readonly("codes", &AugmentedFdcm::codes)
        .def_readonly("rx_expanded", &AugmentedFdcm::rx_expanded)
        .def_readonly("unique_codes", &AugmentedFdcm::unique_codes);

    py::class_<Interval>(m, "Interval")
        .def(py::init<>())
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi)
        .def("width", &Interval::width);

    py::class_<ClutterRegion>(m, "ClutterRegion")
        .def(py::init<>())
        .def_readwrite("range_m", &ClutterRegion::range_m)
        .def_readwrite("velocity_mps", &ClutterRegion::velocity_mps)
        .def_readwrite("direction_sine", &ClutterRegion::direction_sine)
        .def_readwrite("range_grid", &ClutterRegion::range_grid)
        .def_readwrite("velocity_grid", &ClutterRegion::velocity_grid)
        .def_readwrite("direction_grid", &ClutterRegion::direction_grid)
        .def_readwrite("ridge_speed_mps", &ClutterRegion::ridge_speed_mps);

    py::class_<FrequencyBlock>(m, "FrequencyBlock")
        .def_readonly("code", &FrequencyBlock::code)
        .def_readonly("member_indices", &FrequencyBlock::member_indices)
        .def_readonly("temporal_aperture_s", &FrequencyBlock::temporal_aperture_s)
        .def_readonly("spatial_aperture_m", &FrequencyBlock::spatial_aperture_m)
        .def_readonly("embedded_aperture_m", &FrequencyBlock::embedded_aperture_m)
        .def_readonly("dimension", &FrequencyBlock::dimension);

    py::class_<RankReport::PerBlock>(m, "BlockRank")
        .def_readonly("code", &RankReport::PerBlock::code)
        .def_readonly("dimension", &RankReport::PerBlock::dimension)
        .def_readonly("rank", &RankReport::PerBlock::rank)
        .def_readonly("velocity_estimate", &RankReport::PerBlock::velocity_estimate)
        .def_readonly("direction_estimate", &RankReport::PerBlock::direction_estimate)
        .def_readonly("lower", &RankReport::PerBlock::lower)
        .def_readonly("upper", &RankReport::PerBlock::upper);

    py::class_<RankReport>(m, "RankReport")
        .def_readonly("numerical_rank", &RankReport::numerical_rank)
        .def_readonly("lower_bound", &RankReport::lower_bound)
        .def_readonly("upper_bound", &RankReport::upper_bound)
        .def_readonly("per_block", &RankReport::per_block)
        .def_readonly("ncr", &RankReport::ncr)
        .def_readonly("tolerance_used", &RankReport::tolerance_used);

    py::class_<ScnrResult>(m, "ScnrResult")
        .def_readonly("exact_db", &ScnrResult::exact_db)
        .def_readonly("approx_db", &ScnrResult::approx_db)
        .def_readonly("noise_power", &ScnrResult::noise_power)
        .def_readonly("clutter_rank_used", &ScnrResult::clutter_rank_used);

    py::class_<DetectionScenario>(m, "DetectionScenario")
        .def(py::init<>())
        .def_readwrite("cfg", &DetectionScenario::cfg)
        .def_readwrite("region", &DetectionScenario::region)
        .def_readwrite("target_range_m", &DetectionScenario::target_range_m)
        .def_readwrite("target_velocity_mps", &DetectionScenario::target_velocity_mps)
        .def_readwrite("target_direction_sine", &DetectionScenario::target_direction_sine)
        .def_readwrite("snr_db", &DetectionScenario::snr_db)
        .def_readwrite("pfa", &DetectionScenario::pfa)
        .def_readwrite("trials_h0", &DetectionScenario::trials_h0)
        .def_readwrite("trials_h1", &DetectionScenario::trials_h1)
        .def_readwrite("per_voxel_power", &DetectionScenario::per_voxel_power)
        .def_readwrite("clutter_to_noise_db", &DetectionScenario::clutter_to_noise_db)
        .def_readwrite("noise_power", &DetectionScenario::noise_power)
        .def_readwrite("seed", &DetectionScenario::seed)
        .def_readwrite("jobs", &DetectionScenario::jobs);

    py::class_<DetectionPoint>(m, "DetectionPoint")
        .def_readonly("snr_db", &DetectionPoint::snr_db)
        .def_readonly("pd", &DetectionPoint::pd);

    py::class_<DetectionResult>(m, "DetectionResult")
        .def_readonly("points", &DetectionResult::points)
        .def_readonly("threshold", &DetectionResult::threshold)
        .def_readonly("pfa_achieved", &DetectionResult::pfa_achieved)
        .def_readonly("trials_h0", &DetectionResult::trials_h0)
        .def_readonly("trials_h1", &DetectionResult::trials_h1);

    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def(py::init<>())
        .def_readwrite("preset", &ExperimentSpec::preset)
        .def_readwrite("config_path", &ExperimentSpec::config_path)
        .def_readwrite("output_dir", &ExperimentSpec::output_dir)
        .def_readwrite("seed", &ExperimentSpec::seed)
        .def_readwrite("jobs", &ExperimentSpec::jobs)
        .def_readwrite("rel_tol", &ExperimentSpec::rel_tol)
        .def_readwrite("long_run", &ExperimentSpec::long_run);

    m.def("stretched_sum",
          py::overload_cast<const Eigen::MatrixXi&, const Eigen::MatrixXi&>(&stretched_sum));
    m.def("assign_linear", &assign_linear);
    m.def("assign_random", &assign_random);
    m.def("assign_shuffled", &assign_shuffled);
    m.def("build_afdcm", &build_afdcm);
    m.def("adapt_fda", &adapt_fda, py::arg("tx_count"), py::arg("subbands"),
          py::arg("element_codes"), py::arg("carrier_hz"), py::arg("freq_step_hz"),
          py::arg("element_spacing_m"));
    m.def("adapt_sf", &adapt_sf, py::arg("pulses"), py::arg("subbands"),
          py::arg("pulse_codes"), py::arg("carrier_hz"), py::arg("freq_step_hz"),
          py::arg("pri_s"));
    m.def("adapt_fdmimo", &adapt_fdmimo, py::arg("tx_count"), py::arg("rx_count"),
          py::arg("subbands"), py::arg("element_codes"), py::arg("carrier_hz"),
          py::arg("freq_step_hz"), py::arg("tx_spacing_m"), py::arg("rx_spacing_m"));
    m.def("adapt_stap", &adapt_stap, py::arg("tx_count"), py::arg("rx_count"),
          py::arg("pulses"), py::arg("element_codes"), py::arg("platform_speed_mps"),
          py::arg("carrier_hz"), py::arg("freq_step_hz"), py::arg("tx_spacing_m"),
          py::arg("rx_spacing_m"), py::arg("pri_s"));

    m.def("range_factor", &range_factor);
    m.def("velocity_factor", &velocity_factor);
    m.def("direction_factor", &direction_factor);
    m.def("steering_vector",
          py::overload_cast<const WaveformConfig&, const AugmentedFdcm&, double, double,
                            double>(&steering_vector));

    m.def("unambiguous_velocity_halfwidth_mps", &unambiguous_velocity_halfwidth_mps);
    m.def("unambiguous_direction_halfwidth", &unambiguous_direction_halfwidth);
    m.def("clutter_region_fractions", &clutter_region_fractions);
    m.def("full_clutter_region", &full_clutter_region);
    m.def("partition_blocks", &partition_blocks);
    m.def("sub_velocity_steering", &sub_velocity_steering);
    m.def("sub_direction_steering", &sub_direction_steering);

    m.def("gramian_analytic", [](const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                 const ClutterRegion& region) {
        return gramian_analytic(cfg, afdcm, region).matrix;
    });
    m.def("gramian_discrete", [](const WaveformConfig& cfg, const AugmentedFdcm& afdcm,
                                 const ClutterRegion& region) {
        return gramian_discrete(cfg, afdcm, region).matrix;
    });
    m.def("permute_block_diagonal",
          [](const Eigen::MatrixXcd& gramian, const std::vector<FrequencyBlock>& blocks) {
              const PermutedGramian out =
                  permute_block_diagonal({gramian, GramianKind::analytic}, blocks);
              return py::make_tuple(out.gramian.matrix, out.permutation);
          });
    m.def("block_gramians", [](const WaveformConfig& cfg,
                               const std::vector<FrequencyBlock>& blocks,
                               const ClutterRegion& region) {
        std::vector<Eigen::MatrixXcd> out;
        for (auto& g : block_gramians(cfg, blocks, region)) out.push_back(std::move(g.matrix));
        return out;
    });

    m.def("numerical_rank", &numerical_rank, py::arg("hermitian_psd"),
          py::arg("rel_tol") = 1e-6);
    m.def("clutter_rank_bounds", &clutter_rank_bounds, py::arg("cfg"), py::arg("afdcm"),
          py::arg("region"), py::arg("rel_tol") = kRankEstimateTolerance);
    m.def("closed_form_clutter_rank", &closed_form_clutter_rank);

    m.def("scnr_exact_db", &scnr_exact_db);
    m.def("scnr_approx_db", &scnr_approx_db, py::arg("clutter_cov"), py::arg("noise_power"),
          py::arg("target"), py::arg("rel_tol") = 1e-6);
    m.def("scnr", &scnr, py::arg("clutter_cov"), py::arg("noise_power"), py::arg("target"),
          py::arg("rel_tol") = 1e-6);
    m.def("mean_projected_power", &mean_projected_power, py::arg("clutter_cov"),
          py::arg("cfg"), py::arg("sample_count"), py::arg("seed"),
          py::arg("rel_tol") = kRankEstimateTolerance);
    m.def("frequency_diversity_loss_db", &frequency_diversity_loss_db);

    m.def("simulate_pd", &simulate_pd, py::call_guard<py::gil_scoped_release>());
    m.def("run_experiment", &run_experiment, py::call_guard<py::gil_scoped_release>());

    m.attr("RANK_ESTIMATE_TOLERANCE") = kRankEstimateTolerance;
    m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;
    m.attr("__version__") = kVersion;
}
