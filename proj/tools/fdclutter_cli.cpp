#include <cstdlib>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "fdclutter/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"fdclutter - clutter rank studies for frequency diverse radar waveforms"};
    app.require_subcommand(1);

    fdclutter::ExperimentSpec spec;
    for (const std::string& name : fdclutter::preset_names()) {
        CLI::App* sub = app.add_subcommand(
            name, name == "custom" ? "Run a sweep described by a config file"
                                   : "Run the built-in " + name + " study");
        sub->add_option("--config", spec.config_path, "Experiment config file");
        sub->add_option("--out", spec.output_dir, "Output directory");
        sub->add_option("--seed", spec.seed, "Base random seed");
        sub->add_option("--jobs", spec.jobs, "Worker threads (0 = all cores)");
        sub->add_option("--rel-tol", spec.rel_tol, "Relative eigenvalue threshold for ranks");
        sub->add_flag("--long-run", spec.long_run,
                      "Detection presets: pfa 1e-5 with scaled-up trial counts");
        sub->callback([&spec, name] { spec.preset = name; });
    }

    CLI11_PARSE(app, argc, argv);

    // Only the output directory may come from the environment.
    if (const char* env_out = std::getenv("FDCLUTTER_OUT"); env_out && *env_out)
        spec.output_dir = env_out;

    try {
        return fdclutter::run_experiment(spec);
    } catch (const std::exception& err) {
        std::cerr << "fdclutter: " << err.what() << "\n";
        return 1;
    }
}
