// mppabs: absorption spectra, band reports and bandwidth optimization for
// multi-chamber micro-perforated panel absorbers.

#include "mppabs/commands.h"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

void add_grid_flags(CLI::App* cmd, mppabs::Overrides& o) {
    cmd->add_option("--fmin", o.f_min, "Lowest grid frequency (Hz)");
    cmd->add_option("--fmax", o.f_max, "Highest grid frequency (Hz)");
    cmd->add_option("--step", o.step, "Grid spacing (Hz)");
    cmd->add_option("--threshold", o.threshold, "Absorption threshold defining the effective band (default 0.8)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Micro-perforated panel absorber solver and optimizer"};
    app.require_subcommand(1);

    mppabs::SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Compute the absorption spectrum and effective band");
    simulate->add_option("--config", sim.config, "Structure config (JSON)")->required()->check(CLI::ExistingFile);
    simulate->add_option("--out", sim.out, "Spectrum CSV output path");
    add_grid_flags(simulate, sim.overrides);

    mppabs::OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "Maximize the effective bandwidth by simulated annealing");
    optimize->add_option("--config", opt.config, "Initial design and schedule (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    optimize->add_option("--out", opt.out_dir, "Output directory")->required();
    optimize->add_option("--seed", opt.overrides.seed, "RNG seed");
    optimize->add_option("--restarts", opt.restarts, "Independent chains seeded seed, seed+1, ...");
    const std::map<std::string, mppabs::CoolingReading> readings{
        {"decrement", mppabs::CoolingReading::decrement}, {"multiplier", mppabs::CoolingReading::multiplier}};
    optimize->add_option("--cooling-reading", opt.overrides.cooling, "T <- (1-r)T (decrement) or T <- rT (multiplier)")
        ->transform(CLI::CheckedTransformer(readings, CLI::ignore_case));
    add_grid_flags(optimize, opt.overrides);

    mppabs::CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "Compare the effective bands of two structures");
    compare->add_option("config_a", cmp.config_a, "Baseline config")->required()->check(CLI::ExistingFile);
    compare->add_option("config_b", cmp.config_b, "Candidate config")->required()->check(CLI::ExistingFile);
    add_grid_flags(compare, cmp.overrides);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate)
            mppabs::cmd_simulate(sim, std::cout);
        else if (*optimize)
            mppabs::cmd_optimize(opt, std::cout);
        else if (*compare)
            mppabs::cmd_compare(cmp, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "mppabs: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
