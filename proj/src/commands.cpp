#include "mppabs/commands.h"

#include "mppabs/errors.h"
#include "mppabs/report.h"
#include "mppabs/sweep.h"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace mppabs {

namespace {

AbsorptionSpectrum simulate(const RunConfig& cfg) {
    return absorption_spectrum(build_chain(cfg.structure), cfg.grid, cfg.medium);
}

std::string design_summary(const DesignVector& d) {
    std::ostringstream os;
    os << "best design (mm)\n" << std::setprecision(6);
    for (const auto& field : design_fields())
        os << "  " << std::left << std::setw(5) << field.name << ' ' << d.*field.member << '\n';
    return os.str();
}

} // namespace

void apply_overrides(RunConfig& config, const Overrides& o) {
    if (o.f_min)
        config.grid.f_min = *o.f_min;
    if (o.f_max)
        config.grid.f_max = *o.f_max;
    if (o.step)
        config.grid.step = *o.step;
    config.grid.validate();
    if (o.threshold) {
        if (!(*o.threshold > 0.0 && *o.threshold < 1.0))
            throw ValidationError("threshold", "must lie in (0, 1)");
        config.threshold = *o.threshold;
    }
    if (o.seed || o.cooling) {
        if (!config.schedule)
            config.schedule = AnnealingSchedule{};
        if (o.seed)
            config.schedule->seed = *o.seed;
        if (o.cooling)
            config.schedule->cooling = *o.cooling;
    }
}

std::optional<EffectiveBand> cmd_simulate(const SimulateArgs& args, std::ostream& report) {
    RunConfig cfg = load_config(args.config);
    apply_overrides(cfg, args.overrides);

    const AbsorptionSpectrum spectrum = simulate(cfg);
    const auto band = effective_band(spectrum, cfg.threshold);
    if (args.out) {
        std::ostringstream csv;
        write_spectrum_csv(csv, spectrum);
        write_text_file(*args.out, csv.str());
    }
    report << format_band_report(band, cfg.threshold);
    return band;
}

OptimizationResult cmd_optimize(const OptimizeArgs& args, std::ostream& report) {
    RunConfig cfg = load_config(args.config);
    apply_overrides(cfg, args.overrides);
    const auto* three = std::get_if<ThreeChamberStructure>(&cfg.structure);
    if (!three)
        throw ConfigError("optimize requires a three_chamber structure");
    if (args.restarts < 1)
        throw ValidationError("restarts", "must be at least 1");
    const AnnealingSchedule schedule = cfg.schedule.value_or(AnnealingSchedule{});

    const ObjectiveProblem problem{three->mpps, cfg.medium, cfg.grid, cfg.threshold, Execution::parallel};
    OptimizationResult best;
    if (args.restarts == 1) {
        best = anneal(three->design, problem, schedule);
    } else {
        std::vector<std::uint64_t> seeds;
        for (int i = 0; i < args.restarts; ++i)
            seeds.push_back(schedule.seed + static_cast<std::uint64_t>(i));
        auto results = anneal_seeds(three->design, problem, schedule, seeds);
        best = std::move(results[best_of(results)]);
    }

    std::filesystem::create_directories(args.out_dir);

    RunConfig emitted = cfg;
    emitted.structure = ThreeChamberStructure{best.best_design, three->mpps};
    emitted.schedule = schedule;
    save_config(emitted, args.out_dir / kBestDesignFile);

    std::ostringstream trace;
    write_trace_csv(trace, best.trace);
    write_text_file(args.out_dir / kTraceFile, trace.str());

    std::ostringstream text;
    text << "seed " << best.seed << ", evaluations " << best.evaluations << '\n';
    text << design_summary(best.best_design);
    text << format_band_report(best.best_band, cfg.threshold);
    write_text_file(args.out_dir / kReportFile, text.str());

    report << text.str();
    return best;
}

void cmd_compare(const CompareArgs& args, std::ostream& report) {
    RunConfig a = load_config(args.config_a);
    RunConfig b = load_config(args.config_b);
    apply_overrides(a, args.overrides);
    apply_overrides(b, args.overrides);
    const auto band_a = effective_band(simulate(a), a.threshold);
    const auto band_b = effective_band(simulate(b), b.threshold);
    report << format_compare_report(args.config_a.string(), band_a, args.config_b.string(), band_b);
}

} // namespace mppabs
