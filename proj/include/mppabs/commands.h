#pragma once

// Implementations behind the `mppabs` subcommands. Each throws on failure
// (ConfigError, ValidationError, std::runtime_error for I/O); the executable
// maps exceptions to a message and a nonzero exit code.

#include "mppabs/annealing.h"
#include "mppabs/config.h"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace mppabs {

// Command-line values that take precedence over the config file.
struct Overrides {
    std::optional<double> f_min;
    std::optional<double> f_max;
    std::optional<double> step;
    std::optional<double> threshold;
    std::optional<std::uint64_t> seed;
    std::optional<CoolingReading> cooling;
};

void apply_overrides(RunConfig& config, const Overrides& overrides);

struct SimulateArgs {
    std::filesystem::path config;
    std::optional<std::filesystem::path> out; // spectrum CSV
    Overrides overrides;
};

struct OptimizeArgs {
    std::filesystem::path config;
    std::filesystem::path out_dir;
    int restarts = 1; // seeds seed, seed + 1, ...
    Overrides overrides;
};

struct CompareArgs {
    std::filesystem::path config_a;
    std::filesystem::path config_b;
    Overrides overrides;
};

// Band report of a structure; writes the spectrum CSV when args.out is set.
std::optional<EffectiveBand> cmd_simulate(const SimulateArgs& args, std::ostream& report);

// Writes best_design.json, trace.csv and report.txt into args.out_dir.
OptimizationResult cmd_optimize(const OptimizeArgs& args, std::ostream& report);

void cmd_compare(const CompareArgs& args, std::ostream& report);

inline constexpr const char* kBestDesignFile = "best_design.json";
inline constexpr const char* kTraceFile = "trace.csv";
inline constexpr const char* kReportFile = "report.txt";

} // namespace mppabs
