#pragma once

// JSON run configuration. Lengths are millimeters in files and meters once
// turned into element chains; frequencies are Hz.
//
//   {
//     "structure": {
//       "type": "three_chamber",
//       "d_m": 10, "d_2": 60, ..., "l_6": 30,
//       "mpps": [{"t_h": 0.6, "d_h": 0.2, "sigma_h": 0.025}, {...}, {...}]
//     },
//     "medium":   {"sound_speed": 343, "density": 1.204, "dynamic_viscosity": 1.81e-5},
//     "grid":     {"f_min": 1, "f_max": 2000, "step": 1},
//     "threshold": 0.8,
//     "schedule": {"initial_temperature": 100, "iterations_per_temperature": 100,
//                  "cooling_rate": 0.2, "termination_temperature": 1e-6,
//                  "step_fraction": 0.1, "seed": 1, "cooling_reading": "decrement"}
//   }
//
// A single-chamber structure uses "type": "single_chamber" with fields
// d_m, l_m, d_e, t_e and one "mpp" object. Every section but "structure" is optional.

#include "mppabs/acoustics.h"
#include "mppabs/annealing.h"
#include "mppabs/spectrum.h"
#include "mppabs/structure.h"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace mppabs {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ThreeChamberStructure {
    DesignVector design;
    MppSet mpps;

    friend bool operator==(const ThreeChamberStructure&, const ThreeChamberStructure&) = default;
};

using StructureConfig = std::variant<ThreeChamberStructure, SingleChamberDesign>;

struct RunConfig {
    StructureConfig structure;
    Medium medium;
    FrequencyGrid grid;
    double threshold = kDefaultThreshold;
    std::optional<AnnealingSchedule> schedule;
};

ElementChain build_chain(const StructureConfig& structure);

// Parses and validates. ConfigError messages carry the line/column of syntax
// errors or the dotted path of the offending field.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

std::string serialize_config(const RunConfig& config);
void save_config(const RunConfig& config, const std::filesystem::path& path);

} // namespace mppabs
