#pragma once

// Simulated annealing over the twelve-variable design box. The objective is
// the width (Hz) of the longest band with alpha >= threshold, zero when no
// such band exists, so the absorption constraint needs no penalty term.

#include "mppabs/acoustics.h"
#include "mppabs/spectrum.h"
#include "mppabs/structure.h"
#include "mppabs/sweep.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace mppabs {

// How the cooling rate r updates the temperature:
//   decrement:  T <- (1 - r) T
//   multiplier: T <- r T
enum class CoolingReading { decrement, multiplier };

struct AnnealingSchedule {
    double initial_temperature = 100.0;
    int iterations_per_temperature = 100;
    double cooling_rate = 0.2;
    double termination_temperature = 1e-6;
    double step_fraction = 0.1;
    std::uint64_t seed = 1;
    CoolingReading cooling = CoolingReading::decrement;

    void validate() const;
    double next_temperature(double t) const;
    // Number of temperature levels the loop visits.
    int cooling_levels() const;

    friend bool operator==(const AnnealingSchedule&, const AnnealingSchedule&) = default;
};

// Seeded 64-bit Mersenne twister with a portable [0, 1) draw, so traces do
// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

struct ObjectiveProblem {
    MppSet mpps;
    Medium medium;
    FrequencyGrid grid;
    double threshold = kDefaultThreshold;
    Execution execution = Execution::parallel;
};

struct Evaluation {
    double objective = 0.0; // Hz
    std::optional<EffectiveBand> band;
};

Evaluation evaluate_design(const DesignVector& design, const ObjectiveProblem& problem);

// Effective band width in Hz, or 0 when no sample reaches the threshold.
double objective(const DesignVector& design, const ObjectiveProblem& problem);

// Uniform perturbation of every coordinate within +/- step_fraction of its
// bound range, then clamped into the box.
DesignVector neighbor(const DesignVector& design, const AnnealingSchedule& schedule, Rng& rng);

// Metropolis rule for maximization. Only draws from rng when delta < 0.
bool accept(double delta_objective, double temperature, Rng& rng);

struct TraceRow {
    double temperature;
    long iteration; // proposals made so far
    double current;
    double best;
};

struct OptimizationResult {
    DesignVector best_design;
    double best_objective = 0.0;
    std::optional<EffectiveBand> best_band;
    std::vector<TraceRow> trace;
    long evaluations = 0;
    std::uint64_t seed = 0;
};

// Called once per objective evaluation, in order.
using EvaluationObserver = std::function<void(const DesignVector&, const Evaluation&)>;

// One annealing chain. Returns the best design ever evaluated, not the final state.
OptimizationResult anneal(const DesignVector& initial, const ObjectiveProblem& problem,
                          const AnnealingSchedule& schedule, const EvaluationObserver& observe = {});

// Independent chains, one per seed, each with its own stream. Chains run
// concurrently when OpenMP is available; results come back in seed order.
std::vector<OptimizationResult> anneal_seeds(const DesignVector& initial, const ObjectiveProblem& problem,
                                             const AnnealingSchedule& schedule,
                                             const std::vector<std::uint64_t>& seeds);

// Index of the highest objective; ties go to the earliest entry.
std::size_t best_of(const std::vector<OptimizationResult>& results);

} // namespace mppabs
