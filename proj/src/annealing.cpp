#include "mppabs/annealing.h"

#include "mppabs/errors.h"

#include <algorithm>
#include <cmath>
#include <exception>

namespace mppabs {

void AnnealingSchedule::validate() const {
    if (!(initial_temperature > 0.0))
        throw ValidationError("schedule.initial_temperature", "must be positive");
    if (!(termination_temperature > 0.0))
        throw ValidationError("schedule.termination_temperature", "must be positive");
    if (!(termination_temperature <= initial_temperature))
        throw ValidationError("schedule.termination_temperature", "must not exceed initial_temperature");
    if (iterations_per_temperature < 1)
        throw ValidationError("schedule.iterations_per_temperature", "must be at least 1");
    if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
        throw ValidationError("schedule.cooling_rate", "must lie in (0, 1)");
    if (!(step_fraction >= 0.0) || !std::isfinite(step_fraction))
        throw ValidationError("schedule.step_fraction", "must be non-negative");
}

double AnnealingSchedule::next_temperature(double t) const {
    return cooling == CoolingReading::decrement ? (1.0 - cooling_rate) * t : cooling_rate * t;
}

int AnnealingSchedule::cooling_levels() const {
    int levels = 0;
    for (double t = initial_temperature; t > termination_temperature; t = next_temperature(t))
        ++levels;
    return levels;
}

Evaluation evaluate_design(const DesignVector& design, const ObjectiveProblem& problem) {
    const ElementChain chain = build_chain(design, problem.mpps);
    const AbsorptionSpectrum spectrum =
        absorption_spectrum(chain, problem.grid, problem.medium, problem.execution);
    Evaluation e;
    e.band = effective_band(spectrum, problem.threshold);
    e.objective = e.band ? e.band->width : 0.0;
    return e;
}

double objective(const DesignVector& design, const ObjectiveProblem& problem) {
    return evaluate_design(design, problem).objective;
}

DesignVector neighbor(const DesignVector& design, const AnnealingSchedule& schedule, Rng& rng) {
    DesignVector out = design;
    for (const auto& field : design_fields()) {
        const double half_width = schedule.step_fraction * field.range();
        out.*field.member += rng.uniform(-half_width, half_width);
    }
    return clamp_to_bounds(out);
}

bool accept(double delta_objective, double temperature, Rng& rng) {
    if (delta_objective >= 0.0)
        return true;
    return rng.uniform() < std::exp(delta_objective / temperature);
}

OptimizationResult anneal(const DesignVector& initial, const ObjectiveProblem& problem,
                          const AnnealingSchedule& schedule, const EvaluationObserver& observe) {
    schedule.validate();
    Rng rng(schedule.seed);

    OptimizationResult result;
    result.seed = schedule.seed;

    DesignVector current = initial;
    Evaluation current_eval = evaluate_design(current, problem);
    if (observe)
        observe(current, current_eval);
    result.evaluations = 1;
    result.best_design = current;
    result.best_objective = current_eval.objective;
    result.best_band = current_eval.band;

    long iteration = 0;
    double t = schedule.initial_temperature;
    result.trace.push_back({t, iteration, current_eval.objective, result.best_objective});

    while (t > schedule.termination_temperature) {
        for (int k = 0; k < schedule.iterations_per_temperature; ++k) {
            DesignVector candidate = neighbor(current, schedule, rng);
            Evaluation candidate_eval = evaluate_design(candidate, problem);
            if (observe)
                observe(candidate, candidate_eval);
            ++result.evaluations;
            ++iteration;
            if (accept(candidate_eval.objective - current_eval.objective, t, rng)) {
                current = candidate;
                current_eval = std::move(candidate_eval);
                if (current_eval.objective > result.best_objective) {
                    result.best_design = current;
                    result.best_objective = current_eval.objective;
                    result.best_band = current_eval.band;
                }
            }
        }
        result.trace.push_back({t, iteration, current_eval.objective, result.best_objective});
        t = schedule.next_temperature(t);
    }
    return result;
}

std::vector<OptimizationResult> anneal_seeds(const DesignVector& initial, const ObjectiveProblem& problem,
                                             const AnnealingSchedule& schedule,
                                             const std::vector<std::uint64_t>& seeds) {
    schedule.validate();
    std::vector<OptimizationResult> results(seeds.size());
    // Chains are the parallel unit here; each sweeps its spectrum serially.
    ObjectiveProblem chain_problem = problem;
    chain_problem.execution = Execution::serial;

    std::exception_ptr error;
    const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            AnnealingSchedule s = schedule;
            s.seed = seeds[static_cast<std::size_t>(i)];
            results[static_cast<std::size_t>(i)] = anneal(initial, chain_problem, s);
        } catch (...) {
#pragma omp critical(mppabs_anneal_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    return results;
}

std::size_t best_of(const std::vector<OptimizationResult>& results) {
    if (results.empty())
        throw UsageError("best_of: no results");
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].best_objective > results[best].best_objective)
            best = i;
    return best;
}

} // namespace mppabs
