#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace mppabs {

// Uniform grid f_min, f_min + step, ... up to and including f_max when it falls on the grid.
struct FrequencyGrid {
    double f_min = 1.0;
    double f_max = 2000.0;
    double step = 1.0;

    void validate() const;
    std::size_t size() const;
    double at(std::size_t i) const { return f_min + static_cast<double>(i) * step; }
    std::vector<double> frequencies() const;

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;
};

struct AbsorptionSpectrum {
    std::vector<double> frequency; // Hz, strictly increasing
    std::vector<double> alpha;     // in [0, 1]

    std::size_t size() const { return frequency.size(); }
};

struct EffectiveBand {
    double f_low = 0.0;
    double f_high = 0.0;
    double width = 0.0;
    double octaves = 0.0;
    double mean_alpha = 0.0;
};

inline constexpr double kDefaultThreshold = 0.8;

// Longest contiguous run of samples with alpha >= threshold. Edges are
// linearly interpolated to the threshold crossing against the neighbouring
// sub-threshold sample; a run touching the end of the grid keeps the grid
// endpoint. Ties go to the lower-frequency run. Empty if nothing qualifies
// or the run collapses to a single isolated endpoint sample.
std::optional<EffectiveBand> effective_band(const AbsorptionSpectrum& spectrum,
                                            double threshold = kDefaultThreshold);

// log2(f_high / f_low). Throws DomainError unless 0 < f_low < f_high.
double octave_bands(double f_low, double f_high);

// Mean alpha over grid samples inside [f_low, f_high]. Throws DomainError if none.
double mean_alpha(const AbsorptionSpectrum& spectrum, const EffectiveBand& band);

} // namespace mppabs
