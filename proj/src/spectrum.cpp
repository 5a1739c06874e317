#include "mppabs/spectrum.h"

#include "mppabs/errors.h"

#include <cmath>
#include <string>

namespace mppabs {

void FrequencyGrid::validate() const {
    if (!(f_min > 0.0) || !std::isfinite(f_min))
        throw ValidationError("grid.f_min", "must be positive");
    if (!(f_max > f_min) || !std::isfinite(f_max))
        throw ValidationError("grid.f_max", "must exceed f_min");
    if (!(step > 0.0) || !std::isfinite(step))
        throw ValidationError("grid.step", "must be positive");
}

std::size_t FrequencyGrid::size() const {
    // The small slack keeps f_max on the grid despite rounding in (f_max - f_min) / step.
    return static_cast<std::size_t>(std::floor((f_max - f_min) / step + 1e-9)) + 1;
}

std::vector<double> FrequencyGrid::frequencies() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = at(i);
    return out;
}

namespace {

double crossing(double f_in, double a_in, double f_out, double a_out, double threshold) {
    // a_in >= threshold > a_out
    const double t = (a_in - threshold) / (a_in - a_out);
    return f_in + t * (f_out - f_in);
}

} // namespace

std::optional<EffectiveBand> effective_band(const AbsorptionSpectrum& spectrum, double threshold) {
    const auto& f = spectrum.frequency;
    const auto& a = spectrum.alpha;
    const std::size_t n = f.size();

    std::size_t best_begin = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < n;) {
        if (a[i] < threshold) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && a[j + 1] >= threshold)
            ++j;
        if (j - i + 1 > best_len) {
            best_begin = i;
            best_len = j - i + 1;
        }
        i = j + 1;
    }
    if (best_len == 0)
        return std::nullopt;

    const std::size_t lo = best_begin;
    const std::size_t hi = best_begin + best_len - 1;
    EffectiveBand band;
    band.f_low = lo == 0 ? f[lo] : crossing(f[lo], a[lo], f[lo - 1], a[lo - 1], threshold);
    band.f_high = hi + 1 == n ? f[hi] : crossing(f[hi], a[hi], f[hi + 1], a[hi + 1], threshold);
    if (!(band.f_high > band.f_low))
        return std::nullopt;

    band.width = band.f_high - band.f_low;
    band.octaves = octave_bands(band.f_low, band.f_high);
    band.mean_alpha = mean_alpha(spectrum, band);
    return band;
}

double octave_bands(double f_low, double f_high) {
    if (!(f_low > 0.0) || !(f_high > f_low))
        throw DomainError("octave_bands requires 0 < f_low < f_high, got (" + std::to_string(f_low) +
                          ", " + std::to_string(f_high) + ")");
    return std::log2(f_high / f_low);
}

double mean_alpha(const AbsorptionSpectrum& spectrum, const EffectiveBand& band) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (spectrum.frequency[i] >= band.f_low && spectrum.frequency[i] <= band.f_high) {
            sum += spectrum.alpha[i];
            ++count;
        }
    }
    if (count == 0)
        throw DomainError("band contains no spectrum samples");
    return sum / static_cast<double>(count);
}

} // namespace mppabs
