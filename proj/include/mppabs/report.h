#pragma once

#include "mppabs/annealing.h"
#include "mppabs/spectrum.h"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace mppabs {

// "frequency_hz,alpha" header, one row per sample, 6 significant digits.
void write_spectrum_csv(std::ostream& out, const AbsorptionSpectrum& spectrum);

// "temperature,iteration,current,best".
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace);

std::string format_band_report(const std::optional<EffectiveBand>& band, double threshold);

// Both bands side by side plus octaves(b) / octaves(a) when both exist.
std::string format_compare_report(const std::string& label_a, const std::optional<EffectiveBand>& a,
                                  const std::string& label_b, const std::optional<EffectiveBand>& b);

std::optional<double> octave_ratio(const std::optional<EffectiveBand>& a, const std::optional<EffectiveBand>& b);

// Whole-file write; throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

} // namespace mppabs
