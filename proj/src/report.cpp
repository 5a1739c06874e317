#include "mppabs/report.h"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mppabs {

namespace {

void band_lines(std::ostream& os, const std::optional<EffectiveBand>& band, const std::string& indent) {
    if (!band) {
        os << indent << "no effective band\n";
        return;
    }
    os << std::fixed;
    os << indent << "f_low_hz    " << std::setprecision(2) << band->f_low << '\n';
    os << indent << "f_high_hz   " << std::setprecision(2) << band->f_high << '\n';
    os << indent << "width_hz    " << std::setprecision(2) << band->width << '\n';
    os << indent << "octaves     " << std::setprecision(3) << band->octaves << '\n';
    os << indent << "mean_alpha  " << std::setprecision(3) << band->mean_alpha << '\n';
    os << std::defaultfloat;
}

} // namespace

void write_spectrum_csv(std::ostream& out, const AbsorptionSpectrum& spectrum) {
    out << "frequency_hz,alpha\n" << std::setprecision(6);
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        out << spectrum.frequency[i] << ',' << spectrum.alpha[i] << '\n';
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
    out << "temperature,iteration,current,best\n" << std::setprecision(10);
    for (const auto& row : trace)
        out << row.temperature << ',' << row.iteration << ',' << row.current << ',' << row.best << '\n';
}

std::string format_band_report(const std::optional<EffectiveBand>& band, double threshold) {
    std::ostringstream os;
    os << "effective band (alpha >= " << threshold << ")\n";
    band_lines(os, band, "  ");
    return os.str();
}

std::optional<double> octave_ratio(const std::optional<EffectiveBand>& a, const std::optional<EffectiveBand>& b) {
    if (!a || !b)
        return std::nullopt;
    return b->octaves / a->octaves;
}

std::string format_compare_report(const std::string& label_a, const std::optional<EffectiveBand>& a,
                                  const std::string& label_b, const std::optional<EffectiveBand>& b) {
    std::ostringstream os;
    os << "A: " << label_a << '\n';
    band_lines(os, a, "  ");
    os << "B: " << label_b << '\n';
    band_lines(os, b, "  ");
    if (const auto ratio = octave_ratio(a, b))
        os << "octave ratio (B/A)  " << std::fixed << std::setprecision(3) << *ratio << '\n';
    else
        os << "octave ratio (B/A)  undefined\n";
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << contents;
    out.close();
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace mppabs
