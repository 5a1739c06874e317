#include "mppabs/acoustics.h"

#include "mppabs/errors.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace mppabs {

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw ValidationError(field, "must be a positive finite number, got " + std::to_string(value));
}

void require_frequency(double frequency_hz) {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw DomainError("frequency must be positive, got " + std::to_string(frequency_hz));
}

struct ElementMatrixVisitor {
    double omega;
    const Medium& medium;

    TransferMatrix operator()(const StraightPipe& pipe) const {
        const double kl = omega / medium.sound_speed * pipe.length;
        const double zc = medium.characteristic_impedance() / circle_area(pipe.diameter);
        const double c = std::cos(kl);
        const double s = std::sin(kl);
        return {WideComplex(c, 0.0L), WideComplex(0.0L, zc * s), WideComplex(0.0L, s / zc), WideComplex(c, 0.0L)};
    }

    TransferMatrix operator()(const AreaChange&) const { return TransferMatrix::identity(); }

    TransferMatrix operator()(const MppScreen& mpp) const {
        const double f = omega / (2.0 * kPi);
        const double scale = medium.characteristic_impedance() / circle_area(mpp.panel.duct_diameter);
        TransferMatrix m;
        const Complex z = scale * mpp_normalized_impedance(mpp.panel, f, medium);
        m.a12 = WideComplex(z.real(), z.imag());
        return m;
    }
};

// Right-multiplies an accumulated product by one element in place, using the
// element's structure instead of a general 2x2 complex product.
struct RightMultiplyVisitor {
    double omega;
    const Medium& medium;
    TransferMatrix& acc;

    void operator()(const StraightPipe& pipe) const {
        // [[c, i zc s], [i s / zc, c]]
        const double kl = omega / medium.sound_speed * pipe.length;
        const double zc = medium.characteristic_impedance() / circle_area(pipe.diameter);
        const long double c = std::cos(kl);
        const double s = std::sin(kl);
        const long double b = zc * s; // Im a12
        const long double g = s / zc; // Im a21
        const auto times_i = [](const WideComplex& z) { return WideComplex(-z.imag(), z.real()); };
        const WideComplex a11 = acc.a11 * c + times_i(acc.a12) * g;
        const WideComplex a12 = times_i(acc.a11) * b + acc.a12 * c;
        const WideComplex a21 = acc.a21 * c + times_i(acc.a22) * g;
        const WideComplex a22 = times_i(acc.a21) * b + acc.a22 * c;
        acc = {a11, a12, a21, a22};
    }

    void operator()(const AreaChange&) const {}

    void operator()(const MppScreen& mpp) const {
        // [[1, z], [0, 1]]
        const TransferMatrix m = ElementMatrixVisitor{omega, medium}(mpp);
        const WideComplex z = m.a12;
        const auto mul = [](const WideComplex& a, const WideComplex& b) {
            return WideComplex(a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real());
        };
        acc.a12 += mul(acc.a11, z);
        acc.a22 += mul(acc.a21, z);
    }
};

} // namespace

void Medium::validate() const {
    require_positive(sound_speed, "medium.sound_speed");
    require_positive(density, "medium.density");
    require_positive(dynamic_viscosity, "medium.dynamic_viscosity");
}

void MppPanel::validate() const {
    require_positive(thickness, "mpp.t_h");
    require_positive(aperture, "mpp.d_h");
    require_positive(duct_diameter, "mpp.duct_diameter");
    if (!(porosity > 0.0 && porosity < 1.0))
        throw ValidationError("mpp.sigma_h", "porosity must lie in (0, 1), got " + std::to_string(porosity));
}

void ElementChain::validate() const {
    if (elements.empty())
        throw UsageError("element chain is empty");
    require_positive(main_duct_diameter, "main_duct_diameter");
    for (const auto& e : elements) {
        if (const auto* pipe = std::get_if<StraightPipe>(&e)) {
            require_positive(pipe->length, "pipe.length");
            require_positive(pipe->diameter, "pipe.diameter");
        } else if (const auto* mpp = std::get_if<MppScreen>(&e)) {
            mpp->panel.validate();
        }
    }
}

double perforate_constant(double frequency_hz, double aperture, const Medium& medium) {
    require_frequency(frequency_hz);
    const double omega = 2.0 * kPi * frequency_hz;
    return aperture * std::sqrt(omega * medium.density / (4.0 * medium.dynamic_viscosity));
}

Complex mpp_normalized_impedance(const MppPanel& panel, double frequency_hz, const Medium& medium) {
    const double k = perforate_constant(frequency_hz, panel.aperture, medium);
    const double omega = 2.0 * kPi * frequency_hz;
    const double t = panel.thickness;
    const double d = panel.aperture;
    const double sigma = panel.porosity;

    const double resistance = 32.0 * medium.dynamic_viscosity * t /
                              (sigma * medium.density * medium.sound_speed * d * d) *
                              (std::sqrt(1.0 + k * k / 32.0) + std::sqrt(2.0) / 32.0 * k * d / t);
    // Maa's reactance uses (9 + K^2/2)^(-1/2).
    const double reactance = omega * t / (sigma * medium.sound_speed) *
                             (1.0 + 1.0 / std::sqrt(9.0 + 0.5 * k * k) + 0.85 * d / t);
    return {resistance, reactance};
}

TransferMatrix element_matrix(const SoundElement& element, double frequency_hz, const Medium& medium) {
    require_frequency(frequency_hz);
    return std::visit(ElementMatrixVisitor{2.0 * kPi * frequency_hz, medium}, element);
}

TransferMatrix chain_matrix(const ElementChain& chain, double frequency_hz, const Medium& medium) {
    if (chain.elements.empty())
        throw UsageError("element chain is empty");
    require_frequency(frequency_hz);
    TransferMatrix product;
    const RightMultiplyVisitor visit{2.0 * kPi * frequency_hz, medium, product};
    for (const auto& element : chain.elements)
        std::visit(visit, element);
    return product;
}

double absorption_from_matrix(const TransferMatrix& m, double main_duct_area, double frequency_hz,
                              const Medium& medium) {
    // Rigid wall: U_t = 0, so the input impedance is a11 / a21.
    const long double z0 = medium.characteristic_impedance() / main_duct_area;
    const WideComplex num = m.a11 - z0 * m.a21;
    const WideComplex den = m.a11 + z0 * m.a21;
    if (den == WideComplex(0.0L, 0.0L))
        throw SingularConfigurationError(frequency_hz);
    const auto alpha = static_cast<double>(1.0L - std::norm(num / den));
    return std::clamp(alpha, 0.0, 1.0);
}

double absorption_at(const ElementChain& chain, double frequency_hz, const Medium& medium) {
    const TransferMatrix m = chain_matrix(chain, frequency_hz, medium);
    return absorption_from_matrix(m, circle_area(chain.main_duct_diameter), frequency_hz, medium);
}

} // namespace mppabs
