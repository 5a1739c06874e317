#pragma once

// Plane-wave four-pole model of a series chain of duct elements terminated
// by a rigid wall. Pressures are in Pa, volume velocities in m^3/s, so the
// off-diagonal matrix entries carry acoustic impedance units (Pa s/m^3).

#include <complex>
#include <variant>
#include <vector>

namespace mppabs {

using Complex = std::complex<double>;
// Chain products of strongly mismatched ducts reach |a11 a22| ~ 1e9 while the
// determinant stays 1, so matrices are accumulated in extended precision.
using WideComplex = std::complex<long double>;

inline constexpr double kPi = 3.14159265358979323846;

// Ambient air. Defaults are air at 20 degC.
struct Medium {
    double sound_speed = 343.0;         // m/s
    double density = 1.204;             // kg/m^3
    double dynamic_viscosity = 1.81e-5; // Pa s
    double temperature = 20.0;          // degC, informational only

    double characteristic_impedance() const { return density * sound_speed; }
    void validate() const;
};

// Micro-perforated panel spanning a circular duct. All lengths in meters.
struct MppPanel {
    double thickness = 0.0;
    double aperture = 0.0; // hole diameter
    double porosity = 0.0; // open area fraction
    double duct_diameter = 0.0;

    void validate() const;
};

struct StraightPipe {
    double length = 0.0;   // m
    double diameter = 0.0; // m
};

// Expansion or contraction. Both have the identity four-pole matrix.
struct AreaChange {};

struct MppScreen {
    MppPanel panel;
};

using SoundElement = std::variant<StraightPipe, AreaChange, MppScreen>;

struct TransferMatrix {
    WideComplex a11{1.0L, 0.0L};
    WideComplex a12{0.0L, 0.0L};
    WideComplex a21{0.0L, 0.0L};
    WideComplex a22{1.0L, 0.0L};

    static TransferMatrix identity() { return {}; }
    WideComplex determinant() const { return a11 * a22 - a12 * a21; }
    // |a11 a22| + |a12 a21|: the magnitude the unit determinant cancels from.
    long double determinant_scale() const { return std::abs(a11 * a22) + std::abs(a12 * a21); }

    friend TransferMatrix operator*(const TransferMatrix& l, const TransferMatrix& r) {
        return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }
};

// Elements ordered from the open (source) end to the rigid wall.
struct ElementChain {
    std::vector<SoundElement> elements;
    double main_duct_diameter = 0.0; // m

    void validate() const;
};

inline double circle_area(double diameter) { return 0.25 * kPi * diameter * diameter; }

// K = d_h sqrt(omega rho / (4 eta)). Throws DomainError for frequency <= 0.
double perforate_constant(double frequency_hz, double aperture, const Medium& medium);

// Maa's MPP impedance normalized by rho c.
Complex mpp_normalized_impedance(const MppPanel& panel, double frequency_hz, const Medium& medium);

TransferMatrix element_matrix(const SoundElement& element, double frequency_hz, const Medium& medium);

// Ordered product of the element matrices. Throws UsageError on an empty chain.
TransferMatrix chain_matrix(const ElementChain& chain, double frequency_hz, const Medium& medium);

// Normal-incidence absorption coefficient of a rigidly backed chain, clamped to [0, 1].
double absorption_at(const ElementChain& chain, double frequency_hz, const Medium& medium);

// Absorption from an already composed chain matrix; main_duct_area in m^2.
double absorption_from_matrix(const TransferMatrix& m, double main_duct_area, double frequency_hz,
                              const Medium& medium);

} // namespace mppabs
