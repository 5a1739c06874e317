#pragma once

// Geometry of the three-chamber MPP absorber and its mapping onto the
// sixteen-element chain. Design quantities are millimeters; chains are SI.

#include "mppabs/acoustics.h"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace mppabs {

// Twelve design variables, millimeters. l_1p and l_3p are the primed lengths l1', l3'.
struct DesignVector {
    double d_m = 0.0;
    double d_2 = 0.0;
    double d_4 = 0.0;
    double d_6 = 0.0;
    double l_1 = 0.0;
    double l_1p = 0.0;
    double l_2 = 0.0;
    double l_3 = 0.0;
    double l_3p = 0.0;
    double l_4 = 0.0;
    double l_5 = 0.0;
    double l_6 = 0.0;

    friend bool operator==(const DesignVector&, const DesignVector&) = default;
};

struct DesignField {
    std::string_view name;
    double DesignVector::*member;
    double lower; // inclusive, mm
    double upper; // inclusive, mm

    double range() const { return upper - lower; }
};

inline constexpr std::size_t kDesignDimension = 12;

// Field table in declaration order with the optimization box.
const std::array<DesignField, kDesignDimension>& design_fields();

// MPP parameters as listed in design tables: thickness and hole diameter in mm.
struct MppSpec {
    double t_h = 0.0;
    double d_h = 0.0;
    double sigma_h = 0.0;

    friend bool operator==(const MppSpec&, const MppSpec&) = default;
};

using MppSet = std::array<MppSpec, 3>;

// Single MPP in front of a main pipe closed by one expansion chamber.
struct SingleChamberDesign {
    double d_m = 0.0; // mm
    double l_m = 0.0; // mm
    double d_e = 0.0; // mm
    double t_e = 0.0; // mm
    MppSpec mpp;

    friend bool operator==(const SingleChamberDesign&, const SingleChamberDesign&) = default;
};

struct BoundViolation {
    std::string field;
    double value;
    double lower;
    double upper;
};

MppPanel to_panel(const MppSpec& spec, double duct_diameter_mm);

// Sixteen elements, source to wall:
//   MPP1 | l_1 | MPP2 | l_1p | > l_2 (d_2) < | l_3 | MPP3 | l_3p | > l_4 (d_4) < | l_5 | > l_6 (d_6)
// Throws ValidationError naming the first non-positive field. Box bounds are not enforced.
ElementChain build_chain(const DesignVector& design, const MppSet& mpps);

ElementChain build_single_chamber_chain(const SingleChamberDesign& design);

// Inclusive box check; empty when the design lies inside every interval.
std::vector<BoundViolation> validate_bounds(const DesignVector& design);

DesignVector clamp_to_bounds(DesignVector design);

// Reference data: geometry of the three-chamber prototype, its optimized
// counterpart, the MPPs used throughout, and the single-chamber precursor.
DesignVector prototype_design();
DesignVector optimized_design();
MppSet reference_mpps();
SingleChamberDesign single_chamber_design();

} // namespace mppabs
