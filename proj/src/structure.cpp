#include "mppabs/structure.h"

#include "mppabs/errors.h"

#include <algorithm>
#include <cmath>

namespace mppabs {

namespace {

constexpr double kMm = 1e-3;

void require_positive(double value, std::string_view field) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw ValidationError(std::string(field), "must be positive, got " + std::to_string(value));
}

} // namespace

const std::array<DesignField, kDesignDimension>& design_fields() {
    static const std::array<DesignField, kDesignDimension> fields{{
        {"d_m", &DesignVector::d_m, 5.0, 11.0},
        {"d_2", &DesignVector::d_2, 40.0, 70.0},
        {"d_4", &DesignVector::d_4, 50.0, 80.0},
        {"d_6", &DesignVector::d_6, 50.0, 100.0},
        {"l_1", &DesignVector::l_1, 60.0, 80.0},
        {"l_1p", &DesignVector::l_1p, 10.0, 30.0},
        {"l_2", &DesignVector::l_2, 4.0, 12.0},
        {"l_3", &DesignVector::l_3, 4.0, 10.0},
        {"l_3p", &DesignVector::l_3p, 4.0, 10.0},
        {"l_4", &DesignVector::l_4, 10.0, 30.0},
        {"l_5", &DesignVector::l_5, 10.0, 30.0},
        {"l_6", &DesignVector::l_6, 20.0, 40.0},
    }};
    return fields;
}

MppPanel to_panel(const MppSpec& spec, double duct_diameter_mm) {
    MppPanel panel{spec.t_h * kMm, spec.d_h * kMm, spec.sigma_h, duct_diameter_mm * kMm};
    panel.validate();
    return panel;
}

ElementChain build_chain(const DesignVector& design, const MppSet& mpps) {
    for (const auto& field : design_fields())
        require_positive(design.*field.member, field.name);

    const double dm = design.d_m;
    auto pipe = [](double length_mm, double diameter_mm) -> SoundElement {
        return StraightPipe{length_mm * kMm, diameter_mm * kMm};
    };
    auto mpp = [&](std::size_t i) -> SoundElement { return MppScreen{to_panel(mpps[i], dm)}; };

    ElementChain chain;
    chain.main_duct_diameter = dm * kMm;
    chain.elements = {
        mpp(0),
        pipe(design.l_1, dm),
        mpp(1),
        pipe(design.l_1p, dm),
        AreaChange{},
        pipe(design.l_2, design.d_2),
        AreaChange{},
        pipe(design.l_3, dm),
        mpp(2),
        pipe(design.l_3p, dm),
        AreaChange{},
        pipe(design.l_4, design.d_4),
        AreaChange{},
        pipe(design.l_5, dm),
        AreaChange{},
        pipe(design.l_6, design.d_6),
    };
    return chain;
}

ElementChain build_single_chamber_chain(const SingleChamberDesign& design) {
    require_positive(design.d_m, "d_m");
    require_positive(design.l_m, "l_m");
    require_positive(design.d_e, "d_e");
    require_positive(design.t_e, "t_e");

    ElementChain chain;
    chain.main_duct_diameter = design.d_m * kMm;
    chain.elements = {
        MppScreen{to_panel(design.mpp, design.d_m)},
        StraightPipe{design.l_m * kMm, design.d_m * kMm},
        AreaChange{},
        StraightPipe{design.t_e * kMm, design.d_e * kMm},
    };
    return chain;
}

std::vector<BoundViolation> validate_bounds(const DesignVector& design) {
    std::vector<BoundViolation> out;
    for (const auto& field : design_fields()) {
        const double v = design.*field.member;
        if (!(v >= field.lower && v <= field.upper))
            out.push_back({std::string(field.name), v, field.lower, field.upper});
    }
    return out;
}

DesignVector clamp_to_bounds(DesignVector design) {
    for (const auto& field : design_fields())
        design.*field.member = std::clamp(design.*field.member, field.lower, field.upper);
    return design;
}

DesignVector prototype_design() {
    return {.d_m = 10, .d_2 = 60, .d_4 = 60, .d_6 = 60, .l_1 = 98, .l_1p = 2,
            .l_2 = 10, .l_3 = 10, .l_3p = 10, .l_4 = 20, .l_5 = 20, .l_6 = 30};
}

DesignVector optimized_design() {
    return {.d_m = 5.6, .d_2 = 41, .d_4 = 57, .d_6 = 97.8, .l_1 = 69.6, .l_1p = 10.4,
            .l_2 = 8.9, .l_3 = 4, .l_3p = 9.3, .l_4 = 18, .l_5 = 21.2, .l_6 = 36.9};
}

MppSet reference_mpps() {
    return {{{0.6, 0.2, 0.025}, {0.6, 0.2, 0.025}, {0.8, 0.4, 0.025}}};
}

SingleChamberDesign single_chamber_design() {
    return {.d_m = 10, .l_m = 100, .d_e = 60, .t_e = 10, .mpp = {0.6, 0.2, 0.025}};
}

} // namespace mppabs
