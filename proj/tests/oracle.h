#pragma once

// Independent reference evaluations for tests. Nothing here calls into the
// library: formulas are restated from scratch on plain doubles and complex
// numbers so that the solver can be checked against them.

#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using cd = std::complex<double>;
using Mat = std::array<cd, 4>; // row major

constexpr double pi = 3.14159265358979323846;

struct Air {
    double c = 343.0;
    double rho = 1.204;
    double eta = 1.81e-5;
};

inline double perforate(double f, double d, const Air& air) {
    return d * std::sqrt(2.0 * pi * f * air.rho / (4.0 * air.eta));
}

// Maa impedance, normalized by rho c; t, d in meters.
inline cd maa(double f, double t, double d, double sigma, const Air& air) {
    const double k = perforate(f, d, air);
    const double w = 2.0 * pi * f;
    const double r = 32.0 * air.eta * t / (sigma * air.rho * air.c * d * d) *
                     (std::sqrt(1.0 + k * k / 32.0) + std::sqrt(2.0) / 32.0 * k * d / t);
    const double x = w * t / (sigma * air.c) * (1.0 + std::pow(9.0 + k * k / 2.0, -0.5) + 0.85 * d / t);
    return {r, x};
}

inline double area(double d) { return pi * d * d / 4.0; }

inline Mat pipe(double f, double l, double d, const Air& air) {
    const double kl = 2.0 * pi * f / air.c * l;
    const double zc = air.rho * air.c / area(d);
    const cd j(0.0, 1.0);
    return {std::cos(kl), j * zc * std::sin(kl), j / zc * std::sin(kl), std::cos(kl)};
}

inline Mat mpp(double f, double t, double d, double sigma, double duct, const Air& air) {
    return {1.0, air.rho * air.c / area(duct) * maa(f, t, d, sigma, air), 0.0, 1.0};
}

inline Mat mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

inline double alpha_from(const Mat& a, double main_d, const Air& air) {
    const double z0 = air.rho * air.c / area(main_d);
    const cd g = (a[0] - z0 * a[2]) / (a[0] + z0 * a[2]);
    return 1.0 - std::norm(g);
}

// Geometry in millimeters, ordered d_m d_2 d_4 d_6 l_1 l_1p l_2 l_3 l_3p l_4 l_5 l_6.
// MPP triples (t mm, d mm, sigma).
struct ThreeChamber {
    std::array<double, 12> g;
    std::array<std::array<double, 3>, 3> mpp;
};

inline ThreeChamber prototype() {
    return {{10, 60, 60, 60, 98, 2, 10, 10, 10, 20, 20, 30},
            {{{0.6, 0.2, 0.025}, {0.6, 0.2, 0.025}, {0.8, 0.4, 0.025}}}};
}

inline ThreeChamber optimized() {
    return {{5.6, 41, 57, 97.8, 69.6, 10.4, 8.9, 4, 9.3, 18, 21.2, 36.9},
            {{{0.6, 0.2, 0.025}, {0.6, 0.2, 0.025}, {0.8, 0.4, 0.025}}}};
}

// All sixteen factors written out in one product; the four area changes
// and the trailing expansion are identity factors and drop out.
inline double alpha_three_chamber(const ThreeChamber& s, double f, const Air& air = {}) {
    const auto mm = [](double v) { return v * 1e-3; };
    const double dm = mm(s.g[0]), d2 = mm(s.g[1]), d4 = mm(s.g[2]), d6 = mm(s.g[3]);
    const auto m = [&](int i) { return mpp(f, mm(s.mpp[i][0]), mm(s.mpp[i][1]), s.mpp[i][2], dm, air); };
    const Mat a =
        mul(m(0), mul(pipe(f, mm(s.g[4]), dm, air),
            mul(m(1), mul(pipe(f, mm(s.g[5]), dm, air),
            mul(pipe(f, mm(s.g[6]), d2, air),
            mul(pipe(f, mm(s.g[7]), dm, air),
            mul(m(2), mul(pipe(f, mm(s.g[8]), dm, air),
            mul(pipe(f, mm(s.g[9]), d4, air),
            mul(pipe(f, mm(s.g[10]), dm, air), pipe(f, mm(s.g[11]), d6, air)))))))))));
    return alpha_from(a, dm, air);
}

// Second route: input impedance propagated from the rigid wall towards the
// source, without forming any transfer matrix.
inline double alpha_three_chamber_impedance(const ThreeChamber& s, double f, const Air& air = {}) {
    const auto mm = [](double v) { return v * 1e-3; };
    const cd j(0.0, 1.0);
    const double k = 2.0 * pi * f / air.c;
    const auto zc = [&](double d) { return air.rho * air.c / area(mm(d)); };
    // Rigid-wall-terminated pipe.
    cd z = -j * zc(s.g[3]) / std::tan(k * mm(s.g[11]));
    const auto through = [&](cd load, double l, double d) {
        const double c = std::cos(k * mm(l)), sn = std::sin(k * mm(l));
        const double zcd = zc(d);
        return zcd * (load * c + j * zcd * sn) / (zcd * c + j * load * sn);
    };
    const auto screen = [&](cd load, int i) {
        return load + zc(s.g[0]) * maa(f, mm(s.mpp[i][0]), mm(s.mpp[i][1]), s.mpp[i][2], air);
    };
    z = through(z, s.g[10], s.g[0]);
    z = through(z, s.g[9], s.g[2]);
    z = through(z, s.g[8], s.g[0]);
    z = screen(z, 2);
    z = through(z, s.g[7], s.g[0]);
    z = through(z, s.g[6], s.g[1]);
    z = through(z, s.g[5], s.g[0]);
    z = screen(z, 1);
    z = through(z, s.g[4], s.g[0]);
    z = screen(z, 0);
    const double z0 = zc(s.g[0]);
    return 1.0 - std::norm((z - z0) / (z + z0));
}

} // namespace oracle
