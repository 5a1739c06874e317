// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "mppabs/annealing.h"
#include "mppabs/commands.h"
#include "mppabs/config.h"
#include "mppabs/structure.h"
#include "mppabs/sweep.h"

#include "../oracle.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace mppabs;
namespace fs = std::filesystem;

namespace {

const fs::path configs = MPPABS_CONFIG_DIR;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s [%d] %s :: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::optional<EffectiveBand> band_of(const fs::path& config) {
    const RunConfig cfg = load_config(config);
    return effective_band(absorption_spectrum(build_chain(cfg.structure), cfg.grid, cfg.medium), cfg.threshold);
}

ElementChain without_mpps(const ElementChain& chain) {
    ElementChain out{{}, chain.main_duct_diameter};
    for (const auto& e : chain.elements)
        if (!std::holds_alternative<MppScreen>(e))
            out.elements.push_back(e);
    return out;
}

void criterion_1() {
    std::optional<EffectiveBand> b;
    const double t = seconds([&] { b = band_of(configs / "three_chamber_prototype.json"); });
    const bool ok = b && std::abs(b->width - 1324.0) <= 0.10 * 1324.0 && b->f_low <= 35.0 &&
                    std::abs(b->f_high - 1344.0) <= 135.0 && t < 1.0;
    report(1, ok, "pre-optimization band (1324 Hz +/-10%, f_low <= 35, f_high 1344 +/- 135, < 1 s)",
           b ? fmt("band %.2f-%.2f Hz, width %.2f Hz, %.3f s", b->f_low, b->f_high, b->width, t) : "no band");
}

void criterion_2() {
    std::optional<EffectiveBand> b;
    const double t = seconds([&] { b = band_of(configs / "three_chamber_optimized.json"); });
    const bool ok = b && std::abs(b->width - 1591.0) <= 0.10 * 1591.0 && b->f_low <= 10.0 &&
                    std::abs(b->octaves - 8.6) <= 0.5 && t < 1.0;
    report(2, ok, "optimized design band (1591 Hz +/-10%, f_low <= 10, 8.6 +/- 0.5 octaves, < 1 s)",
           b ? fmt("band %.2f-%.2f Hz, width %.2f Hz, %.3f octaves, %.3f s", b->f_low, b->f_high, b->width,
                   b->octaves, t)
             : "no band");
}

void criterion_3() {
    const auto b = band_of(configs / "three_chamber_prototype.json");
    const double rel = b ? std::abs(b->width - 1277.0) / 1277.0 : 1.0;
    report(3, b && rel <= 0.10, "width vs finite-element reference 1277 Hz (relative error <= 10%)",
           fmt("width %.2f Hz, relative error %.2f%%", b ? b->width : 0.0, 100.0 * rel));
}

void criterion_4() {
    const RunConfig cfg = load_config(configs / "three_chamber_initial.json");
    const auto& three = std::get<ThreeChamberStructure>(cfg.structure);
    const ObjectiveProblem problem{three.mpps, cfg.medium, cfg.grid, cfg.threshold, Execution::serial};
    const AnnealingSchedule schedule = cfg.schedule.value_or(AnnealingSchedule{});

    const double reference = objective(optimized_design(), problem);
    const double initial = objective(three.design, problem);
    std::vector<OptimizationResult> runs;
    const double t = seconds([&] { runs = anneal_seeds(three.design, problem, schedule, {1, 2, 3, 4, 5}); });

    bool each_improves = true;
    std::string per_seed;
    for (const auto& r : runs) {
        each_improves = each_improves && r.best_objective >= initial;
        per_seed += fmt(" s%llu=%.1f", static_cast<unsigned long long>(r.seed), r.best_objective);
    }
    const double best = runs[best_of(runs)].best_objective;
    const bool ok = best >= 0.95 * reference && each_improves && t < 300.0;
    report(4, ok, "annealing efficacy (best of 5 seeds >= 0.95 x optimized-design width, every seed >= start, < 5 min)",
           fmt("start %.1f Hz, reference %.1f Hz, best %.1f Hz,", initial, reference, best) + per_seed +
               fmt(", %.1f s", t));
}

void criterion_5() {
    const Medium air;
    const FrequencyGrid grid;
    const std::vector<std::pair<std::string, ElementChain>> bundled{
        {"prototype", build_chain(prototype_design(), reference_mpps())},
        {"optimized", build_chain(optimized_design(), reference_mpps())},
        {"single", build_single_chamber_chain(single_chamber_design())},
    };
    std::mt19937_64 rng(20240);
    std::uniform_real_distribution<double> freq(1.0, 2000.0);

    // (a) lossless chains
    double worst_lossless = 0.0;
    for (const auto& [name, chain] : bundled) {
        const ElementChain lossless = without_mpps(chain);
        for (int i = 0; i < 200; ++i)
            worst_lossless = std::max(worst_lossless, absorption_at(lossless, freq(rng), air));
    }
    report(5, worst_lossless < 1e-9, "(a) MPP-free chains absorb nothing (alpha < 1e-9, 200 random f each)",
           fmt("max alpha %.3e", worst_lossless));

    // (b) determinants
    long double worst_det = 0.0L;
    for (const auto& [name, chain] : bundled)
        for (std::size_t i = 0; i < grid.size(); ++i)
            worst_det = std::max(worst_det, std::abs(chain_matrix(chain, grid.at(i), air).determinant() - 1.0L));
    report(5, worst_det < 1e-9L, "(b) |det A - 1| < 1e-9 over 1-2000 Hz for bundled structures",
           fmt("max %.3Le", worst_det));

    // (c) passivity
    double lo = 1.0, hi = 0.0;
    for (const auto& [name, chain] : bundled) {
        for (double a : absorption_spectrum(chain, grid, air).alpha) {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
    }
    report(5, lo >= 0.0 && hi <= 1.0, "(c) alpha in [0, 1] everywhere", fmt("range [%.6f, %.6f]", lo, hi));

    // (d) pipe splitting and identity insertion
    double worst_split = 0.0, worst_identity = 0.0;
    for (const auto& [name, chain] : bundled) {
        ElementChain split{{}, chain.main_duct_diameter};
        ElementChain padded{{AreaChange{}}, chain.main_duct_diameter};
        for (const auto& e : chain.elements) {
            if (const auto* p = std::get_if<StraightPipe>(&e)) {
                split.elements.push_back(StraightPipe{0.37 * p->length, p->diameter});
                split.elements.push_back(StraightPipe{0.63 * p->length, p->diameter});
            } else {
                split.elements.push_back(e);
            }
            padded.elements.push_back(e);
            padded.elements.push_back(AreaChange{});
        }
        const auto base = absorption_spectrum(chain, grid, air);
        const auto s = absorption_spectrum(split, grid, air);
        const auto p = absorption_spectrum(padded, grid, air);
        for (std::size_t i = 0; i < base.size(); ++i) {
            worst_split = std::max(worst_split, std::abs(s.alpha[i] - base.alpha[i]));
            worst_identity = std::max(worst_identity, std::abs(p.alpha[i] - base.alpha[i]));
        }
    }
    report(5, worst_split <= 1e-10 && worst_identity <= 1e-10,
           "(d) pipe-splitting and identity-insertion invariance to 1e-10",
           fmt("max split %.3e, max identity %.3e", worst_split, worst_identity));

    // (e) oracle equivalence
    double worst_oracle = 0.0;
    const ElementChain& proto = bundled[0].second;
    for (int i = 0; i < 50; ++i) {
        const double f = freq(rng);
        worst_oracle = std::max(worst_oracle,
                                std::abs(absorption_at(proto, f, air) - oracle::alpha_three_chamber(oracle::prototype(), f)));
    }
    report(5, worst_oracle <= 1e-10, "(e) composed solver vs one-expression brute force, 50 random f, 1e-10",
           fmt("max |diff| %.3e", worst_oracle));
}

void criterion_6() {
    const fs::path tmp = fs::temp_directory_path() / ("mppabs_acceptance_" + std::to_string(std::random_device{}()));
    OptimizeArgs a{configs / "three_chamber_initial.json", tmp / "a", 1, {}};
    OptimizeArgs b{configs / "three_chamber_initial.json", tmp / "b", 1, {}};
    a.overrides.seed = b.overrides.seed = 7;
    std::ostringstream ra, rb;
    const double t = seconds([&] {
        cmd_optimize(a, ra);
        cmd_optimize(b, rb);
    });
    bool identical = ra.str() == rb.str();
    std::string detail;
    for (const char* f : {kBestDesignFile, kTraceFile, kReportFile}) {
        const std::string x = slurp(a.out_dir / f), y = slurp(b.out_dir / f);
        identical = identical && !x.empty() && x == y;
        detail += fmt("%s %zu bytes, ", f, x.size());
    }
    fs::remove_all(tmp);
    report(6, identical, "determinism: same seed gives byte-identical design, trace and report",
           detail + fmt("%.1f s", t));
}

void criterion_7() {
    const Medium air;
    const oracle::Air oracle_air;
    double worst_k = 0.0, worst_z = 0.0;
    for (double f : {1.0, 10.0, 100.0, 500.0, 1000.0, 2000.0}) {
        for (double d : {0.1e-3, 0.2e-3, 0.4e-3}) {
            const double ref = oracle::perforate(f, d, oracle_air);
            worst_k = std::max(worst_k, std::abs(perforate_constant(f, d, air) - ref) / ref);
            for (double t : {0.6e-3, 0.8e-3}) {
                const auto z = mpp_normalized_impedance({t, d, 0.025, 0.01}, f, air);
                const auto zr = oracle::maa(f, t, d, 0.025, oracle_air);
                worst_z = std::max(worst_z, std::abs(Complex(z) - zr) / std::abs(zr));
            }
        }
    }
    // K at 500 Hz, 0.2 mm, and the zero-frequency MPP1 resistance, frozen from scalar evaluation.
    const double k500 = perforate_constant(500.0, 0.2e-3, air);
    const double r0 = mpp_normalized_impedance({0.6e-3, 0.2e-3, 0.025, 0.01}, 1e-12, air).real();
    const bool scalars = std::abs(k500 - 1.4456025058533009) < 1e-12 && std::abs(r0 - 0.8415098360179382) < 1e-9;

    Rng rng(123);
    int hits = 0;
    constexpr int trials = 100000;
    for (int i = 0; i < trials; ++i)
        hits += accept(-2.5, 2.5, rng);
    const double p = static_cast<double>(hits) / trials;

    report(7, worst_k < 1e-13 && worst_z < 1e-13 && scalars && std::abs(p - std::exp(-1.0)) <= 0.01,
           "scalar oracles: perforate constant, MPP impedance, acceptance probability (+/-0.01 over 1e5)",
           fmt("K rel err %.1e, Z rel err %.1e, K(500 Hz) %.6f, r0 %.6f, P(accept) %.4f vs %.4f", worst_k, worst_z,
               k500, r0, p, std::exp(-1.0)));
}

} // namespace

int main() {
    const std::vector<std::function<void()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                      criterion_5, criterion_6, criterion_7};
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            report(0, false, "criterion threw", e.what());
        }
    }
    std::printf("%s: %d failure(s)\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failures);
    return failures ? 1 : 0;
}
