// Times the serial reference sweep against the OpenMP kernel on the bundled
// structures and checks that both produce identical spectra.

#include "mppabs/structure.h"
#include "mppabs/sweep.h"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double time_ms(int reps, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i)
        f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 50;
    const mppabs::Medium medium;
    const mppabs::FrequencyGrid grid;

#ifdef _OPENMP
    std::cout << "threads " << omp_get_max_threads() << '\n';
#else
    std::cout << "built without OpenMP\n";
#endif

    struct Case {
        std::string name;
        mppabs::ElementChain chain;
    };
    const Case cases[] = {
        {"prototype", mppabs::build_chain(mppabs::prototype_design(), mppabs::reference_mpps())},
        {"optimized", mppabs::build_chain(mppabs::optimized_design(), mppabs::reference_mpps())},
        {"single", mppabs::build_single_chamber_chain(mppabs::single_chamber_design())},
    };

    bool all_equal = true;
    std::cout << std::fixed << std::setprecision(3);
    for (const auto& c : cases) {
        mppabs::AbsorptionSpectrum serial, parallel;
        const double ts = time_ms(reps, [&] { serial = mppabs::absorption_spectrum_serial(c.chain, grid, medium); });
        const double tp = time_ms(reps, [&] { parallel = mppabs::absorption_spectrum_parallel(c.chain, grid, medium); });
        const bool equal = serial.alpha == parallel.alpha;
        all_equal = all_equal && equal;
        std::cout << std::left << std::setw(10) << c.name << " points " << serial.size() << "  serial " << ts
                  << " ms  parallel " << tp << " ms  speedup " << ts / tp << "  identical "
                  << (equal ? "yes" : "NO") << '\n';
    }
    return all_equal ? 0 : 1;
}
