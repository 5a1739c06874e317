#include "mppabs/sweep.h"

#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mppabs {

namespace {

AbsorptionSpectrum allocate(const ElementChain& chain, const FrequencyGrid& grid, const Medium& medium) {
    grid.validate();
    medium.validate();
    chain.validate();
    AbsorptionSpectrum s;
    s.frequency = grid.frequencies();
    s.alpha.assign(s.frequency.size(), 0.0);
    return s;
}

} // namespace

AbsorptionSpectrum absorption_spectrum_serial(const ElementChain& chain, const FrequencyGrid& grid,
                                              const Medium& medium) {
    AbsorptionSpectrum s = allocate(chain, grid, medium);
    for (std::size_t i = 0; i < s.size(); ++i)
        s.alpha[i] = absorption_at(chain, s.frequency[i], medium);
    return s;
}

AbsorptionSpectrum absorption_spectrum_parallel(const ElementChain& chain, const FrequencyGrid& grid,
                                                const Medium& medium) {
#ifdef _OPENMP
    AbsorptionSpectrum s = allocate(chain, grid, medium);
    const auto n = static_cast<std::ptrdiff_t>(s.size());

    // Exceptions cannot leave the parallel region; keep the one at the lowest
    // index so the reported frequency matches the serial sweep.
    std::exception_ptr first_error;
    std::ptrdiff_t first_index = std::numeric_limits<std::ptrdiff_t>::max();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            s.alpha[i] = absorption_at(chain, s.frequency[i], medium);
        } catch (...) {
#pragma omp critical(mppabs_sweep_error)
            if (i < first_index) {
                first_index = i;
                first_error = std::current_exception();
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
    return s;
#else
    return absorption_spectrum_serial(chain, grid, medium);
#endif
}

AbsorptionSpectrum absorption_spectrum(const ElementChain& chain, const FrequencyGrid& grid,
                                       const Medium& medium, Execution exec) {
    return exec == Execution::parallel ? absorption_spectrum_parallel(chain, grid, medium)
                                       : absorption_spectrum_serial(chain, grid, medium);
}

} // namespace mppabs
