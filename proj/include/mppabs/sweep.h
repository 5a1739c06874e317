#pragma once

// Frequency sweeps. Every grid point is independent, so the parallel kernel
// writes disjoint slots and must agree bit-for-bit with the serial reference.

#include "mppabs/acoustics.h"
#include "mppabs/spectrum.h"

namespace mppabs {

enum class Execution { serial, parallel };

// Serial reference: absorption_at at each grid frequency, in order.
AbsorptionSpectrum absorption_spectrum_serial(const ElementChain& chain, const FrequencyGrid& grid,
                                              const Medium& medium);

// OpenMP kernel over grid points. Falls back to serial when built without OpenMP.
AbsorptionSpectrum absorption_spectrum_parallel(const ElementChain& chain, const FrequencyGrid& grid,
                                                const Medium& medium);

AbsorptionSpectrum absorption_spectrum(const ElementChain& chain, const FrequencyGrid& grid,
                                       const Medium& medium, Execution exec = Execution::parallel);

} // namespace mppabs
