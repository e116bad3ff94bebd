#pragma once

#include "levyheat/rng.hpp"
#include "levyheat/symbol.hpp"

namespace levyheat {

/// One draw of X_t for the symmetric alpha-stable law with characteristic
/// function exp(-t |xi|^alpha), via the Chambers-Mallows-Stuck construction.
/// Requires d = 1. Deterministic given the rng state.
double sample_stable(const LevySymbolSpec& spec, double t, Rng& rng);

} // namespace levyheat
