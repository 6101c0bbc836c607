#pragma once

#include <cstdint>

#include "susynu/app/config.hpp"
#include "susynu/potential_catalog.hpp"
#include "susynu/spectrum.hpp"

namespace susynu::app {

/// Richardson-combined oracle levels 0..n_max on a `grid`-cell grid.
SpectrumResult oracle_spectrum(const catalog::FamilyPotential& fp, int n_max, int grid,
                               std::uint64_t seed = 0x5EED);

/// Shape-invariance ladder of `w` itself. V+ levels are the V- levels from
/// n = 1 on. Throws NoZeroMode when the zero mode of V- is not normalizable.
SpectrumResult hierarchy_levels(const susy::Superpotential& w, const Units& units, Partner which,
                                int n_max);

/// The same ladder built from whichever of w and -w has a normalizable zero
/// mode; -w exchanges the partners.
SpectrumResult closed_form_levels(const susy::Superpotential& w, const Units& units,
                                  Partner which, int n_max);

}  // namespace susynu::app
