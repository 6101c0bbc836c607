#pragma once

// Data series behind the six published plots. Parameter sets are not given
// with the plots, so the curves use delta in {2, 3, 4}, gamma in {1, 2} and
// nu1, nu2 in {1, 4, 9}; the values are carried in the param_label column.

#include "susynu/app/config.hpp"
#include "susynu/app/table.hpp"

namespace susynu::app {

constexpr int kFigureSamples = 512;

/// Figures 1, 3 and 5: columns n,energy,branch,param_label.
/// Figures 2, 4 and 6: columns theta,psi0,param_label.
/// Throws ConfigError for an id outside 1..6.
Table figure_table(int id, UnitsPreset preset, double alpha = 1.0);

}  // namespace susynu::app
