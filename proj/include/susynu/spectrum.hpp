#pragma once

#include <vector>

#include "susynu/units.hpp"

namespace susynu {

enum class Provenance { ClosedForm, NuQuantization, Oracle };

const char* to_string(Provenance p);

struct Level {
  int n;
  double energy;
};

struct SpectrumResult {
  std::vector<Level> levels;
  Provenance provenance = Provenance::ClosedForm;
  Units units;

  std::vector<double> energies() const {
    std::vector<double> e;
    e.reserve(levels.size());
    for (const auto& l : levels) e.push_back(l.energy);
    return e;
  }
};

}  // namespace susynu
