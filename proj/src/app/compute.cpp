#include "susynu/app/compute.hpp"

#include "susynu/spectral_oracle.hpp"

namespace susynu::app {

SpectrumResult oracle_spectrum(const catalog::FamilyPotential& fp, int n_max, int grid,
                               std::uint64_t seed) {
  const auto g = oracle::grid_for(fp.v, grid);
  const auto r = oracle::extrapolated_spectrum(fp.v, g, fp.units, n_max + 1, false, seed);
  SpectrumResult out;
  out.provenance = Provenance::Oracle;
  out.units = fp.units;
  for (int n = 0; n <= n_max; ++n) out.levels.push_back({n, r.values[n]});
  return out;
}

SpectrumResult hierarchy_levels(const susy::Superpotential& w, const Units& units, Partner which,
                                int n_max) {
  const int shift = which == Partner::Plus ? 1 : 0;
  SpectrumResult ladder = susy::hierarchy_spectrum(w, units, n_max + shift);
  if (shift) {
    ladder.levels.erase(ladder.levels.begin());
    for (auto& l : ladder.levels) --l.n;
  }
  return ladder;
}

SpectrumResult closed_form_levels(const susy::Superpotential& w, const Units& units,
                                  Partner which, int n_max) {
  if (susy::ground_state(w, units).normalizable) return hierarchy_levels(w, units, which, n_max);
  const susy::Superpotential flipped{-w.tan_coeff, -w.cot_coeff, w.alpha};
  const Partner other = which == Partner::Plus ? Partner::Minus : Partner::Plus;
  return hierarchy_levels(flipped, units, other, n_max);
}

}  // namespace susynu::app
