#pragma once

#include <vector>

namespace susynu {

/// Cell-centered uniform grid. `margin` trims margin * (theta_max - theta_min)
/// from each end before the cells are laid out.
struct Grid {
  double theta_min = 0.0;
  double theta_max = 1.0;
  int n_points = 16;
  double margin = 0.0;

  /// Throws InvalidArgument on an empty interval, n_points < 16 or margin < 0.
  void validate() const;
  double lo() const { return theta_min + margin * (theta_max - theta_min); }
  double hi() const { return theta_max - margin * (theta_max - theta_min); }
  double spacing() const { return (hi() - lo()) / n_points; }
  double node(int j) const { return lo() + (j + 0.5) * spacing(); }
  std::vector<double> nodes() const;
};

/// Samples of a real function on a grid.
struct GridFunction {
  Grid grid;
  std::vector<double> values;
};

}  // namespace susynu
