#include "susynu/grid.hpp"

#include "susynu/error.hpp"

namespace susynu {

void Grid::validate() const {
  if (!(theta_max > theta_min)) throw Error(ErrorCode::InvalidArgument, "empty grid interval");
  if (n_points < 16) throw Error(ErrorCode::InvalidArgument, "grid needs at least 16 points");
  if (!(margin >= 0.0) || !(margin < 0.5)) throw Error(ErrorCode::InvalidArgument, "bad margin");
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(n_points));
  for (int j = 0; j < n_points; ++j) out[static_cast<std::size_t>(j)] = node(j);
  return out;
}

}  // namespace susynu
