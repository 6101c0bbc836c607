#pragma once

// Brute-force eigensolver for -kappa psi'' + V psi = E psi with Dirichlet
// walls, kappa = hbar^2/2m, on a cell-centered grid.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "susynu/grid.hpp"
#include "susynu/susy_core.hpp"
#include "susynu/units.hpp"

namespace susynu::oracle {

struct TridiagonalSym {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

struct EigenResult {
  std::vector<double> values;
  std::optional<std::vector<std::vector<double>>> vectors;
  Grid grid;
  bool extrapolated = false;
};

/// Three-point stencil. The wall sits half a cell beyond the first and last
/// nodes, so the boundary rows carry 3 kappa/h^2 (mirror-image ghost node)
/// and interior rows 2 kappa/h^2; off-diagonals are -kappa/h^2.
/// Throws SingularNode when V is not finite at a node.
TridiagonalSym discretize(const susy::TrigPotential& v, const Grid& grid, const Units& units);
TridiagonalSym discretize(const std::function<double(double)>& v, const Grid& grid,
                          const Units& units);
TridiagonalSym discretize(std::span<const double> v, const Grid& grid, const Units& units);

/// Number of eigenvalues strictly below x (Sturm sequence).
int sturm_count(const TridiagonalSym& t, double x);

/// m smallest eigenvalues by bisection; with `want_vectors`, inverse
/// iteration from a seeded random start followed by a Rayleigh quotient.
/// Vectors have unit Euclidean norm and a positive first significant entry.
EigenResult eigen_lowest(const TridiagonalSym& t, int m, bool want_vectors,
                         std::uint64_t seed = 0x5EED);

/// Eigenpairs of v on `grid`; vectors rescaled to unit h-weighted norm.
EigenResult solve(const susy::TrigPotential& v, const Grid& grid, const Units& units, int m,
                  bool want_vectors, std::uint64_t seed = 0x5EED);

double richardson(double e_coarse, double e_fine);

/// Richardson-combined eigenvalues from grids of n_fine/2 and n_fine cells;
/// vectors, when requested, come from the fine grid.
EigenResult extrapolated_spectrum(const susy::TrigPotential& v, const Grid& fine,
                                  const Units& units, int m, bool want_vectors = false,
                                  std::uint64_t seed = 0x5EED);

/// Sum f g w h over the grid; w defaults to 1.
double inner_product(std::span<const double> f, std::span<const double> g,
                     std::optional<std::span<const double>> w, const Grid& grid);

/// Strict sign changes, ignoring entries below 1e-10 of the largest.
int count_nodes(std::span<const double> f);

/// max over the interior 90% of |-kappa psi'' + (V - E) psi| / max|psi|,
/// with psi'' from a five-point stencil.
double ode_residual(const std::function<double(double)>& psi, double e,
                    const susy::TrigPotential& v, const Grid& grid, const Units& units);

/// Grid over the potential's domain with the given cell count and margin.
Grid grid_for(const susy::TrigPotential& v, int n_points, double margin = 0.0);

}  // namespace susynu::oracle
