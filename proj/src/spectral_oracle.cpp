#include "susynu/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "susynu/error.hpp"

namespace susynu::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(const TridiagonalSym& t) {
  const std::size_t n = t.diag.size();
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double bisect_eigenvalue(const TridiagonalSym& t, int k, Bounds b) {
  double lo = b.lo, hi = b.hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) || mid <= lo || mid >= hi)
      return mid;
    if (sturm_count(t, mid) <= k)
      lo = mid;
    else
      hi = mid;
  }
  throw Error(ErrorCode::Internal, "bisection did not converge in 200 iterations");
}

// Solves (T - mu I) x = b by Gaussian elimination with partial pivoting.
std::vector<double> solve_shifted(const TridiagonalSym& t, double mu, std::vector<double> b,
                                  double tiny) {
  const std::size_t n = t.diag.size();
  std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - mu;
  for (std::size_t i = 0; i + 1 < n; ++i) u1[i] = t.offdiag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double a0 = d[i], a1 = u1[i], a2 = u2[i], ba = b[i];
    double c0 = t.offdiag[i], c1 = d[i + 1], c2 = (i + 2 < n) ? u1[i + 1] : 0.0, bc = b[i + 1];
    if (std::abs(c0) > std::abs(a0)) {
      std::swap(a0, c0);
      std::swap(a1, c1);
      std::swap(a2, c2);
      std::swap(ba, bc);
    }
    if (a0 == 0.0) a0 = tiny;
    const double f = c0 / a0;
    d[i] = a0;
    u1[i] = a1;
    u2[i] = a2;
    b[i] = ba;
    d[i + 1] = c1 - f * a1;
    if (i + 2 < n) u1[i + 1] = c2 - f * a2;
    b[i + 1] = bc - f * ba;
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
    if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
    x[ii] = s / d[ii];
  }
  return x;
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void orient(std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  for (double v : x) {
    if (std::abs(v) > 1e-3 * m) {
      if (v < 0.0)
        for (double& y : x) y = -y;
      return;
    }
  }
}

double rayleigh(const TridiagonalSym& t, const std::vector<double>& x) {
  const std::size_t n = x.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double tx = t.diag[i] * x[i];
    if (i > 0) tx += t.offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) tx += t.offdiag[i] * x[i + 1];
    num += x[i] * tx;
    den += x[i] * x[i];
  }
  return num / den;
}

}  // namespace

TridiagonalSym discretize(std::span<const double> v, const Grid& grid, const Units& units) {
  grid.validate();
  if (v.size() != static_cast<std::size_t>(grid.n_points))
    throw Error(ErrorCode::LengthMismatch, "potential samples do not match the grid");
  const double h = grid.spacing();
  const double k = units.kappa() / (h * h);
  const std::size_t n = v.size();
  TridiagonalSym t;
  t.diag.resize(n);
  t.offdiag.assign(n - 1, -k);
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(v[j]))
      throw Error(ErrorCode::SingularNode, "potential not finite at node " + std::to_string(j),
                  grid.node(static_cast<int>(j)));
    const bool edge = (j == 0 || j + 1 == n);
    t.diag[j] = (edge ? 3.0 : 2.0) * k + v[j];
  }
  return t;
}

TridiagonalSym discretize(const std::function<double(double)>& v, const Grid& grid,
                          const Units& units) {
  grid.validate();
  std::vector<double> samples = grid.nodes();
  for (double& s : samples) s = v(s);
  return discretize(std::span<const double>(samples), grid, units);
}

TridiagonalSym discretize(const susy::TrigPotential& v, const Grid& grid, const Units& units) {
  return discretize(std::function<double(double)>([&v](double t) { return v(t); }), grid, units);
}

int sturm_count(const TridiagonalSym& t, double x) {
  const std::size_t n = t.diag.size();
  const double tiny = kEps * (std::abs(x) + 1.0) * 1e-3;
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double off2 = (i > 0) ? t.offdiag[i - 1] * t.offdiag[i - 1] : 0.0;
    d = t.diag[i] - x - (i > 0 ? off2 / d : 0.0);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

EigenResult eigen_lowest(const TridiagonalSym& t, int m, bool want_vectors, std::uint64_t seed) {
  const int n = static_cast<int>(t.diag.size());
  if (n == 0 || t.offdiag.size() + 1 != t.diag.size())
    throw Error(ErrorCode::LengthMismatch, "malformed tridiagonal matrix");
  if (m < 0 || m > n) throw Error(ErrorCode::InvalidArgument, "requested more eigenvalues than rows");
  const Bounds b = gershgorin(t);
  EigenResult out;
  out.values.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.values.push_back(bisect_eigenvalue(t, k, b));
  if (!want_vectors) return out;

  const double tiny = kEps * std::max(std::abs(b.lo), std::abs(b.hi));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::vector<double>> vecs;
  for (int k = 0; k < m; ++k) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = uni(rng);
    for (int it = 0; it < 2; ++it) {
      x = solve_shifted(t, out.values[k], std::move(x), tiny);
      const double s = norm2(x);
      for (double& v : x) v /= s;
    }
    out.values[k] = rayleigh(t, x);
    orient(x);
    vecs.push_back(std::move(x));
  }
  out.vectors = std::move(vecs);
  return out;
}

EigenResult solve(const susy::TrigPotential& v, const Grid& grid, const Units& units, int m,
                  bool want_vectors, std::uint64_t seed) {
  EigenResult r = eigen_lowest(discretize(v, grid, units), m, want_vectors, seed);
  r.grid = grid;
  if (r.vectors) {
    const double s = 1.0 / std::sqrt(grid.spacing());
    for (auto& vec : *r.vectors)
      for (double& x : vec) x *= s;
  }
  return r;
}

double richardson(double e_coarse, double e_fine) { return (4.0 * e_fine - e_coarse) / 3.0; }

EigenResult extrapolated_spectrum(const susy::TrigPotential& v, const Grid& fine,
                                  const Units& units, int m, bool want_vectors,
                                  std::uint64_t seed) {
  if (fine.n_points % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "fine grid needs an even cell count");
  Grid coarse = fine;
  coarse.n_points = fine.n_points / 2;
  const EigenResult c = solve(v, coarse, units, m, false);
  EigenResult f = solve(v, fine, units, m, want_vectors, seed);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = richardson(c.values[i], f.values[i]);
  f.extrapolated = true;
  return f;
}

double inner_product(std::span<const double> f, std::span<const double> g,
                     std::optional<std::span<const double>> w, const Grid& grid) {
  if (f.size() != g.size() || (w && w->size() != f.size()) ||
      f.size() != static_cast<std::size_t>(grid.n_points))
    throw Error(ErrorCode::LengthMismatch, "inner product operands differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i] * (w ? (*w)[i] : 1.0);
  return s * grid.spacing();
}

int count_nodes(std::span<const double> f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  const double floor = 1e-10 * m;
  int nodes = 0;
  int last = 0;
  for (double v : f) {
    if (std::abs(v) < floor || v == 0.0) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++nodes;
    last = s;
  }
  return nodes;
}

double ode_residual(const std::function<double(double)>& psi, double e,
                    const susy::TrigPotential& v, const Grid& grid, const Units& units) {
  grid.validate();
  const double len = grid.hi() - grid.lo();
  const double a = grid.lo() + 0.05 * len, b = grid.hi() - 0.05 * len;
  const double dl = 5e-4 * len;
  const double kappa = units.kappa();
  double worst = 0.0, peak = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    const double t = grid.node(j);
    if (t < a || t > b) continue;
    const double f0 = psi(t);
    const double d2 = (-psi(t + 2 * dl) + 16.0 * psi(t + dl) - 30.0 * f0 + 16.0 * psi(t - dl) -
                       psi(t - 2 * dl)) /
                      (12.0 * dl * dl);
    worst = std::max(worst, std::abs(-kappa * d2 + (v(t) - e) * f0));
    peak = std::max(peak, std::abs(f0));
  }
  if (peak == 0.0) throw Error(ErrorCode::InvalidArgument, "psi vanishes on the interior");
  return worst / peak;
}

Grid grid_for(const susy::TrigPotential& v, int n_points, double margin) {
  if (!v.domain.bounded())
    throw Error(ErrorCode::InvalidArgument, "oracle needs a bounded domain");
  Grid g{v.domain.lo, v.domain.hi, n_points, margin};
  g.validate();
  return g;
}

}  // namespace susynu::oracle
