#pragma once

// Nikiforov-Uvarov reduction of
//   psi'' + (tau~/sigma) psi' + (sigma~/sigma^2) psi = 0
// with psi = phi(z) y(z), on polynomial data.

#include <array>
#include <functional>
#include <vector>

#include "susynu/poly.hpp"

namespace susynu::nu {

struct NuProblem {
  Poly sigma;
  Poly sigma_tilde;
  Poly tau_tilde;
  double z_min = 0.0;
  double z_max = 1.0;

  /// Checks the degree bounds (2, 2, 1) and throws InvalidArgument otherwise.
  void validate() const;
};

struct PiBranch {
  double k = 0.0;
  Poly pi;
  Poly tau;
  double lambda = 0.0;
  bool descending = false;
};

/// rho(z) = scale * (z - left_root)^a_exp * (right_root - z)^b_exp
struct BetaWeight {
  double a_exp = 0.0;
  double b_exp = 0.0;
  double left_root = 0.0;
  double right_root = 1.0;
  double scale = 1.0;

  double operator()(double z) const;
};

/// (sigma' - tau~)/2
Poly half_gap(const NuProblem& problem);

/// ((sigma' - tau~)/2)^2 - sigma~ + k sigma
Poly radicand(const NuProblem& problem, double k);

/// Real k making radicand(problem, k) a perfect square, sorted descending.
std::vector<double> k_candidates(const NuProblem& problem);

/// Both sign branches pi = (sigma' - tau~)/2 +- L with L^2 = radicand and L
/// normalized so its leading coefficient is nonnegative. The "+" branch
/// comes first.
std::array<PiBranch, 2> pi_branches(const NuProblem& problem, double k);

/// Gamma_n = -n tau' - n(n-1) sigma''/2
double lambda_n(const PiBranch& branch, const Poly& sigma, int n);

enum class Endpoint { Wall, Regular };

/// Which solution to keep among the (k, sign) combinations.
///
/// Every candidate must have tau' < 0, a weight integrable at both ends and
/// a phi factor bounded at both ends. At a Wall end (the potential diverges
/// there) the largest phi exponent wins. At a Regular end (an interior point
/// of the physical coordinate folded onto the z-interval) the distinct
/// admissible exponents are sorted and `parity` picks among them: 0 for the
/// even solution, 1 for the odd one.
struct BranchRule {
  Endpoint left = Endpoint::Wall;
  Endpoint right = Endpoint::Wall;
  int parity = 0;
};

/// The unique branch admitted by `rule`; NoAdmissibleBranch otherwise.
PiBranch select_branch(const NuProblem& problem, const BranchRule& rule);

struct Bracket {
  double lo;
  double hi;
};

using Family = std::function<NuProblem(double energy)>;

/// Energy with lambda(E) = Gamma_n(E) under the selected branch, by bisection
/// to 1e-12 in E. The bracket is first probed on 64 subintervals.
double quantize(const Family& family, int n, Bracket bracket, const BranchRule& rule);

/// Solution of (sigma rho)' = tau rho as a two-sided power law.
BetaWeight weight_function(const PiBranch& branch, const NuProblem& problem);

/// phi with phi'/phi = pi/sigma as a two-sided power law.
BetaWeight phi_factor(const PiBranch& branch, const NuProblem& problem);

/// Degree-n polynomial orthogonal under `weight` on its root interval:
/// the classical Jacobi P_n^(b_exp, a_exp) mapped onto [left, right].
Poly rodrigues_poly(const BetaWeight& weight, const Poly& sigma, int n);

}  // namespace susynu::nu
