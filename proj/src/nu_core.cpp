#include "susynu/nu_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "susynu/error.hpp"
#include "susynu/orthopoly.hpp"

namespace susynu::nu {

namespace {

constexpr double kSquareTol = 1e-12;
constexpr double kExponentTol = 1e-9;

struct Roots {
  double left;
  double right;
};

Roots sigma_roots(const Poly& sigma) {
  if (sigma.degree() != 2)
    throw Error(ErrorCode::UnsupportedSigma, "sigma must be quadratic with two real roots");
  const double a = sigma[2], b = sigma[1], c = sigma[0];
  const double disc = b * b - 4.0 * a * c;
  if (!(disc > 1e-14 * std::max(b * b, std::abs(4.0 * a * c))))
    throw Error(ErrorCode::UnsupportedSigma, "sigma has no two distinct real roots", disc);
  const double s = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(s, b));
  double r0 = q / a;
  double r1 = (q != 0.0) ? c / q : -r0;
  if (r0 > r1) std::swap(r0, r1);
  return {r0, r1};
}

// Exponents of a two-sided power law g with g'/g = f/sigma, f of degree <= 1.
BetaWeight power_law(const Poly& f, const Poly& sigma) {
  const auto r = sigma_roots(sigma);
  const double s2 = sigma[2];
  BetaWeight w;
  w.left_root = r.left;
  w.right_root = r.right;
  w.a_exp = f(r.left) / (s2 * (r.left - r.right));
  w.b_exp = f(r.right) / (s2 * (r.right - r.left));
  return w;
}

struct Candidate {
  PiBranch branch;
  BetaWeight phi;
  BetaWeight rho;
};

double exponent_at(const BetaWeight& w, bool left) { return left ? w.a_exp : w.b_exp; }

void keep_wall_max(std::vector<Candidate>& cands, bool left) {
  if (cands.empty()) return;
  double best = -INFINITY;
  for (const auto& c : cands) best = std::max(best, exponent_at(c.phi, left));
  std::erase_if(cands, [&](const Candidate& c) {
    return exponent_at(c.phi, left) < best - kExponentTol * std::max(1.0, std::abs(best));
  });
}

void keep_parity(std::vector<Candidate>& cands, bool left, int parity) {
  std::vector<double> distinct;
  for (const auto& c : cands) {
    const double e = exponent_at(c.phi, left);
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](double d) {
      return std::abs(d - e) <= kExponentTol * std::max(1.0, std::abs(e));
    });
    if (!seen) distinct.push_back(e);
  }
  std::sort(distinct.begin(), distinct.end());
  if (parity < 0 || parity >= static_cast<int>(distinct.size())) {
    cands.clear();
    return;
  }
  const double target = distinct[static_cast<std::size_t>(parity)];
  std::erase_if(cands, [&](const Candidate& c) {
    return std::abs(exponent_at(c.phi, left) - target) >
           kExponentTol * std::max(1.0, std::abs(target));
  });
}

}  // namespace

void NuProblem::validate() const {
  if (sigma.degree() > 2 || sigma_tilde.degree() > 2 || tau_tilde.degree() > 1)
    throw Error(ErrorCode::InvalidArgument, "degree bounds (2, 2, 1) violated");
}

double BetaWeight::operator()(double z) const {
  return scale * std::pow(z - left_root, a_exp) * std::pow(right_root - z, b_exp);
}

Poly half_gap(const NuProblem& problem) {
  return 0.5 * (problem.sigma.derivative() - problem.tau_tilde);
}

Poly radicand(const NuProblem& problem, double k) {
  const Poly h = half_gap(problem);
  return h * h - problem.sigma_tilde + k * problem.sigma;
}

std::vector<double> k_candidates(const NuProblem& problem) {
  problem.validate();
  const Poly r = radicand(problem, 0.0);
  const Poly& s = problem.sigma;
  // Discriminant in z of (r + k s) as a quadratic in k.
  const double qa = s[1] * s[1] - 4.0 * s[2] * s[0];
  const double qb = 2.0 * r[1] * s[1] - 4.0 * (r[2] * s[0] + s[2] * r[0]);
  const double qc = r[1] * r[1] - 4.0 * r[2] * r[0];
  const double mag = std::max(r.max_abs_coeff(), s.max_abs_coeff());
  const double tol = 1e-14 * std::max(mag * mag, 1e-300);

  if (std::abs(qa) <= tol) {
    if (std::abs(qb) <= tol) {
      if (std::abs(qc) <= tol) throw Error(ErrorCode::Underdetermined, "radicand square for every k");
      throw Error(ErrorCode::NoRealK, "no k makes the radicand a square", qc);
    }
    return {-qc / qb};
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  const double disc_scale = qb * qb + std::abs(4.0 * qa * qc);
  if (disc < -1e-12 * disc_scale)
    throw Error(ErrorCode::NoRealK, "complex k pair", disc);
  if (disc <= 1e-12 * disc_scale) return {-qb / (2.0 * qa)};
  const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
  std::vector<double> ks{q / qa, qc / q};
  std::sort(ks.begin(), ks.end(), std::greater<>());
  return ks;
}

std::array<PiBranch, 2> pi_branches(const NuProblem& problem, double k) {
  problem.validate();
  const Poly h = half_gap(problem);
  const Poly base = h * h - problem.sigma_tilde;
  const Poly r = base + k * problem.sigma;
  const double scale =
      std::max({r.max_abs_coeff(), base.max_abs_coeff(), std::abs(k) * problem.sigma.max_abs_coeff(),
                1e-300});
  const double tol = kSquareTol * scale;
  const double r0 = r[0], r1 = r[1], r2 = r[2];
  if (r.degree() > 2 || r2 < -tol || r0 < -tol)
    throw Error(ErrorCode::InvalidK, "radicand is not a perfect square", k);

  double p = 0.0, q = 0.0;
  if (std::max(r2, r0) <= tol) {
    p = q = 0.0;
  } else if (r2 >= r0) {
    p = std::sqrt(r2);
    q = r1 / (2.0 * p);
  } else {
    q = std::sqrt(r0);
    p = r1 / (2.0 * q);
  }
  if (p < 0.0 || (p == 0.0 && q < 0.0)) {
    p = -p;
    q = -q;
  }
  if (std::abs(p * p - r2) > tol || std::abs(2.0 * p * q - r1) > tol || std::abs(q * q - r0) > tol)
    throw Error(ErrorCode::InvalidK, "radicand is not a perfect square", k);

  const Poly root = Poly::linear(q, p);
  std::array<PiBranch, 2> out;
  for (int i = 0; i < 2; ++i) {
    PiBranch& b = out[static_cast<std::size_t>(i)];
    b.k = k;
    b.pi = (i == 0) ? h + root : h - root;
    b.tau = problem.tau_tilde + 2.0 * b.pi;
    b.lambda = k + b.pi[1];
    b.descending = b.tau[1] < 0.0;
  }
  return out;
}

double lambda_n(const PiBranch& branch, const Poly& sigma, int n) {
  const double nd = n;
  return -nd * branch.tau[1] - nd * (nd - 1.0) * sigma[2];
}

BetaWeight weight_function(const PiBranch& branch, const NuProblem& problem) {
  return power_law(branch.tau - problem.sigma.derivative(), problem.sigma);
}

BetaWeight phi_factor(const PiBranch& branch, const NuProblem& problem) {
  return power_law(branch.pi, problem.sigma);
}

PiBranch select_branch(const NuProblem& problem, const BranchRule& rule) {
  std::vector<Candidate> cands;
  for (double k : k_candidates(problem)) {
    for (const auto& b : pi_branches(problem, k)) {
      if (!b.descending) continue;
      Candidate c{b, phi_factor(b, problem), weight_function(b, problem)};
      if (c.rho.a_exp <= -1.0 || c.rho.b_exp <= -1.0) continue;
      if (c.phi.a_exp < -kExponentTol || c.phi.b_exp < -kExponentTol) continue;
      cands.push_back(std::move(c));
    }
  }
  if (rule.left == Endpoint::Wall) keep_wall_max(cands, true);
  if (rule.right == Endpoint::Wall) keep_wall_max(cands, false);
  if (rule.left == Endpoint::Regular) keep_parity(cands, true, rule.parity);
  if (rule.right == Endpoint::Regular) keep_parity(cands, false, rule.parity);
  if (cands.empty()) throw Error(ErrorCode::NoAdmissibleBranch, "no branch satisfies the rule");
  // Equal k with both signs of a vanishing root is the same branch twice.
  const auto& first = cands.front().branch;
  for (const auto& c : cands)
    if (!approx_equal(c.branch.pi, first.pi, 1e-10))
      throw Error(ErrorCode::NoAdmissibleBranch, "more than one branch satisfies the rule");
  return first;
}

double quantize(const Family& family, int n, Bracket bracket, const BranchRule& rule) {
  if (!(bracket.lo < bracket.hi)) throw Error(ErrorCode::InvalidArgument, "empty bracket");
  auto f = [&](double e) {
    const NuProblem p = family(e);
    const PiBranch b = select_branch(p, rule);
    return b.lambda - lambda_n(b, p.sigma, n);
  };
  constexpr int kProbes = 64;
  std::vector<double> es(kProbes + 1), fs(kProbes + 1);
  for (int i = 0; i <= kProbes; ++i) {
    es[i] = bracket.lo + (bracket.hi - bracket.lo) * i / kProbes;
    fs[i] = f(es[i]);
  }
  int changes = 0;
  int where = -1;
  for (int i = 0; i < kProbes; ++i) {
    if (fs[i] == 0.0) return es[i];
    if ((fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      ++changes;
      where = i;
    }
  }
  if (fs[kProbes] == 0.0) return es[kProbes];
  if (changes == 0) throw Error(ErrorCode::NoRoot, "no sign change for n = " + std::to_string(n));
  if (changes > 1)
    throw Error(ErrorCode::AmbiguousBracket, std::to_string(changes) + " sign changes");

  double lo = es[where], hi = es[where + 1];
  double flo = fs[where];
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Poly rodrigues_poly(const BetaWeight& weight, const Poly& sigma, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (weight.a_exp <= -1.0 || weight.b_exp <= -1.0)
    throw Error(ErrorCode::NonIntegrableWeight, "weight exponents must exceed -1");
  const auto r = sigma_roots(sigma);
  const double span = r.right - r.left;
  if (std::abs(r.left - weight.left_root) > 1e-12 * std::max(1.0, span) ||
      std::abs(r.right - weight.right_root) > 1e-12 * std::max(1.0, span))
    throw Error(ErrorCode::InvalidArgument, "weight roots differ from sigma roots");

  const double alpha = weight.b_exp;
  const double beta = weight.a_exp;
  const Poly x = Poly::linear(-(r.left + r.right) / span, 2.0 / span);
  Poly prev;
  Poly cur = Poly::constant(1.0);
  for (int m = 1; m <= n; ++m) {
    const auto step = orthopoly::jacobi_recurrence(m, alpha, beta);
    Poly next = (step.a * x + Poly::constant(step.b)) * cur - step.c * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace susynu::nu
