#include "susynu/app/config.hpp"

#include <cmath>
#include <cstdlib>

namespace susynu::app {

const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Nu: return "nu";
    case Method::Oracle: return "oracle";
    case Method::All: return "all";
  }
  return "unknown";
}

const char* to_string(UnitsPreset u) {
  return u == UnitsPreset::HbarM1 ? "hbar-m-1" : "hbar2-eq-2m";
}

const char* to_string(Partner p) { return p == Partner::Plus ? "plus" : "minus"; }

std::optional<UnitsPreset> parse_units(const std::string& name) {
  if (name == "hbar2-eq-2m") return UnitsPreset::Hbar2Eq2m;
  if (name == "hbar-m-1") return UnitsPreset::HbarM1;
  return std::nullopt;
}

Units units_of(UnitsPreset u) {
  return u == UnitsPreset::HbarM1 ? Units::hbar_m_1() : Units::hbar2_eq_2m();
}

UnitsPreset default_units() {
  const char* env = std::getenv("SUSY_NU_UNITS");
  if (env == nullptr || *env == '\0') return UnitsPreset::Hbar2Eq2m;
  const auto u = parse_units(env);
  if (!u) throw ConfigError(std::string("SUSY_NU_UNITS: unknown preset '") + env + "'");
  return *u;
}

void RunConfig::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(A) || !finite(a) || !finite(b) || !finite(alpha))
    throw ConfigError("parameters must be finite");
  if (alpha == 0.0) throw ConfigError("--alpha must be nonzero");
  if (n_max < 0) throw ConfigError("--n-max must be nonnegative");
  if (grid < 32 || grid % 2 != 0) throw ConfigError("--grid must be an even number >= 32");
  if (!(tol >= 0.0)) throw ConfigError("--tol must be nonnegative");
  if (potential == catalog::Family::Stp && !(A > 0.0))
    throw ConfigError("squared tangent needs --A > 0");
  if (potential == catalog::Family::Scp && A == 0.0)
    throw ConfigError("squared cotangent needs --A != 0");
}

catalog::StpParams RunConfig::stp() const {
  return catalog::StpParams::make(A, alpha, physical_units());
}

catalog::ScpParams RunConfig::scp() const {
  return catalog::ScpParams::make(A, alpha, physical_units());
}

catalog::PtpParams RunConfig::ptp() const {
  return catalog::PtpParams::make(a, b, alpha, physical_units());
}

catalog::FamilyPotential RunConfig::family_potential(Partner which) const {
  switch (potential) {
    case catalog::Family::Stp: return catalog::family_potential(stp(), which);
    case catalog::Family::Scp: return catalog::family_potential(scp(), which);
    case catalog::Family::Ptp: return catalog::family_potential(ptp(), which);
  }
  throw ConfigError("unknown potential");
}

susy::Superpotential RunConfig::superpotential() const {
  switch (potential) {
    case catalog::Family::Stp: return stp().superpotential();
    case catalog::Family::Scp: return scp().superpotential();
    case catalog::Family::Ptp: return ptp().superpotential();
  }
  throw ConfigError("unknown potential");
}

}  // namespace susynu::app
