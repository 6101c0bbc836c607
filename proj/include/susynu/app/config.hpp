#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "susynu/potential_catalog.hpp"
#include "susynu/units.hpp"

namespace susynu::app {

using susy::Partner;

enum class Method { ClosedForm, Nu, Oracle, All };
enum class Format { Csv, Json };
enum class UnitsPreset { Hbar2Eq2m, HbarM1 };

const char* to_string(Method m);
const char* to_string(UnitsPreset u);
const char* to_string(Partner p);

std::optional<UnitsPreset> parse_units(const std::string& name);
Units units_of(UnitsPreset u);

/// Bad flags or parameters; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  catalog::Family potential = catalog::Family::Stp;
  double A = 2.0;
  double a = -2.0;
  double b = 2.0;
  double alpha = 1.0;
  Partner sign = Partner::Minus;
  int n_max = 7;
  Method method = Method::All;
  UnitsPreset units = UnitsPreset::Hbar2Eq2m;
  bool units_given = false;  // set when --units appeared on the command line
  int grid = 4096;
  double tol = 1e-6;
  Format format = Format::Csv;
  std::string out;  // empty: standard output
  std::uint64_t seed = 0x5EED;

  /// Throws ConfigError.
  void validate() const;

  Units physical_units() const { return units_of(units); }
  catalog::StpParams stp() const;
  catalog::ScpParams scp() const;
  catalog::PtpParams ptp() const;
  catalog::FamilyPotential family_potential(Partner which) const;
  catalog::FamilyPotential family_potential() const { return family_potential(sign); }
  susy::Superpotential superpotential() const;
};

/// Units default: SUSY_NU_UNITS when set, hbar2-eq-2m otherwise. Throws
/// ConfigError on an unknown preset name in the environment.
UnitsPreset default_units();

}  // namespace susynu::app
