#pragma once

#include <string>
#include <vector>

#include "casimir/constants.hpp"

namespace casimir {

struct GammaEntry {
  double temperature_k;  // K
  double gamma_ev;       // hbar*gamma in eV
};

/// Drude parameters of a metal. The plasma energy and the relaxation table
/// are stored in eV (the form they are usually quoted in); conversion to
/// angular frequency happens in the accessors.
struct MaterialParams {
  std::string name;
  double plasma_energy_ev = 0.0;        // hbar*omega_p in eV
  std::vector<GammaEntry> gamma_table;  // strictly increasing in T, gamma >= 0

  double omega_p() const { return constants::ev_to_rad_s(plasma_energy_ev); }

  /// Throws ConfigError if the entry is not usable.
  void validate() const;
};

/// Relaxation rate gamma(T) in rad/s: piecewise-linear interpolation of the
/// eV table over temperature, linear extrapolation outside the table range.
double gamma_at(const MaterialParams& material, double temperature_k);

/// Built-in metals plus user-registered entries; immutable once populated.
class MaterialDatabase {
 public:
  MaterialDatabase();  // seeds Au and Ti

  void add(MaterialParams params);  // replaces an entry of the same name
  const MaterialParams& find(const std::string& name) const;
  const std::vector<MaterialParams>& entries() const { return entries_; }

 private:
  std::vector<MaterialParams> entries_;
};

}  // namespace casimir
