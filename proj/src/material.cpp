#include "casimir/material.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

void MaterialParams::validate() const {
  if (name.empty()) throw ConfigError("material entry without a name");
  if (!(plasma_energy_ev > 0.0))
    throw ConfigError("material '" + name + "': plasma energy must be > 0");
  if (gamma_table.empty())
    throw ConfigError("material '" + name + "': empty relaxation table");
  for (size_t i = 0; i < gamma_table.size(); ++i) {
    if (gamma_table[i].gamma_ev < 0.0)
      throw ConfigError("material '" + name + "': negative relaxation entry");
    if (i > 0 && !(gamma_table[i].temperature_k > gamma_table[i - 1].temperature_k))
      throw ConfigError("material '" + name + "': table temperatures must be strictly increasing");
  }
}

double gamma_at(const MaterialParams& material, double temperature_k) {
  const auto& table = material.gamma_table;
  if (table.empty()) throw ConfigError("material '" + material.name + "': empty relaxation table");
  if (!(temperature_k > 0.0)) throw ConfigError("gamma_at: temperature must be > 0");

  double gamma_ev;
  if (table.size() == 1) {
    gamma_ev = table.front().gamma_ev;
  } else {
    // pick the segment whose right node is the first table temperature above T;
    // the boundary segments extend linearly outside the table range
    size_t hi = 1;
    while (hi + 1 < table.size() && table[hi].temperature_k < temperature_k) ++hi;
    const auto& A = table[hi - 1];
    const auto& B = table[hi];
    const double f = (temperature_k - A.temperature_k) / (B.temperature_k - A.temperature_k);
    gamma_ev = A.gamma_ev + f * (B.gamma_ev - A.gamma_ev);
  }
  return constants::ev_to_rad_s(gamma_ev);
}

MaterialDatabase::MaterialDatabase() {
  entries_.push_back({"Au", 9.0, {{300.0, 0.035}, {500.0, 0.058}}});
  entries_.push_back({"Ti", 2.51, {{300.0, 0.047}, {500.0, 0.078}}});
}

void MaterialDatabase::add(MaterialParams params) {
  params.validate();
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const MaterialParams& m) { return m.name == params.name; });
  if (it != entries_.end())
    *it = std::move(params);
  else
    entries_.push_back(std::move(params));
}

const MaterialParams& MaterialDatabase::find(const std::string& name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const MaterialParams& m) { return m.name == name; });
  if (it == entries_.end()) throw ConfigError("unknown material '" + name + "'");
  return *it;
}

}  // namespace casimir
