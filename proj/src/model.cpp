#include "casimir/model.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

PermittivityModel PermittivityModel::parse(const std::string& spec) {
  PermittivityModel m;
  if (spec == "drude") {
    m.kind = ModelKind::DrudeT;
  } else if (spec == "plasma") {
    m.kind = ModelKind::Plasma;
  } else if (spec.rfind("drude-fixed:", 0) == 0) {
    m.kind = ModelKind::DrudeFixed;
    try {
      m.t_ref_k = std::stod(spec.substr(12));
    } catch (...) {
      throw ConfigError("bad model spec '" + spec + "'");
    }
    if (!(m.t_ref_k > 0.0)) throw ConfigError("drude-fixed reference temperature must be > 0");
  } else {
    throw ConfigError("unknown permittivity model '" + spec +
                      "' (expected drude, drude-fixed:<T>, plasma)");
  }
  return m;
}

std::string PermittivityModel::label() const {
  switch (kind) {
    case ModelKind::DrudeT:
      return "drude";
    case ModelKind::Plasma:
      return "plasma";
    case ModelKind::DrudeFixed: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "drude-fixed:%g", t_ref_k);
      return buf;
    }
  }
  return "?";
}

void PlateSpec::validate() const {
  material.validate();
  if (!(thickness_m > 0.0)) throw ConfigError("plate thickness must be > 0");
  if (!(temperature_k > 0.0)) throw ConfigError("plate temperature must be > 0");
}

void SystemConfig::validate() const {
  plate_upper.validate();
  plate_lower.validate();
  if (!(separation_m > 0.0)) throw ConfigError("separation must be > 0");
  if (plate_upper.material.name != plate_lower.material.name)
    throw ConfigError("similar-plates setup requires both plates of the same material");
  if (plate_upper.model.kind != plate_lower.model.kind ||
      (plate_upper.model.kind == ModelKind::DrudeFixed &&
       plate_upper.model.t_ref_k != plate_lower.model.t_ref_k))
    throw ConfigError("similar-plates setup requires both plates with the same model");
}

namespace {

double gamma_for(const PermittivityModel& model, const MaterialParams& material,
                 double temperature_k) {
  const double t_eval = (model.kind == ModelKind::DrudeFixed) ? model.t_ref_k : temperature_k;
  return gamma_at(material, t_eval);
}

}  // namespace

double permittivity_imag(const PermittivityModel& model, const MaterialParams& material,
                         double xi, double temperature_k) {
  if (xi < 0.0) throw ConfigError("permittivity_imag: xi must be >= 0");
  if (xi == 0.0)
    throw std::domain_error(
        "permittivity_imag: xi = 0 is a limit point; use the analytic l=0 reflection limits");
  const double wp = material.omega_p();
  if (model.kind == ModelKind::Plasma) return 1.0 + wp * wp / (xi * xi);
  const double g = gamma_for(model, material, temperature_k);
  return 1.0 + wp * wp / (xi * (xi + g));
}

double eps_xi2_limit(const PermittivityModel& model, const MaterialParams& material) {
  if (model.kind == ModelKind::Plasma) {
    const double wp = material.omega_p();
    return wp * wp;
  }
  return 0.0;  // Drude family: eps ~ wp^2/(gamma xi), so eps xi^2 -> 0
}

std::complex<double> permittivity_real(const PermittivityModel& model,
                                       const MaterialParams& material, double omega,
                                       double temperature_k) {
  if (!(omega > 0.0)) throw std::domain_error("permittivity_real: omega must be > 0");
  const double wp = material.omega_p();
  if (model.kind == ModelKind::Plasma) return {1.0 - wp * wp / (omega * omega), 0.0};
  const double g = gamma_for(model, material, temperature_k);
  return 1.0 - wp * wp / (omega * std::complex<double>(omega, g));
}

double theta(double omega, double temperature_k) {
  if (!(omega > 0.0)) throw std::domain_error("theta: omega must be > 0");
  if (!(temperature_k > 0.0)) throw std::domain_error("theta: temperature must be > 0");
  const double x = constants::hbar * omega / (constants::k_B * temperature_k);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

}  // namespace casimir
