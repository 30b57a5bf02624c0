#pragma once

#include <complex>
#include <string>

#include "casimir/material.hpp"

namespace casimir {

enum class ModelKind {
  DrudeT,      // gamma evaluated at the plate temperature
  DrudeFixed,  // gamma frozen at a reference temperature
  Plasma,      // dissipationless, gamma ignored
};

struct PermittivityModel {
  ModelKind kind = ModelKind::DrudeT;
  double t_ref_k = 300.0;  // only meaningful for DrudeFixed

  /// True when the response does not depend on the plate temperature
  /// (Plasma and DrudeFixed). Such models have no proper nonequilibrium term.
  bool temperature_independent() const { return kind != ModelKind::DrudeT; }

  /// "drude", "drude-fixed:<T>", "plasma"
  static PermittivityModel parse(const std::string& spec);
  std::string label() const;
};

struct PlateSpec {
  MaterialParams material;
  PermittivityModel model;
  double thickness_m = 0.0;    // d > 0
  double temperature_k = 0.0;  // T > 0

  void validate() const;
};

/// Two parallel plates in vacuum. The upper plate sits at the environment
/// temperature T1, the lower at T2. Both plates share material and model.
struct SystemConfig {
  PlateSpec plate_upper;  // T1
  PlateSpec plate_lower;  // T2
  double separation_m = 0.0;  // a > 0

  double t1() const { return plate_upper.temperature_k; }
  double t2() const { return plate_lower.temperature_k; }
  void validate() const;
};

/// Dielectric permittivity at imaginary frequency i*xi, xi > 0. Real, >= 1.
/// xi == 0 is a limit point: callers must use the closed-form l=0 reflection
/// limits instead, so the call throws rather than returning an infinity.
double permittivity_imag(const PermittivityModel& model, const MaterialParams& material,
                         double xi, double temperature_k);

/// lim xi->0 of eps(i xi) * xi^2: omega_p^2 for the plasma model, 0 for the
/// Drude family. This is the quantity that survives in the l=0 wave numbers.
double eps_xi2_limit(const PermittivityModel& model, const MaterialParams& material);

/// Dielectric permittivity at real frequency omega > 0.
std::complex<double> permittivity_real(const PermittivityModel& model,
                                       const MaterialParams& material, double omega,
                                       double temperature_k);

/// Thermal photon population 1/(exp(hbar w/kB T) - 1), overflow-safe.
double theta(double omega, double temperature_k);

}  // namespace casimir
