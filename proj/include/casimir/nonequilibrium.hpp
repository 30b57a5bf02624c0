#pragma once

#include "casimir/equilibrium.hpp"
#include "casimir/model.hpp"

namespace casimir {

struct DeltaPneq {
  double prop = 0.0;  // propagating-sector integral, Pa
  double evan = 0.0;  // evanescent-sector integral (its sign included), Pa
  double total() const { return prop + evan; }
};

/// Full output record of a single-point evaluation.
struct PressureBreakdown {
  double p_neq = 0.0;        // total pressure on the lower plate
  double p_eq_tilde = 0.0;   // modified equilibrium contribution
  double delta_p_neq = 0.0;  // proper nonequilibrium contribution
  double delta_prop = 0.0;
  double delta_evan = 0.0;
  double p_eq_mean = 0.0;
  double delta_eq_rel = 0.0;
  double blackbody_offset = 0.0;
  double p_ideal = 0.0;
  double ratio_delta_over_total = 0.0;  // delta_p_neq / |p_neq|
};

namespace detail {

struct DeltaPneqOptions {
  double x_min = 1e-6;      // lower end of the x = hbar w/(kB Tmax) integral
  double x_max_floor = 40;  // cutoff floor; raised if the population
                            // difference has not decayed to 1e-14 of its peak
};

DeltaPneq delta_pneq_opt(const SystemConfig& config, double rel_tol,
                         const DeltaPneqOptions& options);

}  // namespace detail

/// Proper nonequilibrium contribution: real-frequency integrals over the
/// propagating and evanescent sectors. Exactly zero for temperature-
/// independent permittivities and for |T1 - T2| < 1 mK.
DeltaPneq delta_pneq(const SystemConfig& config, double rel_tol = 1e-6);

/// Assembles the full breakdown; p_neq = p_eq_tilde + delta_p_neq holds
/// exactly by construction.
PressureBreakdown pressure_neq(const SystemConfig& config, double rel_tol = 1e-6);

/// Pressure on the upper plate: p_neq plus the black-body offset.
double pressure_neq_upper(const SystemConfig& config, double rel_tol = 1e-6);

/// (2 sigma/(3 c)) (T2^4 - T1^4)
double blackbody_offset(double t1, double t2);

/// Ideal-metal zero-temperature pressure -pi^2 hbar c / (240 a^4).
double pressure_ideal(double separation_m);

}  // namespace casimir
