#pragma once

#include <functional>

#include "casimir/model.hpp"
#include "casimir/optics.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Modified equilibrium contribution: Matsubara sum over both temperature
/// ladders with the mixed reflection product R(T1) R(T2). Negative for
/// metallic plates. Throws QuadratureError on non-convergence.
double pressure_eq_tilde(const SystemConfig& config, double rel_tol = 1e-6);

/// Standard equilibrium Lifshitz pressure at a single temperature: both
/// plates are the template held at T.
double pressure_eq(double separation_m, double temperature_k, const PlateSpec& plate_template,
                   double rel_tol = 1e-6);

/// Arithmetic mean of the equilibrium pressures at T1 and T2.
double pressure_eq_mean(double separation_m, double t1, double t2,
                        const PlateSpec& plate_template, double rel_tol = 1e-6);

/// Relative difference (P~_eq - Pbar_eq) / Pbar_eq. Identically zero for
/// temperature-independent permittivities (plasma, fixed-gamma Drude).
double delta_eq_rel(const SystemConfig& config, double rel_tol = 1e-6);

/// One summand of a temperature ladder, exposed for inspection and tests.
/// Multiply value by -kB T_n/(2 pi) for its pressure contribution.
struct MatsubaraTerm {
  double ladder_temperature_k = 0.0;  // T_n defining the frequency ladder
  long index = 0;                     // l >= 0
  double xi = 0.0;                    // 2 pi kB T_n l / hbar
  double weight = 1.0;                // 1/2 at l = 0 (the primed sum), else 1
  double value = 0.0;                 // weighted k_perp integral
};

namespace detail {

/// Product R_alpha(T1)*R_alpha(T2) at a Matsubara point, as a function of
/// polarization and k_perp. Test code substitutes constant products here.
using ReflectionProduct = std::function<double(Polarization, double)>;

MatsubaraTerm matsubara_term(const SystemConfig& config, double ladder_temperature_k,
                             long index, double rel_tol);

/// Inner k_perp integral of one Matsubara term in the y = 2 a q variable:
///   (1/(8 a^3)) Int y^2 sum_alpha RR e^{-y} / (1 - RR e^{-y}) dy
/// over [y_min, max(60, y_min+30)].
double matsubara_kperp_integral(const ReflectionProduct& product, double separation_m,
                                double y_min, double rel_tol);

/// One temperature ladder of the Matsubara sum (the prime-weighted series of
/// k_perp integrals, before the -kB T_n/(2 pi) prefactor). extra_terms forces
/// that many additional terms past the stopping index (truncation tests).
double matsubara_ladder(const SystemConfig& config, double ladder_temperature_k,
                        double rel_tol, long extra_terms = 0);

}  // namespace detail

}  // namespace casimir
