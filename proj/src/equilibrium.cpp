#include "casimir/equilibrium.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

using constants::c_light;
using constants::hbar;
using constants::k_B;
using constants::pi;

namespace {

void check_tol(double rel_tol) {
  if (!(rel_tol > 0.0) || rel_tol > 1e-2)
    throw ConfigError("pressure tolerance must lie in (0, 1e-2]");
}

// Series truncation follows the exponential decay e^{-y_min(l)}; the floor
// keeps enough terms that the decay criterion cannot trigger prematurely at
// large separations or low temperatures.
long ladder_floor_terms(double separation_m, double temperature_k) {
  const double scale = hbar * c_light / (2.0 * separation_m * k_B * temperature_k);
  return std::max<long>(5, static_cast<long>(std::ceil(5.0 * scale)));
}

}  // namespace

namespace detail {

double matsubara_kperp_integral(const ReflectionProduct& product, double separation_m,
                                double y_min, double rel_tol) {
  const double a = separation_m;
  const double y_max = std::max(60.0, y_min + 30.0);
  auto f = [&](double y) {
    const double kp = std::sqrt(std::max(y * y - y_min * y_min, 0.0)) / (2.0 * a);
    double s = 0.0;
    for (Polarization pol : kPolarizations) {
      const double rr = product(pol, kp);
      const double ey = std::exp(-y);
      s += rr * ey / (1.0 - rr * ey);
    }
    return y * y * s / (8.0 * a * a * a);
  };
  quad::QuadratureResult res = quad::integrate_adaptive(f, y_min, y_max, rel_tol, 16);
  const double tail = std::abs(f(y_max)) * 1.2;  // integrand ~ y^2 e^{-y} past y_max
  if (!res.converged || tail > rel_tol * std::max(std::abs(res.value), quad::kAbsFloor)) {
    throw QuadratureError("Matsubara k_perp integral not converged (y_min=" +
                          std::to_string(y_min) + ", estimate=" +
                          std::to_string(res.error_estimate) + ")");
  }
  return res.value;
}

MatsubaraTerm matsubara_term(const SystemConfig& config, double ladder_temperature_k,
                             long index, double rel_tol) {
  const double a = config.separation_m;
  const PlateSpec& up = config.plate_upper;
  const PlateSpec& lo = config.plate_lower;

  MatsubaraTerm term;
  term.ladder_temperature_k = ladder_temperature_k;
  term.index = index;
  term.xi = 2.0 * pi * k_B * ladder_temperature_k * static_cast<double>(index) / hbar;
  term.weight = (index == 0) ? 0.5 : 1.0;

  const double y_min = 2.0 * a * term.xi / c_light;
  if (y_min > 400.0) return term;  // dead tail, value stays 0

  ReflectionProduct product;
  if (index == 0) {
    product = [&](Polarization pol, double kp) {
      return reflection_imag(pol, 0, 0.0, kp, up) * reflection_imag(pol, 0, 0.0, kp, lo);
    };
  } else {
    const double xi = term.xi;
    const double eps1 = permittivity_imag(up.model, up.material, xi, up.temperature_k);
    const double eps2 = permittivity_imag(lo.model, lo.material, xi, lo.temperature_k);
    product = [&, xi, eps1, eps2](Polarization pol, double kp) {
      const WaveNumbersImag w1 = wave_numbers_imag(xi, kp, eps1);
      const WaveNumbersImag w2 = wave_numbers_imag(xi, kp, eps2);
      return detail::slab_reflection_imag(pol, w1.q, w1.v, eps1, up.thickness_m) *
             detail::slab_reflection_imag(pol, w2.q, w2.v, eps2, lo.thickness_m);
    };
  }
  term.value = term.weight * matsubara_kperp_integral(product, a, y_min, rel_tol);
  return term;
}

double matsubara_ladder(const SystemConfig& config, double ladder_temperature_k,
                        double rel_tol, long extra_terms) {
  const double inner_tol = rel_tol / 10.0;
  auto term = [&](long l) {
    return matsubara_term(config, ladder_temperature_k, l, inner_tol).value;
  };

  quad::QuadratureResult series = quad::sum_series(
      term, 1e-10, 3, ladder_floor_terms(config.separation_m, ladder_temperature_k));
  if (!series.converged)
    throw QuadratureError("Matsubara sum did not converge at T=" +
                          std::to_string(ladder_temperature_k));
  double value = series.value;
  for (long e = 0; e < extra_terms; ++e) value += term(series.evaluations + e);
  return value;
}

}  // namespace detail

double pressure_eq_tilde(const SystemConfig& config, double rel_tol) {
  config.validate();
  check_tol(rel_tol);
  const double s1 = detail::matsubara_ladder(config, config.t1(), rel_tol);
  const double s2 = (config.t1() == config.t2())
                        ? s1
                        : detail::matsubara_ladder(config, config.t2(), rel_tol);
  return -(k_B / (2.0 * pi)) * (config.t1() * s1 + config.t2() * s2);
}

double pressure_eq(double separation_m, double temperature_k, const PlateSpec& plate_template,
                   double rel_tol) {
  SystemConfig cfg;
  cfg.plate_upper = plate_template;
  cfg.plate_lower = plate_template;
  cfg.plate_upper.temperature_k = temperature_k;
  cfg.plate_lower.temperature_k = temperature_k;
  cfg.separation_m = separation_m;
  return pressure_eq_tilde(cfg, rel_tol);
}

double pressure_eq_mean(double separation_m, double t1, double t2,
                        const PlateSpec& plate_template, double rel_tol) {
  const double p1 = pressure_eq(separation_m, t1, plate_template, rel_tol);
  const double p2 = (t1 == t2) ? p1 : pressure_eq(separation_m, t2, plate_template, rel_tol);
  return 0.5 * (p1 + p2);
}

double delta_eq_rel(const SystemConfig& config, double rel_tol) {
  config.validate();
  if (config.plate_upper.model.temperature_independent()) return 0.0;
  const double pt = pressure_eq_tilde(config, rel_tol);
  SystemConfig c1 = config;
  c1.plate_upper.temperature_k = c1.plate_lower.temperature_k = config.t1();
  SystemConfig c2 = config;
  c2.plate_upper.temperature_k = c2.plate_lower.temperature_k = config.t2();
  const double pm = 0.5 * (pressure_eq_tilde(c1, rel_tol) + pressure_eq_tilde(c2, rel_tol));
  return (pt - pm) / pm;
}

}  // namespace casimir
