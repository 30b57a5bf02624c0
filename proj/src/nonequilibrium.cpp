#include "casimir/nonequilibrium.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

using constants::c_light;
using constants::hbar;
using constants::k_B;
using constants::pi;
using constants::sigma_SB;
using std::complex;

double blackbody_offset(double t1, double t2) {
  const double t14 = t1 * t1 * t1 * t1;
  const double t24 = t2 * t2 * t2 * t2;
  return 2.0 * sigma_SB / (3.0 * c_light) * (t24 - t14);
}

double pressure_ideal(double separation_m) {
  if (!(separation_m > 0.0)) throw ConfigError("pressure_ideal: separation must be > 0");
  const double a = separation_m;
  return -pi * pi * hbar * c_light / (240.0 * a * a * a * a);
}

namespace {

double theta_difference(double omega, double t1, double t2) {
  return theta(omega, t1) - theta(omega, t2);
}

// Smallest x past the floor where the population difference has decayed to
// 1e-14 of its value at x_min (its peak: the difference decreases in omega).
double find_x_max(double x_min, double x_max_floor, double t1, double t2, double omega_scale) {
  const double peak = std::abs(theta_difference(x_min * omega_scale, t1, t2));
  const double threshold = 1e-14 * peak;
  double x = 5.0;
  while (x < 700.0 && std::abs(theta_difference(x * omega_scale, t1, t2)) > threshold) x *= 1.25;
  return std::max(std::min(x, 700.0), x_max_floor);
}

struct SectorIntegrand {
  const SystemConfig* config;
  double omega;
  complex<double> eps1, eps2;  // upper (T1) and lower (T2) plate responses

  void set_omega(double w) {
    omega = w;
    const PlateSpec& up = config->plate_upper;
    const PlateSpec& lo = config->plate_lower;
    eps1 = permittivity_real(up.model, up.material, w, up.temperature_k);
    eps2 = permittivity_real(lo.model, lo.material, w, lo.temperature_k);
  }

  // Int_0^{w/c} dp p^2 sum_alpha (|R2|^2 - |R1|^2) / |D|^2, p real.
  double propagating(double rel_tol) const {
    const double a = config->separation_m;
    const double d1 = config->plate_upper.thickness_m;
    const double d2 = config->plate_lower.thickness_m;
    const double pc_max = omega / c_light;
    const double wc2 = pc_max * pc_max;
    auto g = [&](double p) {
      const double kp2 = std::max(wc2 - p * p, 0.0);
      const complex<double> pc(p, 0.0);
      const complex<double> phase = std::polar(1.0, 2.0 * p * a);
      double s = 0.0;
      for (Polarization pol : kPolarizations) {
        const complex<double> u1 = detail::branch_u(eps1 * wc2 - kp2);
        const complex<double> u2 = detail::branch_u(eps2 * wc2 - kp2);
        const complex<double> R1 = detail::slab_reflection_real(pol, pc, u1, eps1, d1);
        const complex<double> R2 = detail::slab_reflection_real(pol, pc, u2, eps2, d2);
        const complex<double> D = 1.0 - R1 * R2 * phase;
        s += (std::norm(R2) - std::norm(R1)) / std::norm(D);
      }
      return p * p * s;
    };
    // Panels no wider than a quarter Fabry-Perot period in p.
    const int min_panels =
        std::clamp(static_cast<int>(std::ceil(pc_max / (pi / (4.0 * a)))), 8, 4096);
    quad::QuadratureResult res = quad::integrate_adaptive(g, 0.0, pc_max, rel_tol, min_panels);
    if (!res.converged)
      throw QuadratureError("propagating sector not converged at omega=" + std::to_string(omega));
    return res.value;
  }

  // Int_0^inf dt t^2 e^{-2 a t} sum_alpha (Im R1 Re R2 - Re R1 Im R2) / |D|^2.
  double evanescent(double rel_tol) const {
    const double a = config->separation_m;
    const double d1 = config->plate_upper.thickness_m;
    const double d2 = config->plate_lower.thickness_m;
    const double wc2 = (omega / c_light) * (omega / c_light);
    auto g = [&](double t) {
      const double kp2 = wc2 + t * t;
      const complex<double> pc(0.0, t);
      const double w = std::exp(-2.0 * a * t);
      double s = 0.0;
      for (Polarization pol : kPolarizations) {
        const complex<double> u1 = detail::branch_u(eps1 * wc2 - kp2);
        const complex<double> u2 = detail::branch_u(eps2 * wc2 - kp2);
        const complex<double> R1 = detail::slab_reflection_real(pol, pc, u1, eps1, d1);
        const complex<double> R2 = detail::slab_reflection_real(pol, pc, u2, eps2, d2);
        const complex<double> D = 1.0 - R1 * R2 * w;
        s += (R1.imag() * R2.real() - R1.real() * R2.imag()) / std::norm(D);
      }
      return t * t * w * s;
    };
    quad::QuadratureResult res = quad::integrate_semiinfinite(g, 1.0 / (2.0 * a), rel_tol, 32);
    if (!res.converged)
      throw QuadratureError("evanescent sector not converged at omega=" + std::to_string(omega));
    return res.value;
  }
};

}  // namespace

namespace detail {

DeltaPneq delta_pneq_opt(const SystemConfig& config, double rel_tol,
                         const DeltaPneqOptions& options) {
  config.validate();
  if (!(rel_tol > 0.0) || rel_tol > 1e-2)
    throw ConfigError("pressure tolerance must lie in (0, 1e-2]");

  DeltaPneq delta;
  if (config.plate_upper.model.temperature_independent()) return delta;
  if (std::abs(config.t1() - config.t2()) < 1e-3) return delta;

  const double t1 = config.t1();
  const double t2 = config.t2();
  const double t_max = std::max(t1, t2);
  const double omega_scale = k_B * t_max / hbar;
  const double x_max = find_x_max(options.x_min, options.x_max_floor, t1, t2, omega_scale);
  const double inner_tol = rel_tol / 10.0;

  auto outer = [&](bool evanescent) {
    auto h = [&](double x) {
      SectorIntegrand si;
      si.config = &config;
      si.set_omega(x * omega_scale);
      const double td = theta_difference(si.omega, t1, t2);
      if (td == 0.0) return 0.0;
      return td * (evanescent ? si.evanescent(inner_tol) : si.propagating(inner_tol));
    };
    quad::QuadratureResult res =
        quad::integrate_adaptive(h, options.x_min, x_max, rel_tol, 24);
    if (!res.converged)
      throw QuadratureError(std::string("frequency integral (") +
                            (evanescent ? "evanescent" : "propagating") +
                            " sector) not converged, estimate=" +
                            std::to_string(res.error_estimate));
    return res.value * omega_scale;
  };

  delta.prop = hbar / (4.0 * pi * pi) * outer(false);
  delta.evan = -hbar / (2.0 * pi * pi) * outer(true);
  return delta;
}

}  // namespace detail

DeltaPneq delta_pneq(const SystemConfig& config, double rel_tol) {
  return detail::delta_pneq_opt(config, rel_tol, detail::DeltaPneqOptions{});
}

PressureBreakdown pressure_neq(const SystemConfig& config, double rel_tol) {
  config.validate();
  PressureBreakdown b;
  b.p_eq_tilde = pressure_eq_tilde(config, rel_tol);
  const DeltaPneq delta = delta_pneq(config, rel_tol);
  b.delta_prop = delta.prop;
  b.delta_evan = delta.evan;
  b.delta_p_neq = delta.total();
  b.p_neq = b.p_eq_tilde + b.delta_p_neq;

  if (config.plate_upper.model.temperature_independent()) {
    // P~_eq coincides with the mean identically; avoid reporting quadrature
    // noise in the difference.
    b.p_eq_mean = b.p_eq_tilde;
    b.delta_eq_rel = 0.0;
  } else {
    SystemConfig c1 = config;
    c1.plate_upper.temperature_k = c1.plate_lower.temperature_k = config.t1();
    SystemConfig c2 = config;
    c2.plate_upper.temperature_k = c2.plate_lower.temperature_k = config.t2();
    b.p_eq_mean = 0.5 * (pressure_eq_tilde(c1, rel_tol) + pressure_eq_tilde(c2, rel_tol));
    b.delta_eq_rel = (b.p_eq_tilde - b.p_eq_mean) / b.p_eq_mean;
  }

  b.blackbody_offset = blackbody_offset(config.t1(), config.t2());
  b.p_ideal = pressure_ideal(config.separation_m);
  b.ratio_delta_over_total = (b.p_neq == 0.0) ? 0.0 : b.delta_p_neq / std::abs(b.p_neq);
  return b;
}

double pressure_neq_upper(const SystemConfig& config, double rel_tol) {
  const double p = pressure_eq_tilde(config, rel_tol) + delta_pneq(config, rel_tol).total();
  return p + blackbody_offset(config.t1(), config.t2());
}

}  // namespace casimir
