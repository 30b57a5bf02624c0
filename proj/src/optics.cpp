#include "casimir/optics.hpp"

#include <cassert>
#include <cmath>

#include "casimir/constants.hpp"

namespace casimir {

using constants::c_light;

WaveNumbersImag wave_numbers_imag(double xi, double k_perp, double eps) {
  const double xc = xi / c_light;
  WaveNumbersImag w;
  w.q = std::sqrt(k_perp * k_perp + xc * xc);
  w.v = std::sqrt(k_perp * k_perp + eps * xc * xc);
  return w;
}

namespace detail {

std::complex<double> branch_u(std::complex<double> radicand) {
  std::complex<double> u = std::sqrt(radicand);
  if (u.imag() < 0.0) u = -u;  // decaying branch: |e^{2 i d u}| <= 1
  return u;
}

double slab_reflection_imag(Polarization pol, double q, double v, double eps, double d) {
  const double r = (pol == Polarization::TM) ? (eps * q - v) / (eps * q + v) : (q - v) / (q + v);
  const double expo = 2.0 * d * v;
  if (expo > 690.0) return r;  // e^{-expo} underflows; slab is a semispace
  const double E = std::exp(-expo);
  return r * (1.0 - E) / (1.0 - r * r * E);
}

std::complex<double> slab_reflection_real(Polarization pol, std::complex<double> p,
                                          std::complex<double> u, std::complex<double> eps,
                                          double d) {
  const std::complex<double> r =
      (pol == Polarization::TM) ? (eps * p - u) / (eps * p + u) : (p - u) / (p + u);
  if (2.0 * d * u.imag() > 690.0) return r;
  const std::complex<double> F = std::exp(std::complex<double>(0.0, 2.0 * d) * u);
  return r * (1.0 - F) / (1.0 - r * r * F);
}

}  // namespace detail

WaveNumbersReal wave_numbers_real(double omega, double k_perp, std::complex<double> eps) {
  const double wc = omega / c_light;
  WaveNumbersReal w;
  if (k_perp <= wc) {
    w.p = std::sqrt(wc * wc - k_perp * k_perp);
  } else {
    w.p = {0.0, std::sqrt(k_perp * k_perp - wc * wc)};
  }
  w.u = detail::branch_u(eps * (wc * wc) - k_perp * k_perp);
  return w;
}

double reflection_imag(Polarization pol, int l, double xi, double k_perp,
                       const PlateSpec& plate) {
  if (l == 0) {
    assert(k_perp > 0.0);
    if (plate.model.kind != ModelKind::Plasma) {
      // Drude family: eps xi^2 -> 0, so v -> q = k_perp and r_TE -> 0 while
      // eps q/v -> inf drives r_TM -> 1; the slab factor then cancels for TM.
      return (pol == Polarization::TM) ? 1.0 : 0.0;
    }
    const double wp = plate.material.omega_p();
    const double v0 = std::sqrt(k_perp * k_perp + (wp / c_light) * (wp / c_light));
    if (pol == Polarization::TM) return 1.0;
    return detail::slab_reflection_imag(Polarization::TE, k_perp, v0, 1.0, plate.thickness_m);
  }
  const double eps = permittivity_imag(plate.model, plate.material, xi, plate.temperature_k);
  const WaveNumbersImag w = wave_numbers_imag(xi, k_perp, eps);
  return detail::slab_reflection_imag(pol, w.q, w.v, eps, plate.thickness_m);
}

std::complex<double> reflection_real(Polarization pol, double omega, double k_perp,
                                     const PlateSpec& plate) {
  const std::complex<double> eps =
      permittivity_real(plate.model, plate.material, omega, plate.temperature_k);
  const WaveNumbersReal w = wave_numbers_real(omega, k_perp, eps);
  return detail::slab_reflection_real(pol, w.p, w.u, eps, plate.thickness_m);
}

}  // namespace casimir
