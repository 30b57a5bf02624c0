#pragma once

#include <complex>

#include "casimir/model.hpp"

namespace casimir {

enum class Polarization { TM, TE };
inline constexpr Polarization kPolarizations[2] = {Polarization::TM, Polarization::TE};

struct WaveNumbersImag {
  double q;  // vacuum normal component, q = sqrt(k^2 + xi^2/c^2)
  double v;  // medium normal component, v = sqrt(k^2 + eps xi^2/c^2)
};

struct WaveNumbersReal {
  std::complex<double> p;  // vacuum: real >= 0 propagating, +i|p| evanescent
  std::complex<double> u;  // medium: branch with Im u >= 0
};

WaveNumbersImag wave_numbers_imag(double xi, double k_perp, double eps);
WaveNumbersReal wave_numbers_real(double omega, double k_perp, std::complex<double> eps);

namespace detail {

/// Slab reflection from Fresnel pieces on the imaginary axis.
/// R = r (1 - e^{-2 d v}) / (1 - r^2 e^{-2 d v}); returns the semispace value
/// once the exponent underflows.
double slab_reflection_imag(Polarization pol, double q, double v, double eps, double d);

/// Real-frequency counterpart with phase factor e^{2 i d u}, Im u >= 0.
std::complex<double> slab_reflection_real(Polarization pol, std::complex<double> p,
                                          std::complex<double> u, std::complex<double> eps,
                                          double d);

/// Medium normal component with the decaying branch enforced: principal
/// square root of (eps w^2/c^2 - k^2), conjugated if Im < 0.
std::complex<double> branch_u(std::complex<double> radicand);

}  // namespace detail

/// Finite-thickness reflection coefficient at Matsubara point (l, xi).
/// l = 0 uses the analytic limits: Drude family R_TE = 0, R_TM = 1; plasma
/// evaluates with v0 = sqrt(k^2 + omega_p^2/c^2) and r_TM -> 1.
double reflection_imag(Polarization pol, int l, double xi, double k_perp,
                       const PlateSpec& plate);

/// Finite-thickness reflection coefficient at real frequency omega > 0.
std::complex<double> reflection_real(Polarization pol, double omega, double k_perp,
                                     const PlateSpec& plate);

}  // namespace casimir
