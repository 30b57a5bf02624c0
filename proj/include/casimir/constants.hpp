#pragma once

#include <numbers>

// CODATA-2018 exact values, SI units throughout the library.
// User-facing unit conversion happens at the CLI/config boundary only.

namespace casimir::constants {

inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double c_light = 2.99792458e8;       // m/s
inline constexpr double k_B = 1.380649e-23;           // J/K
inline constexpr double sigma_SB = 5.670374419e-8;    // W/(m^2 K^4)
inline constexpr double eV = 1.602176634e-19;         // J
inline constexpr double pi = std::numbers::pi;

// ev_to_rad_s(hbar*omega in eV) -> omega in rad/s
inline constexpr double ev_to_rad_s(double energy_ev) { return energy_ev * eV / hbar; }

}  // namespace casimir::constants
