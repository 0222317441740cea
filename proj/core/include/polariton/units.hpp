#pragma once

#include <complex>
#include <numbers>

namespace polariton {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Internal convention: every rate and detuning is an angular frequency.
constexpr double hz_to_rad(double hz) { return two_pi * hz; }
constexpr double rad_to_hz(double w) { return w / two_pi; }

constexpr double wavenumber(double wavelength) { return two_pi / wavelength; }

}  // namespace polariton
