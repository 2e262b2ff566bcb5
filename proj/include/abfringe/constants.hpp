#pragma once

#include <numbers>

// Physical constants in Gaussian CGS units. Everything in this library is
// expressed in this system:
//
//   length   cm           magnetic field   gauss (G)
//   time     s            electric field   statvolt/cm (numerically = G)
//   mass     g            charge           esu
//   energy   erg          vector potential G cm
//
// In Gaussian units E and B carry the same dimension, magnetic flux is
// G cm^2, and the flux quantum of phase is e/(hbar c) radians per G cm^2.
namespace abfringe::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double hbar = 1.0546e-27;  // erg s
inline constexpr double c = 2.998e10;       // cm/s
inline constexpr double e = 4.803e-10;      // esu, elementary charge (> 0)
inline constexpr double m_e = 9.109e-28;    // g, electron mass

inline constexpr double planck_h = 2.0 * pi * hbar;  // erg s

// Electron rest energy, erg (about 511 keV).
inline constexpr double mc2 = m_e * c * c;

// Interference phase per unit enclosed magnetic flux, rad / (G cm^2).
// Numerically about 1.519e7.
inline constexpr double phase_per_flux = e / (hbar * c);

inline constexpr double erg_per_kev = 1.602177e-9;

}  // namespace abfringe::constants
