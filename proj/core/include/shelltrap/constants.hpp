#pragma once

#include <numbers>

// Fundamental constants used throughout the library, SI units.
// Single authoritative table; do not duplicate these literals elsewhere.

namespace shelltrap::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

// CODATA 2018
inline constexpr double planck = 6.62607015e-34;           // J s (exact)
inline constexpr double hbar = planck / two_pi;            // J s
inline constexpr double bohr_magneton = 9.2740100783e-24;  // J/T

// standard gravitational acceleration, m/s^2 (exact by convention)
inline constexpr double standard_gravity = 9.80665;

inline constexpr const char* table_version = "CODATA-2018";

}  // namespace shelltrap::constants
