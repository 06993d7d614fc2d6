#pragma once

#include "shelltrap/constants.hpp"

// Unit conversions between interface units (Hz, Gauss, G/cm) and the
// internal SI/angular-frequency representation (rad/s, Tesla, T/m).

namespace shelltrap::units {

constexpr double hz_to_angular(double f_hz) { return constants::two_pi * f_hz; }
constexpr double angular_to_hz(double w) { return w / constants::two_pi; }

constexpr double gauss_to_tesla(double b_gauss) { return b_gauss * 1e-4; }
constexpr double tesla_to_gauss(double b_tesla) { return b_tesla * 1e4; }

constexpr double gauss_per_cm_to_tesla_per_m(double v) { return v * 1e-2; }
constexpr double tesla_per_m_to_gauss_per_cm(double v) { return v * 1e2; }

constexpr double meters_to_um(double z) { return z * 1e6; }
constexpr double um_to_meters(double z) { return z * 1e-6; }

}  // namespace shelltrap::units
