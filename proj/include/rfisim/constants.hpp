// constants.hpp - physical constants and dB/linear helpers shared by all modules.
#pragma once

#include <cmath>

namespace rfisim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBoltzmann = 1.38e-23;        // J/K
inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rfisim
