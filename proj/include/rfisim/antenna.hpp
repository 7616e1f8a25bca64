// antenna.hpp - gain patterns: the RA.1631 piecewise envelope used by the
// radio telescope and the beacon transmitter, and the circular-aperture
// (Bessel) pattern used by the satellites.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>

#include "rfisim/bessel.hpp"
#include "rfisim/constants.hpp"

namespace rfisim {

// D = (lambda/pi) * 10^(gmax/20), from Gmax = 20 log10(pi D / lambda).
inline double diameter_from_gain(double gmax_dbi, double lambda_m) {
  if (lambda_m <= 0.0) throw std::domain_error("wavelength must be positive");
  return lambda_m / kPi * std::pow(10.0, gmax_dbi / 20.0);
}

namespace detail {

inline void check_off_axis_domain(double angle_rad) {
  if (!(angle_rad >= 0.0) || angle_rad > kPi * (1.0 + 1e-12))
    throw std::domain_error("off-axis angle outside [0, pi]");
}

// Common RA.1631 far-sidelobe envelope, shared by every pattern instance so
// two patterns on the envelope agree bit for bit.
inline double ra1631_envelope_dbi(double phi_deg) {
  if (phi_deg < 10.0) return 29.0 - 25.0 * std::log10(phi_deg);
  if (phi_deg < 34.1) return 34.0 - 30.0 * std::log10(phi_deg);
  if (phi_deg < 80.0) return -12.0;
  if (phi_deg < 120.0) return -7.0;
  return -12.0;
}

}  // namespace detail

// Piecewise RA.1631 pattern. For small apertures the G1 plateau can be empty
// (phi_r <= phi_m); the main lobe then hands over to the envelope at phi_m.
struct Ra1631Pattern {
  double gmax_dbi = 0.0;
  double d_over_lambda = 1.0;

  // Derived segment parameters, degrees.
  double g1_dbi = 0.0;
  double phi_m_deg = 0.0;
  double phi_r_deg = 0.0;

  static Ra1631Pattern from_gmax(double gmax_dbi) {
    Ra1631Pattern p;
    p.gmax_dbi = gmax_dbi;
    p.d_over_lambda = std::pow(10.0, gmax_dbi / 20.0) / kPi;
    p.g1_dbi = -1.0 + 15.0 * std::log10(p.d_over_lambda);
    p.phi_m_deg = 20.0 / p.d_over_lambda * std::sqrt(gmax_dbi - p.g1_dbi);
    p.phi_r_deg = 15.85 * std::pow(p.d_over_lambda, -0.6);
    return p;
  }

  double gain_dbi(double phi_rad) const {
    detail::check_off_axis_domain(phi_rad);
    const double phi_deg = std::min(rad_to_deg(phi_rad), 180.0);
    if (phi_deg < phi_m_deg)
      return gmax_dbi - 2.5e-3 * (d_over_lambda * phi_deg) * (d_over_lambda * phi_deg);
    if (phi_deg < phi_r_deg) return g1_dbi;
    return detail::ra1631_envelope_dbi(phi_deg);
  }

  double linear_gain(double phi_rad) const { return db_to_linear(gain_dbi(phi_rad)); }
};

inline double ra1631_gain(const Ra1631Pattern& p, double phi_rad) {
  return p.gain_dbi(phi_rad);
}

// Half-power argument of the normalized aperture pattern 4*(J1(x)/x)^2,
// located by bisection between 0 and the first zero of J1.
inline double aperture_half_power_argument() {
  auto normalized = [](double x) {
    const double j = bessel_j1(x) / x;
    return 4.0 * j * j;
  };
  double lo = 1e-9, hi = 3.8317059702075123;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normalized(mid) > 0.5 ? lo : hi) = mid;
    if ((hi - lo) < 1e-12 * mid) break;
  }
  return 0.5 * (lo + hi);
}

// k*a such that the pattern is 3 dB down at half the given beamwidth.
inline double calibrate_aperture(double beamwidth_rad) {
  if (!(beamwidth_rad > 0.0) || beamwidth_rad >= kPi)
    throw std::domain_error("beamwidth outside (0, pi)");
  static const double x_half = aperture_half_power_argument();
  return x_half / std::sin(beamwidth_rad / 2.0);
}

// Circular-aperture pattern: normalized power 4*|J1(x)/x|^2 with
// x = k*a*sin(theta), saturated at theta = pi/2 for the back hemisphere.
// Nulls are floored at `null_floor_db` relative to peak in the dBi surface;
// the linear-gain surface keeps the raw value wherever it is nonzero.
struct AperturePattern {
  double gmax_dbi = 0.0;
  double normalized_aperture = 1.0;  // k*a
  double null_floor_db = -30.0;      // relative to peak

  static AperturePattern from_beamwidth(double gmax_dbi, double beamwidth_rad,
                                        double null_floor_db = -30.0) {
    return {gmax_dbi, calibrate_aperture(beamwidth_rad), null_floor_db};
  }

  double normalized_power(double theta_rad) const {
    detail::check_off_axis_domain(theta_rad);
    const double s = std::sin(std::min(theta_rad, kPi / 2.0));
    const double x = normalized_aperture * s;
    if (x == 0.0) return 1.0;
    const double j = bessel_j1(x) / x;
    return 4.0 * j * j;
  }

  double gain_dbi(double theta_rad) const {
    const double floored =
        std::max(normalized_power(theta_rad), db_to_linear(null_floor_db));
    return gmax_dbi + linear_to_db(floored);
  }

  double linear_gain(double theta_rad) const {
    double p = normalized_power(theta_rad);
    if (p == 0.0) p = db_to_linear(null_floor_db);
    return db_to_linear(gmax_dbi) * p;
  }
};

inline double aperture_gain(const AperturePattern& p, double theta_rad) {
  return p.gain_dbi(theta_rad);
}

// Either pattern kind, exchanged in dBi at module interfaces.
class GainPattern {
 public:
  GainPattern() : impl_(Ra1631Pattern{}) {}
  GainPattern(Ra1631Pattern p) : impl_(p) {}
  GainPattern(AperturePattern p) : impl_(p) {}

  double gain_dbi(double angle_rad) const {
    return std::visit([angle_rad](const auto& p) { return p.gain_dbi(angle_rad); }, impl_);
  }

  double linear_gain(double angle_rad) const {
    return std::visit([angle_rad](const auto& p) { return p.linear_gain(angle_rad); },
                      impl_);
  }

  double peak_dbi() const {
    return std::visit([](const auto& p) { return p.gmax_dbi; }, impl_);
  }

 private:
  std::variant<Ra1631Pattern, AperturePattern> impl_;
};

}  // namespace rfisim
