// channel.hpp - link-budget arithmetic: free-space loss, channel gains,
// log-normal shadowing, noise density and the aggregate-RFI threshold.
#pragma once

#include <cmath>
#include <stdexcept>

#include "rfisim/antenna.hpp"
#include "rfisim/constants.hpp"
#include "rfisim/rng.hpp"

namespace rfisim {

struct RadioParams {
  double carrier_hz = 10.65e9;
  double bandwidth_hz = 100e6;
  double sat_psd_dbw_per_mhz = -8.3;   // satellite transmit power density
  double beacon_power_w = 0.01;        // p_b
  double pfd_max_dbw_m2_hz = -240.0;
  double sky_temp_k = 300.0;           // T_a
  double rx_temp_k = 100.0;            // T_r
  double detection_threshold_db = 9.6; // eta
  double shadowing_sigma_db = 5.0;
};

// Free-space loss (4 pi d f / c)^2 as a linear power ratio.
inline double fsl(double distance_m, double carrier_hz) {
  if (distance_m <= 0.0) throw std::domain_error("distance must be positive");
  const double u = 4.0 * kPi * distance_m * carrier_hz / kSpeedOfLight;
  return u * u;
}

// Deterministic channel gain: tx gain * rx gain / FSL, all linear.
inline double channel_gain(double theta_rad, double phi_rad, double distance_m,
                           const GainPattern& tx_pattern, const GainPattern& rx_pattern,
                           double carrier_hz) {
  return tx_pattern.linear_gain(theta_rad) * rx_pattern.linear_gain(phi_rad) /
         fsl(distance_m, carrier_hz);
}

// Log-normal shadowing factor: 10 log10(xi) ~ N(0, sigma_db^2).
inline double draw_shadowing(RandomStream& rng, double sigma_db) {
  if (sigma_db < 0.0) throw std::domain_error("sigma must be non-negative");
  if (sigma_db == 0.0) return 1.0;
  return std::pow(10.0, rng.next_normal(sigma_db) / 10.0);
}

// N0 = k (T_a + T_r), W/Hz.
inline double noise_density(double sky_temp_k, double rx_temp_k) {
  if (sky_temp_k < 0.0 || rx_temp_k < 0.0)
    throw std::domain_error("temperatures must be non-negative");
  return kBoltzmann * (sky_temp_k + rx_temp_k);
}

// RFI_max = PFD_max * pi (D/2)^2 * bandwidth, watts.
inline double rfi_max(double pfd_max_dbw_m2_hz, double dish_diameter_m,
                      double bandwidth_hz) {
  const double half_d = dish_diameter_m / 2.0;
  return db_to_linear(pfd_max_dbw_m2_hz) * kPi * half_d * half_d * bandwidth_hz;
}

// Total in-band satellite transmit power from the per-MHz density.
inline double sat_power_linear(double psd_dbw_per_mhz, double bandwidth_hz) {
  if (bandwidth_hz <= 0.0) throw std::domain_error("bandwidth must be positive");
  return db_to_linear(psd_dbw_per_mhz) * (bandwidth_hz / 1e6);
}

// Budget quantities derived from RadioParams and the telescope peak gain;
// recomputed, never set independently.
struct DerivedBudget {
  double lambda_m = 0.0;
  double dish_diameter_m = 0.0;
  double rfi_max_w = 0.0;
  double noise_density_w_hz = 0.0;
  double sat_power_w = 0.0;

  static DerivedBudget derive(const RadioParams& radio, double telescope_gmax_dbi) {
    DerivedBudget b;
    b.lambda_m = kSpeedOfLight / radio.carrier_hz;
    b.dish_diameter_m = diameter_from_gain(telescope_gmax_dbi, b.lambda_m);
    b.rfi_max_w = rfi_max(radio.pfd_max_dbw_m2_hz, b.dish_diameter_m, radio.bandwidth_hz);
    b.noise_density_w_hz = noise_density(radio.sky_temp_k, radio.rx_temp_k);
    b.sat_power_w = sat_power_linear(radio.sat_psd_dbw_per_mhz, radio.bandwidth_hz);
    return b;
  }
};

}  // namespace rfisim
