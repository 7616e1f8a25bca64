// scenario.hpp - builds one stationary snapshot: drop the constellation,
// keep the field-of-view, place ground stations, pair links by minimum
// total distance and evaluate every per-link quantity.
#pragma once

#include <cstdint>
#include <vector>

#include "rfisim/antenna.hpp"
#include "rfisim/assignment.hpp"
#include "rfisim/channel.hpp"
#include "rfisim/geom.hpp"
#include "rfisim/rng.hpp"

namespace rfisim {

struct ScenarioConfig {
  int n_satellites = 1000;
  GeometryConstants geometry;
  RadioParams radio;

  double telescope_lat_rad = 0.0;
  double telescope_lon_rad = 0.0;
  double boresight_azimuth_rad = 0.0;
  double boresight_elevation_rad = kPi / 2.0;  // default zenith
  double ground_user_radius_m = 100e3;

  GainPattern telescope_pattern = Ra1631Pattern::from_gmax(64.0);
  GainPattern beacon_pattern = Ra1631Pattern::from_gmax(32.0);
  GainPattern satellite_pattern = AperturePattern::from_beamwidth(30.0, deg_to_rad(5.0));

  // Redraw xi for the beacon uplink instead of reusing the downlink draw;
  // models a displaced beacon transmitter. Default keeps reciprocity.
  bool independent_uplink_shadowing = false;

  EcefVector telescope_pos() const {
    return site_from_lat_lon(telescope_lat_rad, telescope_lon_rad,
                             geometry.earth_radius_m);
  }

  EcefVector boresight_dir() const {
    return boresight_from_az_el(telescope_pos(), boresight_azimuth_rad,
                                boresight_elevation_rad);
  }
};

// One satellite->ground link inside the field-of-view.
struct SatLink {
  EcefVector sat_pos;
  EcefVector site_pos;
  double distance_m = 0.0;     // d_i, satellite to telescope
  double theta_rad = 0.0;      // off-axis at the satellite
  double phi_rad = 0.0;        // off-axis at the telescope
  double gain_rx = 0.0;        // gamma_i, satellite -> telescope chain
  double gain_beacon = 0.0;    // gamma~_i, beacon -> satellite chain
  double shadow = 0.0;         // xi_i
  double shadow_uplink = 0.0;  // equals shadow unless reciprocity is broken
};

struct Snapshot {
  EcefVector telescope_pos;
  EcefVector boresight_dir;
  std::vector<SatLink> links;  // in-view satellites only

  std::size_t in_view_count() const { return links.size(); }
};

// N independent uniform points on the orbital shell.
inline std::vector<EcefVector> drop_constellation(RandomStream& rng,
                                                  const ScenarioConfig& config) {
  std::vector<EcefVector> sats;
  sats.reserve(config.n_satellites);
  const double shell = config.geometry.shell_radius_m();
  for (int i = 0; i < config.n_satellites; ++i)
    sats.push_back(sample_uniform_sphere(rng, shell));
  return sats;
}

// m area-uniform ground stations in the user disk around the telescope.
inline std::vector<EcefVector> place_ground_sites(RandomStream& rng,
                                                  const ScenarioConfig& config,
                                                  std::size_t m) {
  std::vector<EcefVector> sites;
  sites.reserve(m);
  const EcefVector telescope = config.telescope_pos();
  for (std::size_t i = 0; i < m; ++i)
    sites.push_back(sample_uniform_cap(rng, telescope, config.ground_user_radius_m,
                                       config.geometry.earth_radius_m));
  return sites;
}

// Permutation minimizing the total 3-D distance between paired satellites
// and sites; optimal, not heuristic.
inline std::vector<int> assign_min_total_distance(const std::vector<EcefVector>& sats,
                                                  const std::vector<EcefVector>& sites) {
  if (sats.size() != sites.size())
    throw std::invalid_argument("assignment requires equal counts");
  const std::size_t n = sats.size();
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = distance(sats[i], sites[j]);
  return solve_assignment(cost, n);
}

// Draw order per trial: constellation (2 uniforms per satellite), ground
// sites (2 per in-view satellite), downlink shadowing (2 per link), then
// uplink shadowing only when reciprocity is broken.
inline Snapshot build_snapshot(RandomStream& rng, const ScenarioConfig& config) {
  Snapshot snap;
  snap.telescope_pos = config.telescope_pos();
  snap.boresight_dir = config.boresight_dir();

  const std::vector<EcefVector> all_sats = drop_constellation(rng, config);
  std::vector<EcefVector> in_view;
  for (const EcefVector& sat : all_sats)
    if (is_visible(snap.telescope_pos, sat, config.geometry.min_elevation_rad))
      in_view.push_back(sat);

  const std::vector<EcefVector> sites = place_ground_sites(rng, config, in_view.size());
  const std::vector<int> pairing = assign_min_total_distance(in_view, sites);

  snap.links.reserve(in_view.size());
  for (std::size_t i = 0; i < in_view.size(); ++i) {
    SatLink link;
    link.sat_pos = in_view[i];
    link.site_pos = sites[pairing[i]];
    link.distance_m = distance(link.sat_pos, snap.telescope_pos);
    const EcefVector sat_boresight = (link.site_pos - link.sat_pos).normalized();
    link.theta_rad = off_axis_angle(link.sat_pos, sat_boresight, snap.telescope_pos);
    link.phi_rad = off_axis_angle(snap.telescope_pos, snap.boresight_dir, link.sat_pos);
    link.gain_rx =
        channel_gain(link.theta_rad, link.phi_rad, link.distance_m,
                     config.satellite_pattern, config.telescope_pattern,
                     config.radio.carrier_hz);
    link.gain_beacon =
        channel_gain(link.theta_rad, link.phi_rad, link.distance_m,
                     config.satellite_pattern, config.beacon_pattern,
                     config.radio.carrier_hz);
    snap.links.push_back(link);
  }
  for (SatLink& link : snap.links) {
    link.shadow = draw_shadowing(rng, config.radio.shadowing_sigma_db);
    link.shadow_uplink = link.shadow;
  }
  if (config.independent_uplink_shadowing)
    for (SatLink& link : snap.links)
      link.shadow_uplink = draw_shadowing(rng, config.radio.shadowing_sigma_db);

  return snap;
}

}  // namespace rfisim
