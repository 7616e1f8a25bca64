// geom.hpp - Earth/shell geometry: point sampling on spheres and caps,
// visibility, off-axis angles, boresight-shell intersection.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rfisim/constants.hpp"
#include "rfisim/rng.hpp"

namespace rfisim {

// Position or direction in an Earth-centered Cartesian frame, meters.
struct EcefVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  EcefVector operator+(const EcefVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  EcefVector operator-(const EcefVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  EcefVector operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const EcefVector& o) const { return x * o.x + y * o.y + z * o.z; }
  EcefVector cross(const EcefVector& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }

  EcefVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
    return {x / n, y / n, z / n};
  }
};

inline double distance(const EcefVector& a, const EcefVector& b) { return (a - b).norm(); }

struct GeometryConstants {
  double earth_radius_m = 6371000.0;
  double satellite_altitude_m = 550000.0;
  double min_elevation_rad = 0.0;  // field-of-view mask above the local horizon

  double shell_radius_m() const { return earth_radius_m + satellite_altitude_m; }
};

// Uniform-by-area point on the sphere of the given radius. Consumes two
// uniforms: cos(polar angle) on [-1,1), then azimuth.
inline EcefVector sample_uniform_sphere(RandomStream& rng, double radius) {
  if (radius <= 0.0) throw std::domain_error("sphere radius must be positive");
  const double cos_theta = rng.next_uniform(-1.0, 1.0);
  const double azimuth = rng.next_uniform(0.0, 2.0 * kPi);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  return {radius * sin_theta * std::cos(azimuth), radius * sin_theta * std::sin(azimuth),
          radius * cos_theta};
}

namespace detail {

// Orthonormal tangent basis {u, v} at the unit direction c.
inline void tangent_basis(const EcefVector& c, EcefVector& u, EcefVector& v) {
  const EcefVector helper = std::abs(c.x) < 0.9 ? EcefVector{1, 0, 0} : EcefVector{0, 1, 0};
  u = c.cross(helper).normalized();
  v = c.cross(u);
}

}  // namespace detail

// Uniform-by-area point on the spherical cap of geodesic radius
// max_geodesic_m around `center` (a point on the sphere of `radius`).
// cos(central angle) is drawn uniformly on [cos(max/R), 1].
inline EcefVector sample_uniform_cap(RandomStream& rng, const EcefVector& center,
                                     double max_geodesic_m, double radius) {
  if (max_geodesic_m == 0.0) return center;
  if (max_geodesic_m < 0.0 || max_geodesic_m >= kPi * radius)
    throw std::domain_error("cap radius outside (0, pi*R)");
  const double cos_max = std::cos(max_geodesic_m / radius);
  const double cos_chi = rng.next_uniform(cos_max, 1.0);
  const double azimuth = rng.next_uniform(0.0, 2.0 * kPi);
  const double sin_chi = std::sqrt(std::max(0.0, 1.0 - cos_chi * cos_chi));

  const EcefVector c = center.normalized();
  EcefVector u, v;
  detail::tangent_basis(c, u, v);
  const EcefVector dir =
      c * cos_chi + (u * std::cos(azimuth) + v * std::sin(azimuth)) * sin_chi;
  return dir * radius;
}

// Geodesic (great-circle) distance between two points on the sphere of the
// given radius.
inline double geodesic_distance(const EcefVector& a, const EcefVector& b, double radius) {
  const EcefVector ua = a.normalized();
  const EcefVector ub = b.normalized();
  return radius * std::atan2(ua.cross(ub).norm(), ua.dot(ub));
}

// Elevation of `sat` above the local horizontal plane at `site`, radians.
inline double elevation_angle(const EcefVector& site, const EcefVector& sat) {
  const EcefVector up = site.normalized();
  const EcefVector to_sat = sat - site;
  const double range = to_sat.norm();
  if (range == 0.0) throw std::domain_error("degenerate geometry");
  double s = to_sat.dot(up) / range;
  s = std::clamp(s, -1.0, 1.0);
  return std::asin(s);
}

inline bool is_visible(const EcefVector& site, const EcefVector& sat,
                       double min_elevation_rad) {
  return elevation_angle(site, sat) >= min_elevation_rad;
}

// Angle in [0, pi] between boresight_dir and the direction apex -> target.
inline double off_axis_angle(const EcefVector& apex, const EcefVector& boresight_dir,
                             const EcefVector& target) {
  const EcefVector d = target - apex;
  if (d.norm() == 0.0) throw std::domain_error("degenerate geometry");
  return std::atan2(d.cross(boresight_dir).norm(), d.dot(boresight_dir));
}

// Forward intersection of the look ray with the satellite shell. The site is
// inside the shell, so the quadratic has exactly one positive root.
inline EcefVector boresight_shell_intersection(const EcefVector& site,
                                               const EcefVector& boresight_dir,
                                               double shell_radius) {
  const double site_norm = site.norm();
  if (site_norm >= shell_radius)
    throw std::domain_error("site must lie inside the shell");
  if (boresight_dir.dot(site.normalized()) < 0.0)
    throw std::domain_error("boresight below horizon");
  const double b = site.dot(boresight_dir);
  const double disc = b * b - site_norm * site_norm + shell_radius * shell_radius;
  const double t = -b + std::sqrt(disc);
  return site + boresight_dir * t;
}

// Maps latitude/longitude (radians) to a point on the sphere of `radius`.
inline EcefVector site_from_lat_lon(double lat_rad, double lon_rad, double radius) {
  const double cl = std::cos(lat_rad);
  return {radius * cl * std::cos(lon_rad), radius * cl * std::sin(lon_rad),
          radius * std::sin(lat_rad)};
}

// Look direction from local azimuth (from north, clockwise toward east) and
// elevation at `site`. Elevation pi/2 returns the exact zenith.
inline EcefVector boresight_from_az_el(const EcefVector& site, double azimuth_rad,
                                       double elevation_rad) {
  const EcefVector up = site.normalized();
  if (elevation_rad == kPi / 2.0) return up;
  EcefVector east = EcefVector{0, 0, 1}.cross(up);
  if (east.norm() < 1e-12) east = {0, 1, 0};  // site at a pole
  east = east.normalized();
  const EcefVector north = up.cross(east);
  const double ce = std::cos(elevation_rad);
  return (east * (ce * std::sin(azimuth_rad)) + north * (ce * std::cos(azimuth_rad)) +
          up * std::sin(elevation_rad))
      .normalized();
}

}  // namespace rfisim
