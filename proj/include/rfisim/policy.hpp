// policy.hpp - the four mitigation strategies. Each maps a snapshot to an
// active/silenced mask plus the resulting aggregate RFI.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rfisim/channel.hpp"
#include "rfisim/geom.hpp"
#include "rfisim/scenario.hpp"

namespace rfisim {

struct FixedQzSpec {
  double ground_radius_m = 50e3;  // L
  double sky_radius_m = 0.0;      // V, chord distance on the shell
};

struct DynamicQzSpec {
  double tau_w = 1e-15;  // RFI threshold on the deterministic per-link level
};

struct BeaconSpec {
  double beacon_power_w = 0.01;         // p_b
  double sense_duration_s = 1e-3;       // T_b
  double threshold_eta_db = 9.6;        // detection threshold over N0
};

struct GenieSpec {};

using PolicySpec = std::variant<FixedQzSpec, DynamicQzSpec, BeaconSpec, GenieSpec>;

struct PolicyDecision {
  std::vector<char> active;     // one flag per in-view satellite
  double aggregate_rfi_w = 0.0;
  double active_fraction = 1.0; // defined as 1 when nothing is in view
  bool outage = false;
};

inline double interference_term(const SatLink& link, double sat_power_w) {
  return sat_power_w * link.gain_rx * link.shadow;
}

// Sum of p_s * gamma_i * xi_i over the active links, in link order.
inline double aggregate_rfi(const Snapshot& snap, const std::vector<char>& mask,
                            double sat_power_w) {
  if (mask.size() != snap.links.size())
    throw std::invalid_argument("mask length does not match snapshot");
  double total = 0.0;
  for (std::size_t i = 0; i < snap.links.size(); ++i)
    if (mask[i]) total += interference_term(snap.links[i], sat_power_w);
  return total;
}

namespace detail {

inline PolicyDecision finish_decision(const Snapshot& snap, std::vector<char> mask,
                                      const DerivedBudget& budget) {
  PolicyDecision d;
  d.aggregate_rfi_w = aggregate_rfi(snap, mask, budget.sat_power_w);
  const std::size_t m = snap.links.size();
  if (m > 0) {
    const auto actives = std::count(mask.begin(), mask.end(), char(1));
    d.active_fraction = static_cast<double>(actives) / static_cast<double>(m);
  }
  d.outage = d.aggregate_rfi_w >= budget.rfi_max_w;
  d.active = std::move(mask);
  return d;
}

}  // namespace detail

// Fixed quiet zones: silence a satellite when it sits within chord radius V
// of the boresight-shell intersection, or when its ground station lies
// within geodesic radius L of the telescope.
inline PolicyDecision apply_fixed_qz(const Snapshot& snap, const GeometryConstants& geom,
                                     const FixedQzSpec& spec,
                                     const DerivedBudget& budget) {
  const EcefVector sky_center = boresight_shell_intersection(
      snap.telescope_pos, snap.boresight_dir, geom.shell_radius_m());
  std::vector<char> mask(snap.links.size());
  for (std::size_t i = 0; i < snap.links.size(); ++i) {
    const SatLink& link = snap.links[i];
    const bool in_sky_zone = distance(link.sat_pos, sky_center) < spec.sky_radius_m;
    const bool in_ground_zone =
        geodesic_distance(link.site_pos, snap.telescope_pos, geom.earth_radius_m) <
        spec.ground_radius_m;
    mask[i] = !(in_sky_zone || in_ground_zone);
  }
  return detail::finish_decision(snap, std::move(mask), budget);
}

// Dynamic quiet zones: a satellite stays active while its deterministic
// received level p_s * gamma_i is at most tau. Shadowing is excluded from
// the decision but still enters the realized RFI.
inline PolicyDecision apply_dynamic_qz(const Snapshot& snap, const DynamicQzSpec& spec,
                                       const DerivedBudget& budget) {
  if (!(spec.tau_w > 0.0)) throw std::domain_error("tau must be positive");
  std::vector<char> mask(snap.links.size());
  for (std::size_t i = 0; i < snap.links.size(); ++i)
    mask[i] = budget.sat_power_w * snap.links[i].gain_rx <= spec.tau_w;
  return detail::finish_decision(snap, std::move(mask), budget);
}

// Beacon-assisted: a satellite that collects beacon energy
// p_b * T_b * gamma~_i * xi_i of at least eta * N0 must stay silent.
inline PolicyDecision apply_beacon(const Snapshot& snap, const BeaconSpec& spec,
                                   const DerivedBudget& budget) {
  const double detection_energy_j =
      db_to_linear(spec.threshold_eta_db) * budget.noise_density_w_hz;
  std::vector<char> mask(snap.links.size());
  for (std::size_t i = 0; i < snap.links.size(); ++i) {
    const SatLink& link = snap.links[i];
    const double collected =
        spec.beacon_power_w * spec.sense_duration_s * link.gain_beacon * link.shadow_uplink;
    mask[i] = collected < detection_energy_j;
  }
  return detail::finish_decision(snap, std::move(mask), budget);
}

// Genie-aided bound: sort the realized interference terms ascending and
// keep the longest prefix whose sum stays within RFI_max. Never in outage.
inline PolicyDecision apply_genie(const Snapshot& snap, const DerivedBudget& budget) {
  const std::size_t m = snap.links.size();
  std::vector<double> terms(m);
  for (std::size_t i = 0; i < m; ++i)
    terms[i] = interference_term(snap.links[i], budget.sat_power_w);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return terms[a] != terms[b] ? terms[a] < terms[b] : a < b;
  });

  std::vector<char> mask(m, char(0));
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double next = sum + terms[order[k]];
    if (next > budget.rfi_max_w) break;
    sum = next;
    mask[order[k]] = 1;
  }

  PolicyDecision d = detail::finish_decision(snap, std::move(mask), budget);
  d.outage = false;  // by construction
  return d;
}

inline PolicyDecision apply_policy(const Snapshot& snap, const GeometryConstants& geom,
                                   const PolicySpec& spec, const DerivedBudget& budget) {
  return std::visit(
      [&](const auto& s) -> PolicyDecision {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FixedQzSpec>)
          return apply_fixed_qz(snap, geom, s, budget);
        else if constexpr (std::is_same_v<T, DynamicQzSpec>)
          return apply_dynamic_qz(snap, s, budget);
        else if constexpr (std::is_same_v<T, BeaconSpec>)
          return apply_beacon(snap, s, budget);
        else
          return apply_genie(snap, budget);
      },
      spec);
}

}  // namespace rfisim
