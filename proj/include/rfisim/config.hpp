// config.hpp - plain-text run configuration: sectioned key/value document,
// schema-validated (unknown keys rejected), with canonical dump + hash so
// every output can be traced back to the exact inputs.
#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfisim/montecarlo.hpp"
#include "rfisim/scenario.hpp"

namespace rfisim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AntennaConfig {
  double telescope_gmax_dbi = 64.0;
  double beacon_gmax_dbi = 32.0;
  double satellite_gmax_dbi = 30.0;
  double satellite_beamwidth_deg = 5.0;
  double null_floor_db = -30.0;
};

struct SweepConfig {
  std::vector<PolicyFamily> policies = {PolicyFamily::fixed_qz, PolicyFamily::dynamic_qz,
                                        PolicyFamily::beacon, PolicyFamily::genie};
  long n_trials = 100000;
  std::uint64_t master_seed = 1;
  int workers = 0;  // 0 = auto
  double fixed_l_m = 50e3;
  double v_min_m = 0.0;  // 0 = auto: v_max / 1000
  double v_max_m = 0.0;  // 0 = auto: maximal in-view chord 2*sqrt(h(2Re+h))
  int v_steps = 64;
  double tau_min_w = 1e-17;
  double tau_max_w = 1e-14;
  int tau_steps = 64;
  double tb_min_s = 0.0;
  double tb_max_s = 5.3e-3;
  int tb_steps = 64;
};

struct RunConfig {
  int n_satellites = 1000;
  double telescope_lat_deg = 0.0;
  double telescope_lon_deg = 0.0;
  double boresight_azimuth_deg = 0.0;
  double boresight_elevation_deg = 90.0;
  double ground_user_radius_m = 100e3;
  double min_elevation_deg = 0.0;
  bool independent_uplink_shadowing = false;

  double earth_radius_m = 6371e3;
  double satellite_altitude_m = 550e3;

  RadioParams radio;
  AntennaConfig antenna;
  SweepConfig sweep;

  ScenarioConfig to_scenario() const {
    ScenarioConfig s;
    s.n_satellites = n_satellites;
    s.geometry.earth_radius_m = earth_radius_m;
    s.geometry.satellite_altitude_m = satellite_altitude_m;
    s.geometry.min_elevation_rad = deg_to_rad(min_elevation_deg);
    s.radio = radio;
    s.telescope_lat_rad = deg_to_rad(telescope_lat_deg);
    s.telescope_lon_rad = deg_to_rad(telescope_lon_deg);
    s.boresight_azimuth_rad = deg_to_rad(boresight_azimuth_deg);
    s.boresight_elevation_rad =
        boresight_elevation_deg == 90.0 ? kPi / 2.0 : deg_to_rad(boresight_elevation_deg);
    s.ground_user_radius_m = ground_user_radius_m;
    s.telescope_pattern = Ra1631Pattern::from_gmax(antenna.telescope_gmax_dbi);
    s.beacon_pattern = Ra1631Pattern::from_gmax(antenna.beacon_gmax_dbi);
    s.satellite_pattern = AperturePattern::from_beamwidth(
        antenna.satellite_gmax_dbi, deg_to_rad(antenna.satellite_beamwidth_deg),
        antenna.null_floor_db);
    s.independent_uplink_shadowing = independent_uplink_shadowing;
    return s;
  }

  double resolved_v_max_m() const {
    if (sweep.v_max_m > 0.0) return sweep.v_max_m;
    const double h = satellite_altitude_m;
    return 2.0 * std::sqrt(h * (2.0 * earth_radius_m + h));
  }

  double resolved_v_min_m() const {
    return sweep.v_min_m > 0.0 ? sweep.v_min_m : resolved_v_max_m() / 1000.0;
  }

  SweepSpec to_sweep_spec() const {
    SweepSpec spec;
    spec.scenario = to_scenario();
    spec.fixed_ground_l_m = sweep.fixed_l_m;
    spec.n_trials = sweep.n_trials;
    spec.master_seed = sweep.master_seed;
    spec.n_workers = sweep.workers;
    for (PolicyFamily f : sweep.policies) {
      PolicySweep ps;
      ps.family = f;
      switch (f) {
        case PolicyFamily::fixed_qz:
          ps.grid = log_grid(resolved_v_min_m(), resolved_v_max_m(), sweep.v_steps);
          break;
        case PolicyFamily::dynamic_qz:
          ps.grid = log_grid(sweep.tau_min_w, sweep.tau_max_w, sweep.tau_steps);
          break;
        case PolicyFamily::beacon:
          ps.grid = linear_grid(sweep.tb_min_s, sweep.tb_max_s, sweep.tb_steps);
          break;
        case PolicyFamily::genie:
          break;
      }
      spec.policies.push_back(std::move(ps));
    }
    return spec;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

inline double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("invalid number for " + key + ": '" + value + "'");
  return v;
}

inline long parse_long(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("invalid integer for " + key + ": '" + value + "'");
  return v;
}

inline std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos)
    throw ConfigError("invalid unsigned integer for " + key + ": '" + value + "'");
  return v;
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("invalid boolean for " + key + ": '" + value + "'");
}

inline PolicyFamily parse_family(const std::string& name) {
  if (name == "fixed") return PolicyFamily::fixed_qz;
  if (name == "dynamic") return PolicyFamily::dynamic_qz;
  if (name == "beacon") return PolicyFamily::beacon;
  if (name == "genie") return PolicyFamily::genie;
  throw ConfigError("unknown policy '" + name + "'");
}

inline std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

// Parses the sectioned key/value document. Every (section, key) pair must be
// in the schema; anything else is rejected with a diagnostic.
inline RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  static const std::map<std::string, std::set<std::string>> schema = {
      {"scenario",
       {"n_satellites", "telescope_lat_deg", "telescope_lon_deg",
        "boresight_azimuth_deg", "boresight_elevation_deg", "ground_user_radius_m",
        "min_elevation_deg", "independent_uplink_shadowing"}},
      {"geometry", {"earth_radius_m", "satellite_altitude_m"}},
      {"radio",
       {"carrier_hz", "bandwidth_hz", "sat_psd_dbw_mhz", "beacon_power_w",
        "pfd_max_dbw_m2_hz", "sky_temp_k", "rx_temp_k", "detection_threshold_db",
        "shadowing_sigma_db"}},
      {"antenna",
       {"telescope_gmax_dbi", "beacon_gmax_dbi", "satellite_gmax_dbi",
        "satellite_beamwidth_deg", "null_floor_db"}},
      {"sweep",
       {"policies", "n_trials", "master_seed", "workers", "fixed_l_m", "v_min_m",
        "v_max_m", "v_steps", "tau_min_w", "tau_max_w", "tau_steps", "tb_min_s",
        "tb_max_s", "tb_steps"}},
  };

  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section");
      section = detail::trim(t.substr(1, t.size() - 2));
      if (schema.find(section) == schema.end())
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                          section + "]");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = detail::trim(t.substr(0, eq));
    const std::string value = detail::trim(t.substr(eq + 1));
    if (section.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
    const auto& keys = schema.at(section);
    if (keys.find(key) == keys.end())
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key +
                        "' in section [" + section + "]");

    using detail::parse_bool;
    using detail::parse_double;
    using detail::parse_long;
    using detail::parse_u64;
    if (section == "scenario") {
      if (key == "n_satellites") cfg.n_satellites = static_cast<int>(parse_long(key, value));
      else if (key == "telescope_lat_deg") cfg.telescope_lat_deg = parse_double(key, value);
      else if (key == "telescope_lon_deg") cfg.telescope_lon_deg = parse_double(key, value);
      else if (key == "boresight_azimuth_deg") cfg.boresight_azimuth_deg = parse_double(key, value);
      else if (key == "boresight_elevation_deg") cfg.boresight_elevation_deg = parse_double(key, value);
      else if (key == "ground_user_radius_m") cfg.ground_user_radius_m = parse_double(key, value);
      else if (key == "min_elevation_deg") cfg.min_elevation_deg = parse_double(key, value);
      else cfg.independent_uplink_shadowing = parse_bool(key, value);
    } else if (section == "geometry") {
      if (key == "earth_radius_m") cfg.earth_radius_m = parse_double(key, value);
      else cfg.satellite_altitude_m = parse_double(key, value);
    } else if (section == "radio") {
      if (key == "carrier_hz") cfg.radio.carrier_hz = parse_double(key, value);
      else if (key == "bandwidth_hz") cfg.radio.bandwidth_hz = parse_double(key, value);
      else if (key == "sat_psd_dbw_mhz") cfg.radio.sat_psd_dbw_per_mhz = parse_double(key, value);
      else if (key == "beacon_power_w") cfg.radio.beacon_power_w = parse_double(key, value);
      else if (key == "pfd_max_dbw_m2_hz") cfg.radio.pfd_max_dbw_m2_hz = parse_double(key, value);
      else if (key == "sky_temp_k") cfg.radio.sky_temp_k = parse_double(key, value);
      else if (key == "rx_temp_k") cfg.radio.rx_temp_k = parse_double(key, value);
      else if (key == "detection_threshold_db") cfg.radio.detection_threshold_db = parse_double(key, value);
      else cfg.radio.shadowing_sigma_db = parse_double(key, value);
    } else if (section == "antenna") {
      if (key == "telescope_gmax_dbi") cfg.antenna.telescope_gmax_dbi = parse_double(key, value);
      else if (key == "beacon_gmax_dbi") cfg.antenna.beacon_gmax_dbi = parse_double(key, value);
      else if (key == "satellite_gmax_dbi") cfg.antenna.satellite_gmax_dbi = parse_double(key, value);
      else if (key == "satellite_beamwidth_deg") cfg.antenna.satellite_beamwidth_deg = parse_double(key, value);
      else cfg.antenna.null_floor_db = parse_double(key, value);
    } else {  // sweep
      if (key == "policies") {
        cfg.sweep.policies.clear();
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) {
          const std::string name = detail::trim(item);
          if (!name.empty()) cfg.sweep.policies.push_back(detail::parse_family(name));
        }
      } else if (key == "n_trials") cfg.sweep.n_trials = parse_long(key, value);
      else if (key == "master_seed") cfg.sweep.master_seed = parse_u64(key, value);
      else if (key == "workers") cfg.sweep.workers = static_cast<int>(parse_long(key, value));
      else if (key == "fixed_l_m") cfg.sweep.fixed_l_m = parse_double(key, value);
      else if (key == "v_min_m") cfg.sweep.v_min_m = parse_double(key, value);
      else if (key == "v_max_m") cfg.sweep.v_max_m = parse_double(key, value);
      else if (key == "v_steps") cfg.sweep.v_steps = static_cast<int>(parse_long(key, value));
      else if (key == "tau_min_w") cfg.sweep.tau_min_w = parse_double(key, value);
      else if (key == "tau_max_w") cfg.sweep.tau_max_w = parse_double(key, value);
      else if (key == "tau_steps") cfg.sweep.tau_steps = static_cast<int>(parse_long(key, value));
      else if (key == "tb_min_s") cfg.sweep.tb_min_s = parse_double(key, value);
      else if (key == "tb_max_s") cfg.sweep.tb_max_s = parse_double(key, value);
      else cfg.sweep.tb_steps = static_cast<int>(parse_long(key, value));
    }
  }

  validate_config(cfg);
  return cfg;
}

inline void validate_config(const RunConfig& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid config: ") + what);
  };
  require(cfg.n_satellites >= 1, "n_satellites mustceed be >= 1");
  require(cfg.earth_radius_m > 0.0, "earth_radius_m must be positive");
  require(cfg.satellite_altitude_m > 0.0, "satellite_altitude_m must be positive");
  require(cfg.ground_user_radius_m > 0.0, "ground_user_radius_m must be positive");
  require(cfg.min_elevation_deg >= 0.0 && cfg.min_elevation_deg < 90.0,
          "min_elevation_deg must lie in [0, 90)");
  require(cfg.boresight_elevation_deg > 0.0 && cfg.boresight_elevation_deg <= 90.0,
          "boresight_elevation_deg must lie in (0, 90]");
  require(cfg.radio.carrier_hz > 0.0, "carrier_hz must be positive");
  require(cfg.radio.bandwidth_hz > 0.0, "bandwidth_hz must be positive");
  require(cfg.radio.beacon_power_w >= 0.0, "beacon_power_w must be non-negative");
  require(cfg.radio.sky_temp_k >= 0.0 && cfg.radio.rx_temp_k >= 0.0,
          "temperatures must be non-negative");
  require(cfg.radio.shadowing_sigma_db >= 0.0, "shadowing_sigma_db must be non-negative");
  require(cfg.antenna.satellite_beamwidth_deg > 0.0 &&
              cfg.antenna.satellite_beamwidth_deg < 180.0,
          "satellite_beamwidth_deg must lie in (0, 180)");
  require(!cfg.sweep.policies.empty(), "at least one policy required");
  require(cfg.sweep.n_trials >= 1, "n_trials must be >= 1");
  require(cfg.sweep.workers >= 0, "workers must be >= 0");
  require(cfg.sweep.fixed_l_m >= 0.0, "fixed_l_m must be non-negative");
  require(cfg.sweep.v_steps >= 1 && cfg.sweep.tau_steps >= 1 && cfg.sweep.tb_steps >= 1,
          "grid steps must be >= 1");
  require(cfg.sweep.tau_min_w > 0.0 && cfg.sweep.tau_max_w >= cfg.sweep.tau_min_w,
          "tau grid bounds must be positive and ordered");
  require(cfg.sweep.tb_min_s >= 0.0 && cfg.sweep.tb_max_s >= cfg.sweep.tb_min_s,
          "tb grid bounds must be non-negative and ordered");
  require(cfg.resolved_v_min_m() > 0.0 &&
              cfg.resolved_v_max_m() >= cfg.resolved_v_min_m(),
          "V grid bounds must be positive and ordered");
}

inline RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

// Canonical rendering: fixed key order, resolved grid bounds, %.17g numbers.
// The config hash is computed over this text, so formatting and comments in
// the user's file do not perturb it.
inline std::string canonical_dump(const RunConfig& cfg) {
  using detail::fmt_num;
  std::ostringstream o;
  o << "[scenario]\n";
  o << "n_satellites = " << cfg.n_satellites << "\n";
  o << "telescope_lat_deg = " << fmt_num(cfg.telescope_lat_deg) << "\n";
  o << "telescope_lon_deg = " << fmt_num(cfg.telescope_lon_deg) << "\n";
  o << "boresight_azimuth_deg = " << fmt_num(cfg.boresight_azimuth_deg) << "\n";
  o << "boresight_elevation_deg = " << fmt_num(cfg.boresight_elevation_deg) << "\n";
  o << "ground_user_radius_m = " << fmt_num(cfg.ground_user_radius_m) << "\n";
  o << "min_elevation_deg = " << fmt_num(cfg.min_elevation_deg) << "\n";
  o << "independent_uplink_shadowing = "
    << (cfg.independent_uplink_shadowing ? "true" : "false") << "\n";
  o << "[geometry]\n";
  o << "earth_radius_m = " << fmt_num(cfg.earth_radius_m) << "\n";
  o << "satellite_altitude_m = " << fmt_num(cfg.satellite_altitude_m) << "\n";
  o << "[radio]\n";
  o << "carrier_hz = " << fmt_num(cfg.radio.carrier_hz) << "\n";
  o << "bandwidth_hz = " << fmt_num(cfg.radio.bandwidth_hz) << "\n";
  o << "sat_psd_dbw_mhz = " << fmt_num(cfg.radio.sat_psd_dbw_per_mhz) << "\n";
  o << "beacon_power_w = " << fmt_num(cfg.radio.beacon_power_w) << "\n";
  o << "pfd_max_dbw_m2_hz = " << fmt_num(cfg.radio.pfd_max_dbw_m2_hz) << "\n";
  o << "sky_temp_k = " << fmt_num(cfg.radio.sky_temp_k) << "\n";
  o << "rx_temp_k = " << fmt_num(cfg.radio.rx_temp_k) << "\n";
  o << "detection_threshold_db = " << fmt_num(cfg.radio.detection_threshold_db) << "\n";
  o << "shadowing_sigma_db = " << fmt_num(cfg.radio.shadowing_sigma_db) << "\n";
  o << "[antenna]\n";
  o << "telescope_gmax_dbi = " << fmt_num(cfg.antenna.telescope_gmax_dbi) << "\n";
  o << "beacon_gmax_dbi = " << fmt_num(cfg.antenna.beacon_gmax_dbi) << "\n";
  o << "satellite_gmax_dbi = " << fmt_num(cfg.antenna.satellite_gmax_dbi) << "\n";
  o << "satellite_beamwidth_deg = " << fmt_num(cfg.antenna.satellite_beamwidth_deg) << "\n";
  o << "null_floor_db = " << fmt_num(cfg.antenna.null_floor_db) << "\n";
  o << "[sweep]\n";
  o << "policies = ";
  for (std::size_t i = 0; i < cfg.sweep.policies.size(); ++i)
    o << (i ? "," : "") << family_name(cfg.sweep.policies[i]);
  o << "\n";
  o << "n_trials = " << cfg.sweep.n_trials << "\n";
  o << "master_seed = " << cfg.sweep.master_seed << "\n";
  o << "workers = " << cfg.sweep.workers << "\n";
  o << "fixed_l_m = " << fmt_num(cfg.sweep.fixed_l_m) << "\n";
  o << "v_min_m = " << fmt_num(cfg.resolved_v_min_m()) << "\n";
  o << "v_max_m = " << fmt_num(cfg.resolved_v_max_m()) << "\n";
  o << "v_steps = " << cfg.sweep.v_steps << "\n";
  o << "tau_min_w = " << fmt_num(cfg.sweep.tau_min_w) << "\n";
  o << "tau_max_w = " << fmt_num(cfg.sweep.tau_max_w) << "\n";
  o << "tau_steps = " << cfg.sweep.tau_steps << "\n";
  o << "tb_min_s = " << fmt_num(cfg.sweep.tb_min_s) << "\n";
  o << "tb_max_s = " << fmt_num(cfg.sweep.tb_max_s) << "\n";
  o << "tb_steps = " << cfg.sweep.tb_steps << "\n";
  return o.str();
}

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t config_hash(const RunConfig& cfg) {
  return fnv1a64(canonical_dump(cfg));
}

}  // namespace rfisim
