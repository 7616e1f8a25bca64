// montecarlo.hpp - trial orchestration and outage/active-fraction sweeps.
//
// All policies and all grid points share each trial's snapshot (common
// random numbers), so per-trial comparisons between policies carry no
// sampling noise. Trials are reduced block-wise in a fixed order, which
// makes every estimate byte-identical for any worker count.
#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rfisim/policy.hpp"
#include "rfisim/scenario.hpp"

namespace rfisim {

enum class PolicyFamily { fixed_qz, dynamic_qz, beacon, genie };

inline const char* family_name(PolicyFamily f) {
  switch (f) {
    case PolicyFamily::fixed_qz: return "fixed";
    case PolicyFamily::dynamic_qz: return "dynamic";
    case PolicyFamily::beacon: return "beacon";
    case PolicyFamily::genie: return "genie";
  }
  return "?";
}

struct PolicyOutcome {
  double aggregate_rfi_w = 0.0;
  bool outage = false;
  int active_count = 0;
};

struct TrialResult {
  int m_inview = 0;
  std::vector<PolicyOutcome> per_policy;
};

// One stationary draw evaluated under every requested policy.
inline TrialResult run_trial(const ScenarioConfig& config, const DerivedBudget& budget,
                             const std::vector<PolicySpec>& policies,
                             std::uint64_t master_seed, std::uint64_t trial_index) {
  RandomStream rng = RandomStream::substream(master_seed, trial_index);
  const Snapshot snap = build_snapshot(rng, config);
  TrialResult result;
  result.m_inview = static_cast<int>(snap.in_view_count());
  result.per_policy.reserve(policies.size());
  for (const PolicySpec& p : policies) {
    PolicyDecision d = apply_policy(snap, config.geometry, p, budget);
    const int actives =
        static_cast<int>(std::count(d.active.begin(), d.active.end(), char(1)));
    result.per_policy.push_back({d.aggregate_rfi_w, d.outage, actives});
  }
  return result;
}

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// 95% Wilson score interval for a binomial proportion.
inline WilsonInterval wilson95(long successes, long trials) {
  if (trials < 1) throw std::domain_error("wilson95 requires trials >= 1");
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (p + 0.5 * z2n) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct PolicySweep {
  PolicyFamily family = PolicyFamily::genie;
  std::vector<double> grid;  // V [m] / tau [W] / T_b [s]; ignored for genie
};

struct SweepSpec {
  ScenarioConfig scenario;
  std::vector<PolicySweep> policies;
  double fixed_ground_l_m = 50e3;  // L, shared by every fixed-QZ grid point
  long n_trials = 100000;
  std::uint64_t master_seed = 1;
  int n_workers = 0;  // 0 = hardware concurrency
};

struct SweepRecord {
  PolicyFamily family = PolicyFamily::genie;
  double param = 0.0;
  double outage_mean = 0.0;
  double outage_lo = 0.0;
  double outage_hi = 0.0;
  bool has_active_fraction = false;  // false when every trial had M = 0
  double active_fraction_mean = 0.0;
  long n_trials = 0;
  std::uint64_t seed = 0;
};

inline std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw std::domain_error("grid needs at least one step");
  if (steps == 1) return {hi};
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i)
    g[i] = lo + (hi - lo) * (static_cast<double>(i) / (steps - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

inline std::vector<double> log_grid(double lo, double hi, int steps) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw std::domain_error("log grid needs positive bounds");
  if (steps < 1) throw std::domain_error("grid needs at least one step");
  if (steps == 1) return {hi};
  std::vector<double> g(steps);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < steps; ++i)
    g[i] = std::exp(llo + (lhi - llo) * (static_cast<double>(i) / (steps - 1)));
  g.front() = lo;
  g.back() = hi;
  return g;
}

// Outage probability and mean active fraction for every policy grid point.
// Returns one vector of records per requested policy family, in grid order.
inline std::vector<std::vector<SweepRecord>> estimate(const SweepSpec& spec) {
  if (spec.n_trials < 1) throw std::domain_error("n_trials must be >= 1");
  if (spec.policies.empty()) throw std::domain_error("no policies requested");

  const DerivedBudget budget = DerivedBudget::derive(
      spec.scenario.radio, spec.scenario.telescope_pattern.peak_dbi());

  struct FlatPolicy {
    PolicySpec policy;
    std::size_t family_idx;
    double param;
  };
  std::vector<FlatPolicy> flat;
  for (std::size_t f = 0; f < spec.policies.size(); ++f) {
    const PolicySweep& sweep = spec.policies[f];
    switch (sweep.family) {
      case PolicyFamily::fixed_qz:
        for (double v : sweep.grid)
          flat.push_back({FixedQzSpec{spec.fixed_ground_l_m, v}, f, v});
        break;
      case PolicyFamily::dynamic_qz:
        for (double tau : sweep.grid) flat.push_back({DynamicQzSpec{tau}, f, tau});
        break;
      case PolicyFamily::beacon:
        for (double tb : sweep.grid)
          flat.push_back({BeaconSpec{spec.scenario.radio.beacon_power_w, tb,
                                     spec.scenario.radio.detection_threshold_db},
                          f, tb});
        break;
      case PolicyFamily::genie:
        flat.push_back({GenieSpec{}, f, budget.rfi_max_w});
        break;
    }
    if (sweep.family != PolicyFamily::genie && sweep.grid.empty())
      throw std::domain_error("empty parameter grid");
  }

  struct Accum {
    long outage = 0;
    double fraction_sum = 0.0;
    long fraction_trials = 0;
  };

  constexpr long kBlock = 256;  // fixed block size keeps reductions ordered
  const long n_blocks = (spec.n_trials + kBlock - 1) / kBlock;
  std::vector<std::vector<Accum>> blocks(static_cast<std::size_t>(n_blocks));

  unsigned workers = spec.n_workers > 0
                         ? static_cast<unsigned>(spec.n_workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n_blocks));

  std::atomic<long> next_block{0};
  auto worker_loop = [&]() {
    for (;;) {
      const long b = next_block.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) return;
      std::vector<Accum>& acc = blocks[static_cast<std::size_t>(b)];
      acc.assign(flat.size(), Accum{});
      const long t_lo = b * kBlock;
      const long t_hi = std::min(spec.n_trials, t_lo + kBlock);
      for (long t = t_lo; t < t_hi; ++t) {
        RandomStream rng =
            RandomStream::substream(spec.master_seed, static_cast<std::uint64_t>(t));
        const Snapshot snap = build_snapshot(rng, spec.scenario);
        const bool has_links = !snap.links.empty();
        for (std::size_t p = 0; p < flat.size(); ++p) {
          const PolicyDecision d =
              apply_policy(snap, spec.scenario.geometry, flat[p].policy, budget);
          acc[p].outage += d.outage ? 1 : 0;
          if (has_links) {
            acc[p].fraction_sum += d.active_fraction;
            acc[p].fraction_trials += 1;
          }
        }
      }
    }
  };

  if (workers <= 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_loop);
    for (std::thread& th : pool) th.join();
  }

  std::vector<Accum> total(flat.size());
  for (const std::vector<Accum>& acc : blocks)
    for (std::size_t p = 0; p < flat.size(); ++p) {
      total[p].outage += acc[p].outage;
      total[p].fraction_sum += acc[p].fraction_sum;
      total[p].fraction_trials += acc[p].fraction_trials;
    }

  std::vector<std::vector<SweepRecord>> out(spec.policies.size());
  for (std::size_t p = 0; p < flat.size(); ++p) {
    SweepRecord rec;
    rec.family = spec.policies[flat[p].family_idx].family;
    rec.param = flat[p].param;
    rec.outage_mean = static_cast<double>(total[p].outage) / spec.n_trials;
    const WilsonInterval ci = wilson95(total[p].outage, spec.n_trials);
    rec.outage_lo = ci.lo;
    rec.outage_hi = ci.hi;
    rec.has_active_fraction = total[p].fraction_trials > 0;
    if (rec.has_active_fraction)
      rec.active_fraction_mean = total[p].fraction_sum / total[p].fraction_trials;
    rec.n_trials = spec.n_trials;
    rec.seed = spec.master_seed;
    out[flat[p].family_idx].push_back(rec);
  }
  return out;
}

// The trade-off view of estimate(): records in grid order per policy, so
// (active_fraction_mean, outage_mean) traces each policy's curve.
inline std::vector<std::vector<SweepRecord>> sweep_outage_vs_active(const SweepSpec& spec) {
  return estimate(spec);
}

}  // namespace rfisim
