#pragma once

#include <cstdint>
#include <vector>

#include "swaybeam/alignment.hpp"

namespace swaybeam {

// All physical, codebook, protocol and sweep parameters. Defaults reproduce
// the reference experiment: 16-element arrays, 5-bit codebooks over the two
// facing 60-degree sectors, 3-path Ricean channel, 1.5 m sway, 10^4 trials.
struct SimulationConfig {
  double d1 = 10.0;                 // meters
  double pathloss_exponent = 3.75;
  int num_trials = 10000;
  int num_paths = 3;
  double kappa_db = 13.2;
  int n_a = 16;
  int n_b = 16;
  int q_bits = 5;
  double element_spacing = 0.5;     // wavelengths
  double sector_a_min_deg = 60.0;
  double sector_a_max_deg = 120.0;
  double sector_b_min_deg = 240.0;
  double sector_b_max_deg = 300.0;
  DisplacementBounds sway_a{1.5, 1.5, 1.5, 1.5};
  DisplacementBounds sway_b{1.5, 1.5, 1.5, 1.5};
  double tx_snr_db = 5.0;           // p / sigma_B^2
  std::vector<double> gamma_o_db = {-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::uint64_t seed = 1;
  std::vector<MethodVariant> variants = {
      MethodVariant::NoAction,  MethodVariant::A1Only,           MethodVariant::A1B,
      MethodVariant::A1BA2,     MethodVariant::ExhaustiveSearch, MethodVariant::OptimalBF,
  };
  int num_workers = 0;  // 0 = hardware concurrency

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  double kappa_linear() const;
  double pathloss() const;   // d1^(-exponent)
  double tx_power() const;   // with noise_var normalized to 1
  LinkParams link() const;
  ArrayGeometry array_a() const { return {n_a, element_spacing}; }
  ArrayGeometry array_b() const { return {n_b, element_spacing}; }
};

struct TrialRealization {
  NodePose pose_a;
  NodePose pose_b;
  ChannelRealization chan;
};

// Everything random about one instant, derived deterministically from
// (seed, trial_index).
TrialRealization synthesize_trial(const SimulationConfig& cfg, std::uint64_t trial_index);

// One record per (variant, gamma_o) lane.
struct LaneOutcome {
  double snr = 0.0;
  int control_messages = 0;
  bool outage = false;
  bool was_misaligned = false;
};

struct TrialResult {
  // Indexed [variant][gamma_o] following the config ordering.
  std::vector<std::vector<LaneOutcome>> lanes;
};

// Carried protocol state, one per (variant, gamma_o) lane. The protocol's
// control flow branches on gamma_o, so each threshold evolves its own chain
// over the shared channel realizations.
struct LaneStates {
  std::vector<std::vector<ProtocolState>> states;  // [variant][gamma_o]

  static LaneStates initial(const SimulationConfig& cfg, const BeamCodebook& codebook_a,
                            const BeamCodebook& codebook_b);
};

// Installation state: boresight beams, nominal (zero-displacement) poses.
ProtocolState installation_state(const SimulationConfig& cfg, const BeamCodebook& codebook_a,
                                 const BeamCodebook& codebook_b);

TrialResult run_trial(const SimulationConfig& cfg, std::uint64_t trial_index, LaneStates& states,
                      const BeamCodebook& codebook_a, const BeamCodebook& codebook_b);

struct LaneMetrics {
  double outage_probability = 0.0;
  double mean_snr = 0.0;            // linear
  double mean_messages = 0.0;       // over all instants
  double cond_mean_messages = 0.0;  // over misaligned instants; NaN if none
  int max_messages = 0;
  double snr_ratio = 0.0;           // mean SNR / mean OptimalBF SNR; NaN without OptimalBF
};

struct AggregateMetrics {
  std::vector<double> gamma_o_db;
  std::vector<MethodVariant> variants;
  std::vector<std::vector<LaneMetrics>> lanes;  // [variant][gamma_o]

  const LaneMetrics& at(MethodVariant variant, double gamma_db) const;
};

AggregateMetrics aggregate(const std::vector<TrialResult>& results, const SimulationConfig& cfg);

// Full deterministic run: trials laid out per (variant, gamma_o) lane,
// executed by a worker pool. The result does not depend on the worker count.
AggregateMetrics run_simulation(const SimulationConfig& cfg);

}  // namespace swaybeam
