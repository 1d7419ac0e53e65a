#include "swaybeam/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace swaybeam {

namespace {

constexpr double kPi = std::numbers::pi;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

LaneOutcome to_outcome(const AlignmentTrace& trace) {
  return {trace.snr, trace.control_messages, trace.outage, trace.was_misaligned};
}

// One protocol step of one (variant, gamma_o) lane on a shared realization.
LaneOutcome run_lane_step(const SimulationConfig& cfg, MethodVariant variant, double gamma_o,
                          const TrialRealization& trial, ProtocolState& state,
                          const ProtocolState& installation, const BeamCodebook& codebook_a,
                          const BeamCodebook& codebook_b) {
  const LinkParams link = cfg.link();
  switch (variant) {
    case MethodVariant::NoAction:
      return to_outcome(run_no_action(installation, trial.chan, codebook_a, codebook_b, gamma_o, link));
    case MethodVariant::ExhaustiveSearch:
      return to_outcome(
          run_exhaustive_search(state, trial.chan, codebook_a, codebook_b, gamma_o, link));
    case MethodVariant::OptimalBF:
      return to_outcome(run_optimal_bf(trial.chan, gamma_o, link));
    default:
      return to_outcome(run_instant(variant, state, trial.pose_a, trial.pose_b, trial.chan,
                                    codebook_a, codebook_b, gamma_o, link));
  }
}

}  // namespace

void SimulationConfig::validate() const {
  require(d1 > 0.0, "d1 must be positive");
  require(pathloss_exponent > 0.0, "pathloss_exponent must be positive");
  require(num_trials >= 1, "num_trials must be >= 1");
  require(num_paths >= 1, "num_paths must be >= 1");
  require(n_a >= 1, "n_a must be >= 1");
  require(n_b >= 1, "n_b must be >= 1");
  require(q_bits >= 1, "q_bits must be >= 1");
  require(q_bits <= 24, "q_bits must be <= 24");
  require(element_spacing > 0.0, "element_spacing must be positive");
  require(sector_a_min_deg < sector_a_max_deg, "sector_a_deg must satisfy min < max");
  require(sector_b_min_deg < sector_b_max_deg, "sector_b_deg must satisfy min < max");
  require(sway_a.valid(), "sway_a_m bounds must be >= 0");
  require(sway_b.valid(), "sway_b_m bounds must be >= 0");
  require(!gamma_o_db.empty(), "gamma_o_sweep_db must be non-empty");
  require(!variants.empty(), "variants must be non-empty");
  require(num_workers >= 0, "workers must be >= 0");
  require(d1 - sway_a.y_north - sway_b.y_north > 0.0,
          "sway_a_m/sway_b_m: y bounds must keep the nodes separated (y_north sums below d1)");
}

double SimulationConfig::kappa_linear() const { return std::pow(10.0, kappa_db / 10.0); }

double SimulationConfig::pathloss() const { return std::pow(d1, -pathloss_exponent); }

double SimulationConfig::tx_power() const { return db_to_linear(tx_snr_db); }

LinkParams SimulationConfig::link() const { return {tx_power(), 1.0, d1}; }

TrialRealization synthesize_trial(const SimulationConfig& cfg, std::uint64_t trial_index) {
  RandomStream rng = RandomStream::for_trial(cfg.seed, trial_index);

  const auto [dx_a, dy_a] = sample_displacement(cfg.sway_a, rng);
  const auto [dx_b, dy_b] = sample_displacement(cfg.sway_b, rng);
  TrialRealization trial;
  trial.pose_a = NodePose::node_a(dx_a, dy_a);
  trial.pose_b = NodePose::node_b(dx_b, dy_b, cfg.d1);

  const LosAngleEstimate los = true_los_angles(trial.pose_a, trial.pose_b, cfg.d1);
  auto [nlos_aod, nlos_aoa] = sample_nlos_angles(cfg.num_paths, rng);

  PathSet paths;
  paths.aod.push_back(los.aod);
  paths.aoa.push_back(los.aoa);
  paths.aod.insert(paths.aod.end(), nlos_aod.begin(), nlos_aod.end());
  paths.aoa.insert(paths.aoa.end(), nlos_aoa.begin(), nlos_aoa.end());

  const FadingProfile profile{cfg.kappa_linear(), cfg.pathloss(), cfg.num_paths};
  paths.gain = sample_path_gains(profile, cfg.n_a, cfg.n_b, rng);

  trial.chan = assemble_channel(paths, cfg.array_a(), cfg.array_b());
  return trial;
}

ProtocolState installation_state(const SimulationConfig& cfg, const BeamCodebook& codebook_a,
                                 const BeamCodebook& codebook_b) {
  ProtocolState state;
  state.beam_a = nearest_beam(codebook_a, steering_vector(cfg.array_a(), kPi / 2.0));
  state.beam_b = nearest_beam(codebook_b, steering_vector(cfg.array_b(), 3.0 * kPi / 2.0));
  state.known_b_at_a = NodePose::node_b(0.0, 0.0, cfg.d1);
  state.known_a_at_b = NodePose::node_a(0.0, 0.0);
  return state;
}

LaneStates LaneStates::initial(const SimulationConfig& cfg, const BeamCodebook& codebook_a,
                               const BeamCodebook& codebook_b) {
  LaneStates out;
  const ProtocolState base = installation_state(cfg, codebook_a, codebook_b);
  out.states.assign(cfg.variants.size(),
                    std::vector<ProtocolState>(cfg.gamma_o_db.size(), base));
  return out;
}

TrialResult run_trial(const SimulationConfig& cfg, std::uint64_t trial_index, LaneStates& states,
                      const BeamCodebook& codebook_a, const BeamCodebook& codebook_b) {
  const TrialRealization trial = synthesize_trial(cfg, trial_index);
  const ProtocolState installation = installation_state(cfg, codebook_a, codebook_b);

  TrialResult result;
  result.lanes.assign(cfg.variants.size(), std::vector<LaneOutcome>(cfg.gamma_o_db.size()));
  for (std::size_t vi = 0; vi < cfg.variants.size(); ++vi) {
    for (std::size_t gi = 0; gi < cfg.gamma_o_db.size(); ++gi) {
      result.lanes[vi][gi] =
          run_lane_step(cfg, cfg.variants[vi], db_to_linear(cfg.gamma_o_db[gi]), trial,
                        states.states[vi][gi], installation, codebook_a, codebook_b);
    }
  }
  return result;
}

AggregateMetrics aggregate(const std::vector<TrialResult>& results, const SimulationConfig& cfg) {
  if (results.empty()) {
    throw std::invalid_argument("aggregate: empty result list");
  }
  const std::size_t nv = cfg.variants.size();
  const std::size_t ng = cfg.gamma_o_db.size();
  const double n = static_cast<double>(results.size());

  AggregateMetrics metrics;
  metrics.gamma_o_db = cfg.gamma_o_db;
  metrics.variants = cfg.variants;
  metrics.lanes.assign(nv, std::vector<LaneMetrics>(ng));

  for (std::size_t vi = 0; vi < nv; ++vi) {
    for (std::size_t gi = 0; gi < ng; ++gi) {
      double snr_sum = 0.0;
      double msg_sum = 0.0;
      double cond_msg_sum = 0.0;
      std::size_t outages = 0;
      std::size_t misaligned = 0;
      int max_msgs = 0;
      for (const TrialResult& r : results) {
        const LaneOutcome& o = r.lanes[vi][gi];
        snr_sum += o.snr;
        msg_sum += o.control_messages;
        outages += o.outage ? 1 : 0;
        if (o.was_misaligned) {
          ++misaligned;
          cond_msg_sum += o.control_messages;
        }
        max_msgs = std::max(max_msgs, o.control_messages);
      }
      LaneMetrics& m = metrics.lanes[vi][gi];
      m.outage_probability = static_cast<double>(outages) / n;
      m.mean_snr = snr_sum / n;
      m.mean_messages = msg_sum / n;
      m.cond_mean_messages = misaligned > 0 ? cond_msg_sum / static_cast<double>(misaligned)
                                            : std::numeric_limits<double>::quiet_NaN();
      m.max_messages = max_msgs;
    }
  }

  std::ptrdiff_t opt = -1;
  for (std::size_t vi = 0; vi < nv; ++vi) {
    if (cfg.variants[vi] == MethodVariant::OptimalBF) opt = static_cast<std::ptrdiff_t>(vi);
  }
  for (std::size_t vi = 0; vi < nv; ++vi) {
    for (std::size_t gi = 0; gi < ng; ++gi) {
      metrics.lanes[vi][gi].snr_ratio =
          opt >= 0 ? metrics.lanes[vi][gi].mean_snr / metrics.lanes[opt][gi].mean_snr
                   : std::numeric_limits<double>::quiet_NaN();
    }
  }
  return metrics;
}

const LaneMetrics& AggregateMetrics::at(MethodVariant variant, double gamma_db) const {
  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    if (variants[vi] != variant) continue;
    for (std::size_t gi = 0; gi < gamma_o_db.size(); ++gi) {
      if (std::abs(gamma_o_db[gi] - gamma_db) < 1e-9) return lanes[vi][gi];
    }
  }
  throw std::out_of_range("AggregateMetrics::at: no such variant/threshold lane");
}

AggregateMetrics run_simulation(const SimulationConfig& cfg) {
  cfg.validate();

  const BeamCodebook codebook_a = build_codebook(
      cfg.array_a(), cfg.sector_a_min_deg * kPi / 180.0, cfg.sector_a_max_deg * kPi / 180.0,
      cfg.q_bits);
  const BeamCodebook codebook_b = build_codebook(
      cfg.array_b(), cfg.sector_b_min_deg * kPi / 180.0, cfg.sector_b_max_deg * kPi / 180.0,
      cfg.q_bits);
  const ProtocolState installation = installation_state(cfg, codebook_a, codebook_b);

  const std::size_t n_trials = static_cast<std::size_t>(cfg.num_trials);
  unsigned workers = cfg.num_workers > 0 ? static_cast<unsigned>(cfg.num_workers)
                                         : std::max(1u, std::thread::hardware_concurrency());

  // Channel realizations are shared read-only by every lane.
  std::vector<TrialRealization> trials(n_trials);
  {
    std::atomic<std::size_t> next{0};
    auto synth = [&] {
      for (std::size_t t = next.fetch_add(1); t < n_trials; t = next.fetch_add(1)) {
        trials[t] = synthesize_trial(cfg, t);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(synth);
    synth();
    for (auto& th : pool) th.join();
  }

  std::vector<TrialResult> results(n_trials);
  for (auto& r : results) {
    r.lanes.assign(cfg.variants.size(), std::vector<LaneOutcome>(cfg.gamma_o_db.size()));
  }

  // Each (variant, gamma_o) lane walks the trials in order with its own
  // carried state; lanes are independent, so the schedule cannot change any
  // outcome.
  const std::size_t n_lanes = cfg.variants.size() * cfg.gamma_o_db.size();
  {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t lane = next.fetch_add(1); lane < n_lanes; lane = next.fetch_add(1)) {
        const std::size_t vi = lane / cfg.gamma_o_db.size();
        const std::size_t gi = lane % cfg.gamma_o_db.size();
        const double gamma_o = db_to_linear(cfg.gamma_o_db[gi]);
        ProtocolState state = installation;
        for (std::size_t t = 0; t < n_trials; ++t) {
          results[t].lanes[vi][gi] = run_lane_step(cfg, cfg.variants[vi], gamma_o, trials[t],
                                                   state, installation, codebook_a, codebook_b);
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }

  return aggregate(results, cfg);
}

}  // namespace swaybeam
