#include "swaybeam/alignment.hpp"

#include <cmath>
#include <stdexcept>

namespace swaybeam {

namespace {

double pair_snr(const ChannelRealization& chan, const BeamCodebook& cb_a, const BeamCodebook& cb_b,
                std::size_t i, std::size_t j, const LinkParams& link) {
  const auto mu = effective_gain(chan.matrix, cb_a.vectors[i], cb_b.vectors[j]);
  return received_snr(mu, link.noise_var, link.tx_power);
}

}  // namespace

const char* variant_name(MethodVariant variant) {
  switch (variant) {
    case MethodVariant::NoAction: return "no_action";
    case MethodVariant::A1Only: return "a1";
    case MethodVariant::A1B: return "a1b";
    case MethodVariant::A1BA2: return "a1ba2";
    case MethodVariant::ExhaustiveSearch: return "exhaustive";
    case MethodVariant::OptimalBF: return "optimal";
  }
  return "unknown";
}

AlignmentTrace run_instant(MethodVariant variant, ProtocolState& state, const NodePose& pose_a,
                           const NodePose& pose_b, const ChannelRealization& chan,
                           const BeamCodebook& codebook_a, const BeamCodebook& codebook_b,
                           double gamma_o, const LinkParams& link) {
  if (variant != MethodVariant::A1Only && variant != MethodVariant::A1B &&
      variant != MethodVariant::A1BA2) {
    throw std::invalid_argument("run_instant: variant is not a recovery-phase method");
  }

  AlignmentTrace trace;
  const double snr_prev = pair_snr(chan, codebook_a, codebook_b, state.beam_a, state.beam_b, link);
  if (snr_prev >= gamma_o) {
    trace.snr = snr_prev;
    trace.beam_a = state.beam_a;
    trace.beam_b = state.beam_b;
    return trace;
  }
  trace.was_misaligned = true;

  // Recovery phase A1: node A refreshes its own pose and re-steers against
  // node B's last communicated position.
  trace.ran_a1 = true;
  const double aod_stale = estimate_aod(pose_a, state.known_b_at_a, link.d1);
  const std::size_t beam_a1 =
      nearest_beam(codebook_a, steering_vector(codebook_a.array, aod_stale));
  const double snr_a1 = pair_snr(chan, codebook_a, codebook_b, beam_a1, state.beam_b, link);
  if (variant == MethodVariant::A1Only || snr_a1 >= gamma_o) {
    state.beam_a = beam_a1;
    trace.snr = snr_a1;
    trace.outage = snr_a1 < gamma_o;
    trace.beam_a = state.beam_a;
    trace.beam_b = state.beam_b;
    return trace;
  }

  // Recovery phase B: node A sends its coordinates (1 message); node B now
  // holds both fresh poses and re-steers its combiner.
  trace.ran_b = true;
  trace.control_messages = 1;
  state.known_a_at_b = pose_a;
  const double aod_fresh = estimate_aod(pose_a, pose_b, link.d1);
  const double aoa_fresh = estimate_aoa(aod_fresh, pose_a, pose_b);
  const std::size_t beam_b1 =
      nearest_beam(codebook_b, steering_vector(codebook_b.array, aoa_fresh));
  const double snr_b = pair_snr(chan, codebook_a, codebook_b, beam_a1, beam_b1, link);
  if (variant == MethodVariant::A1B || snr_b >= gamma_o) {
    state.beam_a = beam_a1;
    state.beam_b = beam_b1;
    trace.snr = snr_b;
    trace.outage = snr_b < gamma_o;
    trace.beam_a = state.beam_a;
    trace.beam_b = state.beam_b;
    return trace;
  }

  // Recovery phase A2: node B replies with its coordinates (2nd message);
  // node A recomputes the departure angle from both fresh poses.
  trace.ran_a2 = true;
  trace.control_messages = 2;
  state.known_b_at_a = pose_b;
  const std::size_t beam_a2 =
      nearest_beam(codebook_a, steering_vector(codebook_a.array, aod_fresh));
  const double snr_a2 = pair_snr(chan, codebook_a, codebook_b, beam_a2, beam_b1, link);
  state.beam_a = beam_a2;
  state.beam_b = beam_b1;
  trace.snr = snr_a2;
  trace.outage = snr_a2 < gamma_o;
  trace.beam_a = state.beam_a;
  trace.beam_b = state.beam_b;
  return trace;
}

AlignmentTrace run_no_action(const ProtocolState& installation_state, const ChannelRealization& chan,
                             const BeamCodebook& codebook_a, const BeamCodebook& codebook_b,
                             double gamma_o, const LinkParams& link) {
  AlignmentTrace trace;
  trace.beam_a = installation_state.beam_a;
  trace.beam_b = installation_state.beam_b;
  trace.snr =
      pair_snr(chan, codebook_a, codebook_b, installation_state.beam_a, installation_state.beam_b, link);
  trace.outage = trace.snr < gamma_o;
  trace.was_misaligned = trace.outage;
  return trace;
}

AlignmentTrace run_exhaustive_search(ProtocolState& state, const ChannelRealization& chan,
                                     const BeamCodebook& codebook_a, const BeamCodebook& codebook_b,
                                     double gamma_o, const LinkParams& link) {
  AlignmentTrace trace;
  const double snr_prev = pair_snr(chan, codebook_a, codebook_b, state.beam_a, state.beam_b, link);
  if (snr_prev >= gamma_o) {
    trace.snr = snr_prev;
    trace.beam_a = state.beam_a;
    trace.beam_b = state.beam_b;
    return trace;
  }
  trace.was_misaligned = true;

  // Precompute H*f once per transmit beam; each tested pair is then a dot
  // product. Arithmetic matches the per-pair definition to rounding.
  BeamPair best{0, 0, -1.0};
  int messages = 0;
  for (std::size_t i = 0; i < codebook_a.size(); ++i) {
    const CVec projected = chan.matrix * codebook_a.vectors[i];
    for (std::size_t j = 0; j < codebook_b.size(); ++j) {
      ++messages;
      const double gain =
          std::norm(std::complex<double>(codebook_b.vectors[j].adjoint() * projected));
      if (gain > best.gain) {
        best = {i, j, gain};
      }
      const double snr = link.tx_power * gain / link.noise_var;
      if (snr >= gamma_o) {
        state.beam_a = i;
        state.beam_b = j;
        trace.snr = snr;
        trace.control_messages = messages;
        trace.beam_a = i;
        trace.beam_b = j;
        return trace;
      }
    }
  }
  state.beam_a = best.index_a;
  state.beam_b = best.index_b;
  trace.snr = link.tx_power * best.gain / link.noise_var;
  trace.control_messages = messages;
  trace.outage = true;
  trace.beam_a = best.index_a;
  trace.beam_b = best.index_b;
  return trace;
}

SingularPair principal_singular_pair(const CMat& channel, double tol, int max_iters) {
  if (tol <= 0.0) {
    throw std::invalid_argument("principal_singular_pair: tol must be positive");
  }
  const double fro2 = channel.squaredNorm();
  if (fro2 == 0.0) {
    throw std::invalid_argument("principal_singular_pair: zero matrix");
  }

  // Deterministic start: the right-hand basis vector with the largest image.
  Eigen::Index start = 0;
  channel.colwise().squaredNorm().maxCoeff(&start);
  CVec v = CVec::Zero(channel.cols());
  v(start) = 1.0;

  double gain_prev = -1.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    CVec hv = channel * v;
    const double gain = hv.squaredNorm();
    v = channel.adjoint() * hv;
    const double norm = v.norm();
    if (norm == 0.0) {
      throw std::invalid_argument("principal_singular_pair: start vector in null space");
    }
    v /= norm;
    if (gain_prev >= 0.0 && std::abs(gain - gain_prev) <= tol * fro2) {
      CVec image = channel * v;
      SingularPair out;
      out.sigma = image.norm();
      out.beamformer = std::move(v);
      out.combiner = image / out.sigma;
      return out;
    }
    gain_prev = gain;
  }
  throw std::runtime_error("principal_singular_pair: no convergence after " +
                           std::to_string(max_iters) + " iterations");
}

AlignmentTrace run_optimal_bf(const ChannelRealization& chan, double gamma_o,
                              const LinkParams& link) {
  AlignmentTrace trace;
  if (chan.matrix.squaredNorm() == 0.0) {
    trace.snr = 0.0;
    trace.outage = trace.snr < gamma_o;
    return trace;
  }
  const SingularPair pair = principal_singular_pair(chan.matrix, 1e-10, 1000);
  const auto mu = effective_gain(chan.matrix, pair.beamformer, pair.combiner);
  trace.snr = received_snr(mu, link.noise_var, link.tx_power);
  trace.outage = trace.snr < gamma_o;
  return trace;
}

}  // namespace swaybeam
