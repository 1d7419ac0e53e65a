#pragma once

#include <cstddef>
#include <string>

#include "swaybeam/codebook.hpp"
#include "swaybeam/geometry.hpp"

namespace swaybeam {

enum class MethodVariant {
  NoAction,
  A1Only,
  A1B,
  A1BA2,
  ExhaustiveSearch,
  OptimalBF,
};

const char* variant_name(MethodVariant variant);

// Carried across instants. The "known" poses are what the peer last
// communicated; they are refreshed only by actual coordinate exchanges.
struct ProtocolState {
  std::size_t beam_a = 0;
  std::size_t beam_b = 0;
  NodePose known_b_at_a{};
  NodePose known_a_at_b{};
};

struct LinkParams {
  double tx_power = 1.0;   // p
  double noise_var = 1.0;  // sigma_B^2
  double d1 = 10.0;        // installation distance, meters
};

struct AlignmentTrace {
  bool ran_a1 = false;
  bool ran_b = false;
  bool ran_a2 = false;
  int control_messages = 0;
  double snr = 0.0;  // linear
  bool outage = false;
  bool was_misaligned = false;  // previous beams failed the threshold test
  std::size_t beam_a = 0;
  std::size_t beam_b = 0;
};

// One instant of the position-aided recovery protocol, with the phase set
// limited by the variant (A1Only, A1B or A1BA2). Updates the carried state.
AlignmentTrace run_instant(MethodVariant variant, ProtocolState& state, const NodePose& pose_a,
                           const NodePose& pose_b, const ChannelRealization& chan,
                           const BeamCodebook& codebook_a, const BeamCodebook& codebook_b,
                           double gamma_o, const LinkParams& link);

// Baseline that keeps the installation beams forever.
AlignmentTrace run_no_action(const ProtocolState& installation_state, const ChannelRealization& chan,
                             const BeamCodebook& codebook_a, const BeamCodebook& codebook_b,
                             double gamma_o, const LinkParams& link);

// Baseline that, on misalignment, tests beam pairs in lexicographic grid
// order until one meets gamma_o; each tested pair costs one control message.
// Falls back to the best pair seen and flags outage if none qualifies.
AlignmentTrace run_exhaustive_search(ProtocolState& state, const ChannelRealization& chan,
                                     const BeamCodebook& codebook_a, const BeamCodebook& codebook_b,
                                     double gamma_o, const LinkParams& link);

struct SingularPair {
  CVec combiner;    // principal left singular vector (u)
  CVec beamformer;  // principal right singular vector (v)
  double sigma = 0.0;
};

// Power iteration on H^H H. Throws on a zero matrix or non-convergence.
SingularPair principal_singular_pair(const CMat& channel, double tol, int max_iters);

// Unconstrained upper bound using the principal singular pair.
AlignmentTrace run_optimal_bf(const ChannelRealization& chan, double gamma_o,
                              const LinkParams& link);

}  // namespace swaybeam
