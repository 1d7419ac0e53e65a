#include "swaybeam/channel.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swaybeam {

CVec steering_vector(const ArrayGeometry& array, double angle) {
  assert(array.valid());
  const int n = array.num_elements;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double freq = 2.0 * std::numbers::pi * array.element_spacing * std::cos(angle);
  CVec v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = std::polar(scale, freq * static_cast<double>(i));
  }
  return v;
}

std::vector<std::complex<double>> sample_path_gains(const FadingProfile& profile, int n_a, int n_b,
                                                    RandomStream& rng) {
  const int L = profile.num_paths;
  const double total = static_cast<double>(n_a) * static_cast<double>(n_b) * profile.pathloss;
  const double k = profile.ricean_kappa;
  const double los_var = (L == 1) ? total : total * k / (1.0 + k);
  const double nlos_var = (L == 1) ? 0.0 : total / ((1.0 + k) * static_cast<double>(L - 1));

  std::vector<std::complex<double>> gains(L);
  gains[0] = rng.complex_normal(los_var);
  for (int l = 1; l < L; ++l) {
    gains[l] = rng.complex_normal(nlos_var);
  }
  return gains;
}

std::pair<std::vector<double>, std::vector<double>> sample_nlos_angles(int num_paths,
                                                                       RandomStream& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> aod;
  std::vector<double> aoa;
  aod.reserve(num_paths > 0 ? num_paths - 1 : 0);
  aoa.reserve(aod.capacity());
  for (int l = 1; l < num_paths; ++l) {
    aod.push_back(rng.uniform(0.0, two_pi));
    aoa.push_back(rng.uniform(0.0, two_pi));
  }
  return {std::move(aod), std::move(aoa)};
}

ChannelRealization assemble_channel(const PathSet& paths, const ArrayGeometry& array_a,
                                    const ArrayGeometry& array_b) {
  if (!paths.consistent()) {
    throw std::invalid_argument("assemble_channel: inconsistent path set");
  }
  CMat h = CMat::Zero(array_b.num_elements, array_a.num_elements);
  for (std::size_t l = 0; l < paths.size(); ++l) {
    h.noalias() += paths.gain[l] * steering_vector(array_b, paths.aoa[l]) *
                   steering_vector(array_a, paths.aod[l]).adjoint();
  }
  return {paths, std::move(h)};
}

std::complex<double> effective_gain(const CMat& channel, const CVec& beamformer,
                                    const CVec& combiner) {
  if (channel.cols() != beamformer.size() || channel.rows() != combiner.size()) {
    throw std::invalid_argument("effective_gain: dimension mismatch");
  }
  return combiner.adjoint() * channel * beamformer;
}

std::complex<double> effective_gain(const PathSet& paths, const ArrayGeometry& array_a,
                                    const ArrayGeometry& array_b, const CVec& beamformer,
                                    const CVec& combiner) {
  if (array_a.num_elements != beamformer.size() || array_b.num_elements != combiner.size()) {
    throw std::invalid_argument("effective_gain: dimension mismatch");
  }
  std::complex<double> mu = 0.0;
  for (std::size_t l = 0; l < paths.size(); ++l) {
    const std::complex<double> rx = combiner.adjoint() * steering_vector(array_b, paths.aoa[l]);
    const std::complex<double> tx = steering_vector(array_a, paths.aod[l]).adjoint() * beamformer;
    mu += paths.gain[l] * rx * tx;
  }
  return mu;
}

double received_snr(std::complex<double> mu, double noise_var, double tx_power) {
  assert(noise_var > 0.0);
  return tx_power * std::norm(mu) / noise_var;
}

}  // namespace swaybeam
