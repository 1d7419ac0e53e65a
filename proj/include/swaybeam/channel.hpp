#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "swaybeam/rng.hpp"

namespace swaybeam {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

struct ArrayGeometry {
  int num_elements = 1;
  double element_spacing = 0.5;  // in wavelengths

  bool valid() const { return num_elements >= 1 && element_spacing > 0.0; }
};

// Multipath description. Path 0 is the LOS path.
struct PathSet {
  std::vector<double> aod;                      // radians
  std::vector<double> aoa;                      // radians
  std::vector<std::complex<double>> gain;       // alpha_l

  std::size_t size() const { return gain.size(); }
  bool consistent() const { return aod.size() == gain.size() && aoa.size() == gain.size() && !gain.empty(); }
};

struct ChannelRealization {
  PathSet paths;
  CMat matrix;  // N_B x N_A
};

struct FadingProfile {
  double ricean_kappa = 1.0;  // linear
  double pathloss = 1.0;      // linear
  int num_paths = 1;

  bool valid() const { return ricean_kappa > 0.0 && pathloss > 0.0 && num_paths >= 1; }
};

// ULA response, unit Euclidean norm, element modulus 1/sqrt(N).
CVec steering_vector(const ArrayGeometry& array, double angle);

// Complex Gaussian path gains with total mean power nA*nB*pathloss, split
// kappa/(1+kappa) to the LOS path and the remainder equally over NLOS paths.
// With a single path the LOS gain takes the full power.
std::vector<std::complex<double>> sample_path_gains(const FadingProfile& profile, int n_a, int n_b,
                                                    RandomStream& rng);

// NLOS departure/arrival angles for paths 2..L, i.i.d. uniform on [0, 2*pi).
std::pair<std::vector<double>, std::vector<double>> sample_nlos_angles(int num_paths,
                                                                       RandomStream& rng);

ChannelRealization assemble_channel(const PathSet& paths, const ArrayGeometry& array_a,
                                    const ArrayGeometry& array_b);

// Post-beamforming complex gain u^H H v. Throws on dimension mismatch.
std::complex<double> effective_gain(const CMat& channel, const CVec& beamformer,
                                    const CVec& combiner);

// Same quantity evaluated as the sum over paths.
std::complex<double> effective_gain(const PathSet& paths, const ArrayGeometry& array_a,
                                    const ArrayGeometry& array_b, const CVec& beamformer,
                                    const CVec& combiner);

// Instantaneous SNR gamma = p * |mu|^2 / sigma^2.
double received_snr(std::complex<double> mu, double noise_var, double tx_power);

}  // namespace swaybeam
