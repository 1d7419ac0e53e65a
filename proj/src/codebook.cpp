#include "swaybeam/codebook.hpp"

#include <stdexcept>

namespace swaybeam {

BeamCodebook build_codebook(const ArrayGeometry& array, double angle_min, double angle_max,
                            int bits) {
  if (bits < 1) {
    throw std::invalid_argument("build_codebook: bits must be >= 1");
  }
  if (!(angle_min < angle_max)) {
    throw std::invalid_argument("build_codebook: angle_min must be < angle_max");
  }
  BeamCodebook cb;
  cb.array = array;
  cb.bits = bits;
  cb.angle_min = angle_min;
  cb.angle_max = angle_max;
  const std::size_t count = (std::size_t{1} << (bits - 1)) + 1;
  const double step = std::ldexp(angle_max - angle_min, 1 - bits);
  cb.angles.reserve(count);
  cb.vectors.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double angle = angle_min + static_cast<double>(k) * step;
    cb.angles.push_back(angle);
    cb.vectors.push_back(steering_vector(array, angle));
  }
  return cb;
}

std::size_t nearest_beam(const BeamCodebook& codebook, const CVec& target) {
  if (codebook.vectors.empty() || codebook.vectors.front().size() != target.size()) {
    throw std::invalid_argument("nearest_beam: target dimension mismatch");
  }
  std::size_t best = 0;
  double best_dist = (codebook.vectors[0] - target).squaredNorm();
  for (std::size_t k = 1; k < codebook.size(); ++k) {
    const double dist = (codebook.vectors[k] - target).squaredNorm();
    if (dist < best_dist) {
      best = k;
      best_dist = dist;
    }
  }
  return best;
}

BeamPair best_codebook_pair(const CMat& channel, const BeamCodebook& codebook_a,
                            const BeamCodebook& codebook_b) {
  if (channel.cols() != codebook_a.array.num_elements ||
      channel.rows() != codebook_b.array.num_elements) {
    throw std::invalid_argument("best_codebook_pair: dimension mismatch");
  }
  BeamPair best{0, 0, -1.0};
  for (std::size_t i = 0; i < codebook_a.size(); ++i) {
    const CVec projected = channel * codebook_a.vectors[i];
    for (std::size_t j = 0; j < codebook_b.size(); ++j) {
      const double gain = std::norm(std::complex<double>(codebook_b.vectors[j].adjoint() * projected));
      if (gain > best.gain) {
        best = {i, j, gain};
      }
    }
  }
  return best;
}

}  // namespace swaybeam
