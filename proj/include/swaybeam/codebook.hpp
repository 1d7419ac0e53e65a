#pragma once

#include <cstddef>
#include <vector>

#include "swaybeam/channel.hpp"

namespace swaybeam {

// Analog beam codebook: steering vectors on a uniform angle grid over one
// sector, both endpoints included. With q quantization bits the grid step is
// 2^(1-q) * (angle_max - angle_min), giving 2^(q-1) + 1 entries.
struct BeamCodebook {
  ArrayGeometry array{};
  std::vector<double> angles;  // radians, ascending
  std::vector<CVec> vectors;   // unit-norm, one per angle
  int bits = 1;
  double angle_min = 0.0;
  double angle_max = 0.0;

  std::size_t size() const { return vectors.size(); }
};

BeamCodebook build_codebook(const ArrayGeometry& array, double angle_min, double angle_max,
                            int bits);

// Index of the codebook entry closest to the target in squared Euclidean
// distance; ties go to the lowest index.
std::size_t nearest_beam(const BeamCodebook& codebook, const CVec& target);

struct BeamPair {
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  double gain = 0.0;  // |z^H H f|^2
};

// Exhaustive maximization of |z^H H f|^2 over both codebooks; ties go to the
// lexicographically lowest (f, z) pair.
BeamPair best_codebook_pair(const CMat& channel, const BeamCodebook& codebook_a,
                            const BeamCodebook& codebook_b);

}  // namespace swaybeam
