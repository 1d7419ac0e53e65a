#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "swaybeam/channel.hpp"

using namespace swaybeam;

namespace {
constexpr double kPi = std::numbers::pi;

PathSet random_paths(int L, int seed) {
  RandomStream rng(seed);
  PathSet p;
  for (int l = 0; l < L; ++l) {
    p.aod.push_back(rng.uniform(0, 2 * kPi));
    p.aoa.push_back(rng.uniform(0, 2 * kPi));
    p.gain.push_back(rng.complex_normal(1.0));
  }
  return p;
}
}  // namespace

TEST_CASE("steering vector basics") {
  CHECK(steering_vector({1, 0.5}, 1.234)(0) == std::complex<double>(1.0, 0.0));

  const CVec broadside = steering_vector({16, 0.5}, kPi / 2);
  for (int i = 0; i < 16; ++i) {
    CHECK(broadside(i).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(broadside(i).imag() == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("steering vectors have unit norm and constant element modulus") {
  RandomStream rng(3);
  for (int n : {1, 2, 7, 16, 64}) {
    for (int i = 0; i < 20; ++i) {
      const CVec v = steering_vector({n, 0.5}, rng.uniform(0, 2 * kPi));
      CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-13));
      for (int k = 0; k < n; ++k) {
        CHECK(std::norm(v(k)) == doctest::Approx(1.0 / n).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("steering vectors separated by a DFT bin are orthogonal") {
  const ArrayGeometry arr{16, 0.5};
  const double phi1 = kPi / 2;                  // cos = 0
  const double phi2 = std::acos(2.0 / 16.0);    // cos difference of one bin
  const std::complex<double> ip = steering_vector(arr, phi1).adjoint() * steering_vector(arr, phi2);
  CHECK(std::abs(ip) < 1e-12);
}

TEST_CASE("path gains split power by the Ricean factor") {
  const double kappa = std::pow(10.0, 1.32);
  const FadingProfile profile{kappa, std::pow(10.0, -3.75), 3};
  RandomStream rng(17);
  const int n = 100000;
  double los_power = 0.0, nlos_power = 0.0, total = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto g = sample_path_gains(profile, 16, 16, rng);
    REQUIRE(g.size() == 3);
    los_power += std::norm(g[0]);
    nlos_power += std::norm(g[1]) + std::norm(g[2]);
    total += std::norm(g[0]) + std::norm(g[1]) + std::norm(g[2]);
  }
  const double ratio = los_power / nlos_power;
  CHECK(ratio == doctest::Approx(kappa).epsilon(0.05));
  CHECK(total / n == doctest::Approx(256.0 * std::pow(10.0, -3.75)).epsilon(0.02));
}

TEST_CASE("huge kappa drives NLOS power to zero") {
  const FadingProfile profile{1e9, 1.0, 3};
  RandomStream rng(4);
  double nlos = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = sample_path_gains(profile, 4, 4, rng);
    nlos += std::norm(g[1]) + std::norm(g[2]);
  }
  CHECK(nlos / 1000 < 1e-6);
}

TEST_CASE("single-path profile takes the full power") {
  const FadingProfile profile{10.0, 1.0, 1};
  RandomStream rng(9);
  double total = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    total += std::norm(sample_path_gains(profile, 2, 3, rng)[0]);
  }
  CHECK(total / n == doctest::Approx(6.0).epsilon(0.02));
}

TEST_CASE("NLOS angles are empty for L=1 and uniform otherwise") {
  RandomStream rng(21);
  const auto [e1, e2] = sample_nlos_angles(1, rng);
  CHECK(e1.empty());
  CHECK(e2.empty());

  // Kolmogorov-Smirnov against U(0, 2*pi), 1% critical value 1.63/sqrt(n)
  std::vector<double> samples;
  for (int i = 0; i < 50000; ++i) {
    const auto [aod, aoa] = sample_nlos_angles(3, rng);
    samples.insert(samples.end(), aod.begin(), aod.end());
  }
  std::sort(samples.begin(), samples.end());
  double ks = 0.0;
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = samples[i] / (2 * kPi);
    ks = std::max(ks, std::abs(cdf - (i + 1) / n));
    ks = std::max(ks, std::abs(cdf - i / n));
  }
  CHECK(ks < 1.63 / std::sqrt(n));
}

TEST_CASE("NLOS angles are reproducible for a fixed seed") {
  RandomStream r1(8), r2(8);
  const auto a = sample_nlos_angles(4, r1);
  const auto b = sample_nlos_angles(4, r2);
  CHECK(a == b);
}

TEST_CASE("assemble_channel trivial and triple-product forms") {
  PathSet one;
  one.aod = {0.3};
  one.aoa = {1.1};
  one.gain = {1.0};
  const ChannelRealization tiny = assemble_channel(one, {1, 0.5}, {1, 0.5});
  CHECK(tiny.matrix(0, 0) == std::complex<double>(1.0, 0.0));

  // random L=2 case against the explicit A_B diag{a} A_A^H product
  const PathSet p = random_paths(2, 33);
  const ArrayGeometry arr_a{5, 0.5}, arr_b{4, 0.5};
  const ChannelRealization chan = assemble_channel(p, arr_a, arr_b);
  CMat basis_a(5, 2), basis_b(4, 2);
  for (int l = 0; l < 2; ++l) {
    basis_a.col(l) = steering_vector(arr_a, p.aod[l]);
    basis_b.col(l) = steering_vector(arr_b, p.aoa[l]);
  }
  Eigen::Vector2cd gains(p.gain[0], p.gain[1]);
  const CMat reference = basis_b * gains.asDiagonal() * basis_a.adjoint();
  CHECK((chan.matrix - reference).norm() < 1e-12);
}

TEST_CASE("channel Frobenius energy matches the path-power sum statistically") {
  const FadingProfile profile{std::pow(10.0, 1.32), 1.0, 3};
  RandomStream rng(55);
  const ArrayGeometry arr{8, 0.5};
  double fro = 0.0, paths_power = 0.0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    PathSet p;
    auto [aod, aoa] = sample_nlos_angles(3, rng);
    p.aod = {rng.uniform(0, 2 * kPi)};
    p.aoa = {rng.uniform(0, 2 * kPi)};
    p.aod.insert(p.aod.end(), aod.begin(), aod.end());
    p.aoa.insert(p.aoa.end(), aoa.begin(), aoa.end());
    p.gain = sample_path_gains(profile, 8, 8, rng);
    fro += assemble_channel(p, arr, arr).matrix.squaredNorm();
    for (const auto& g : p.gain) paths_power += std::norm(g);
  }
  // cross terms average out: E||H||_F^2 == E sum |alpha_l|^2
  CHECK(fro / n == doctest::Approx(paths_power / n).epsilon(0.05));
}

TEST_CASE("effective gain: two evaluation routes agree") {
  RandomStream rng(77);
  const ArrayGeometry arr{4, 0.5};
  for (int i = 0; i < 200; ++i) {
    const PathSet p = random_paths(3, 1000 + i);
    const ChannelRealization chan = assemble_channel(p, arr, arr);
    const CVec v = steering_vector(arr, rng.uniform(0, 2 * kPi));
    const CVec u = steering_vector(arr, rng.uniform(0, 2 * kPi));
    const auto mu_mat = effective_gain(chan.matrix, v, u);
    const auto mu_path = effective_gain(p, arr, arr, v, u);
    CHECK(std::abs(mu_mat - mu_path) < 1e-12);
  }
}

TEST_CASE("effective gain reduces to the LOS gain for exact beams") {
  PathSet p;
  p.aod = {1.3};
  p.aoa = {4.2};
  p.gain = {{0.4, -0.9}};
  const ArrayGeometry arr{16, 0.5};
  const ChannelRealization chan = assemble_channel(p, arr, arr);
  const auto mu = effective_gain(chan.matrix, steering_vector(arr, 1.3), steering_vector(arr, 4.2));
  CHECK(std::abs(mu - p.gain[0]) < 1e-13);
}

TEST_CASE("effective gain rejects mismatched dimensions") {
  const ChannelRealization chan = assemble_channel(random_paths(1, 2), {4, 0.5}, {4, 0.5});
  CHECK_THROWS_AS(effective_gain(chan.matrix, steering_vector({3, 0.5}, 1.0),
                                 steering_vector({4, 0.5}, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("zero channel gives zero gain") {
  const CMat zero = CMat::Zero(4, 4);
  const auto mu = effective_gain(zero, steering_vector({4, 0.5}, 1.0), steering_vector({4, 0.5}, 2.0));
  CHECK(std::abs(mu) == 0.0);
}

TEST_CASE("received_snr arithmetic") {
  CHECK(received_snr(0.0, 1.0, 1.0) == 0.0);
  CHECK(received_snr(1.0, 1.0, 1.0) == doctest::Approx(1.0));
  // 5 dB transmit SNR with unit |mu|^2
  CHECK(received_snr(1.0, 1.0, std::pow(10.0, 0.5)) == doctest::Approx(3.1623).epsilon(1e-4));
}
