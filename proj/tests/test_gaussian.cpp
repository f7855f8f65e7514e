// Copyright 2026 The Photobell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "photobell/bell.hpp"
#include "photobell/gaussian.hpp"
#include "photobell/optics.hpp"
#include "photobell/sampling.hpp"

namespace photobell {
namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd sorted_eigenvalues(const Matrix8d& g) {
  Eigen::SelfAdjointEigenSolver<Matrix8d> eig(g, Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

TEST(Validity, VacuumSaturatesUncertainty) {
  const auto report = check_validity(Matrix8d::Identity());
  EXPECT_TRUE(report.valid);
  EXPECT_NEAR(report.least_uncertainty_eigenvalue, 0.0, 1e-14);
  EXPECT_NEAR(report.least_eigenvalue, 1.0, 1e-15);
}

TEST(Validity, OverlyNarrowWignerFunctionIsRejected) {
  const auto report = check_validity(2.0 * Matrix8d::Identity());
  EXPECT_FALSE(report.valid);
  EXPECT_NEAR(report.least_uncertainty_eigenvalue, -0.5, 1e-14);
  EXPECT_THROW(GaussianState::from_precision(2.0 * Matrix8d::Identity()), InvalidGaussian);
}

TEST(Validity, ThermalIsValidAndAsymmetryIsRejected) {
  EXPECT_TRUE(check_validity(0.5 * Matrix8d::Identity()).valid);
  Matrix8d g = Matrix8d::Identity();
  g(0, 1) = 1e-6;
  EXPECT_FALSE(check_validity(g).valid);
  EXPECT_FALSE(check_validity(-Matrix8d::Identity()).valid);
  Matrix8d nan = Matrix8d::Identity();
  nan(2, 2) = std::nan("");
  EXPECT_FALSE(check_validity(nan).valid);
}

TEST(MakeGaussian, UnmixedSqueezeIsDiagonal) {
  const auto state = make_gaussian(1.0, {0.5, 0.0});
  Eigen::Matrix<double, 8, 1> d;
  d << std::exp(-1.0), 1, 1, std::exp(1.0), std::exp(1.0), 1, 1, std::exp(-1.0);
  EXPECT_LT((state.precision() - Matrix8d(d.asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(state.log_det(), 0.0, 1e-14);
}

TEST(MakeGaussian, MixerPreservesSpectrumAndScalesWithKappa) {
  const auto plain = make_gaussian(0.75, {0.3, -0.4});
  const auto mixed = make_gaussian(0.75, {0.3, -0.4}, PassiveTransform::entangler());
  EXPECT_LT((sorted_eigenvalues(plain.precision()) - sorted_eigenvalues(mixed.precision()))
                .cwiseAbs()
                .maxCoeff(),
            1e-13);
  EXPECT_NEAR(mixed.log_det(), 8.0 * std::log(0.75), 1e-12);
  EXPECT_GT((mixed.precision() - plain.precision()).cwiseAbs().maxCoeff(), 0.1);
  EXPECT_THROW(make_gaussian(0.0, {}), PreconditionViolated);
  EXPECT_THROW(make_gaussian(1.01, {}), PreconditionViolated);
}

TEST(Squeezing, DetectsSubVacuumNoise) {
  const auto sq = squeezing_test(make_gaussian(1.0, {0.5, 0.0}, PassiveTransform::entangler()));
  EXPECT_TRUE(sq.squeezed);
  EXPECT_NEAR(sq.least_noise_eigenvalue, 0.5 * std::exp(-1.0), 1e-14);
  EXPECT_NEAR(sq.least_noise_eigenvalue, 0.18393972058572117, 1e-14);
  EXPECT_FALSE(squeezing_test(GaussianState::vacuum()).squeezed);
  EXPECT_FALSE(squeezing_test(make_gaussian(0.75, {})).squeezed);
  // Enough heat hides the squeeze: e^{-2u}/kappa >= 1.
  EXPECT_FALSE(squeezing_test(make_gaussian(0.5, {0.2, 0.2})).squeezed);
  EXPECT_TRUE(squeezing_test(make_gaussian(0.5, {0.4, 0.0})).squeezed);
}

TEST(Squeezing, NoiseIsPassiveInvariant) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianState g = random_gaussian(rng, 0.8, 0.5);
    const GaussianState h = apply_passive_gaussian(random_passive(rng), g);
    EXPECT_NEAR(squeezing_test(g).least_noise_eigenvalue, squeezing_test(h).least_noise_eigenvalue,
                1e-12);
  }
}

TEST(VacuumOverlap, VacuumAlwaysEmpty) {
  const auto vac = GaussianState::vacuum();
  for (int bits = 1; bits < 16; ++bits) {
    ModeSet m;
    for (int k = 0; k < 4; ++k) {
      if (bits & (1 << k)) m.insert(ModeIndex(k));
    }
    EXPECT_NEAR(vacuum_overlap(vac, PolarizerAngles(0.3, 1.2), m), 1.0, 1e-15);
  }
  EXPECT_THROW(vacuum_overlap(vac, {}, ModeSet{}), PreconditionViolated);
}

TEST(VacuumOverlap, ThermalModes) {
  const double kappa = 0.75;
  const auto th = make_gaussian(kappa, {});
  const double p0 = 2.0 * kappa / (1.0 + kappa);
  EXPECT_NEAR(vacuum_overlap(th, {}, ModeSet{1}), p0, 1e-15);
  EXPECT_NEAR(vacuum_overlap(th, PolarizerAngles(0.7, 2.0), ModeSet{0, 2}), p0 * p0, 1e-15);
  EXPECT_NEAR(vacuum_overlap(th, {}, ModeSet::all()), std::pow(p0, 4), 1e-14);
}

TEST(VacuumOverlap, SingleModeSqueezedVacuum) {
  for (double u : {0.2, 0.5, 1.0}) {
    const auto state = make_gaussian(1.0, {u, 0.0});
    EXPECT_NEAR(vacuum_overlap(state, {}, ModeSet{0}), 1.0 / std::cosh(u), 1e-14);
    EXPECT_NEAR(vacuum_overlap(state, {}, ModeSet{0, 3}), std::pow(std::cosh(u), -2), 1e-14);
    EXPECT_NEAR(vacuum_overlap(state, {}, ModeSet{1, 2}), 1.0, 1e-14);
  }
}

TEST(VacuumOverlap, RotatedSqueezeOfPolarizationPair) {
  // Squeezed vacuum in the x mode of beam k only; a polarizer at theta
  // passes the mode cos(theta) a_x + sin(theta) a_y, which sees the beam
  // splitter mixture of a squeezed vacuum and vacuum.
  Matrix8d g = Matrix8d::Identity();
  const double r = 0.7;
  g(0, 0) = std::exp(-2 * r);
  g(4, 4) = std::exp(2 * r);
  const auto state = GaussianState::from_precision(g);
  for (double theta : {0.0, 0.4, kPi / 2}) {
    const double c2 = std::pow(std::cos(theta), 2);
    // Transmitted quadrature variances are c2 * V_sq + (1 - c2) * V_vac.
    const double vq = c2 * 0.5 * std::exp(2 * r) + (1 - c2) * 0.5;
    const double vp = c2 * 0.5 * std::exp(-2 * r) + (1 - c2) * 0.5;
    const double expected = 1.0 / std::sqrt((vq + 0.5) * (vp + 0.5));
    EXPECT_NEAR(vacuum_overlap(state, PolarizerAngles(theta, std::nullopt), ModeSet{0}), expected,
                1e-14)
        << theta;
  }
}

TEST(VacuumOverlap, BeamSwapSymmetry) {
  Rng rng(31);
  const GaussianState local = random_gaussian(rng, 0.5, 0.6);
  // Same two-mode state on both beams, then a swap-symmetric mixer.
  // Marginal of modes (0, 1): invert the covariance block.
  const Matrix8d cov = local.precision().inverse();
  const std::array<int, 4> idx{0, 1, 4, 5};
  Eigen::Matrix4d block;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) block(i, j) = cov(idx[i], idx[j]);
  }
  const Eigen::Matrix4d marginal = block.inverse();
  Matrix8d g = Matrix8d::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int bi = 0; bi < 2; ++bi) {
        for (int bj = 0; bj < 2; ++bj) {
          const double val = marginal(2 * bi + i, 2 * bj + j);
          g(4 * bi + i, 4 * bj + j) = val;
          g(4 * bi + i + 2, 4 * bj + j + 2) = val;
        }
      }
    }
  }
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = u(1, 1) = u(2, 2) = u(3, 3) = h;
  u(0, 2) = u(2, 0) = u(1, 3) = u(3, 1) = std::complex<double>(0.0, h);
  const GaussianState state = apply_passive_gaussian(
      PassiveTransform(u, {.unitarity = 1e-14}), GaussianState::from_precision(0.5 * (g + g.transpose())));
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_angles(rng);
    const PolarizerAngles swapped(a.theta2(), a.theta1());
    EXPECT_NEAR(vacuum_overlap(state, a, ModeSet{0}), vacuum_overlap(state, swapped, ModeSet{2}),
                1e-13);
    const auto ra = coincidence_rates(state, a);
    const auto rb = coincidence_rates(state, swapped);
    EXPECT_NEAR(ra.p_tt, rb.p_tt, 1e-13);
    EXPECT_NEAR(ra.p_t_, rb.p__t, 1e-13);
  }
}

TEST(GaussianRates, VacuumNeverClicks) {
  const auto r = coincidence_rates(GaussianState::vacuum(), PolarizerAngles(0.2, 0.9));
  EXPECT_NEAR(r.p_tt, 0.0, 1e-15);
  EXPECT_NEAR(r.p_t_, 0.0, 1e-15);
  EXPECT_NEAR(r.p__t, 0.0, 1e-15);
  EXPECT_NEAR(r.p__, 0.0, 1e-15);
}

TEST(GaussianRates, ThermalBeamsAreIndependent) {
  const double kappa = 0.75;
  const double p0 = 2.0 * kappa / (1.0 + kappa);
  const auto r = coincidence_rates(make_gaussian(kappa, {}), PolarizerAngles(0.5, 1.5));
  EXPECT_NEAR(r.p_tt, (1 - p0) * (1 - p0), 1e-14);
  EXPECT_NEAR(r.p_t_, (1 - p0) * (1 - p0 * p0), 1e-14);
  EXPECT_NEAR(r.p__, (1 - p0 * p0) * (1 - p0 * p0), 1e-14);
}

TEST(GaussianRates, RemovingAPolarizerNeverLowersTheRate) {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianState g = random_gaussian(rng, 1.0, 0.5);
    const auto r = coincidence_rates(g, random_angles(rng));
    EXPECT_LE(r.p_tt, r.p_t_ + 1e-14);
    EXPECT_LE(r.p_tt, r.p__t + 1e-14);
    EXPECT_LE(r.p_t_, r.p__ + 1e-14);
    EXPECT_LE(r.p__t, r.p__ + 1e-14);
    EXPECT_GE(r.p_tt, 0.0);
    EXPECT_LE(r.p__, 1.0);
  }
}

TEST(GaussianRates, UnsqueezedStatesObey) {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const GaussianState g = random_gaussian(rng, 0.0, 0.3);
    ASSERT_FALSE(squeezing_test(g).squeezed);
    const auto provider = gaussian_rates_provider(g);
    for (int q = 0; q < 20; ++q) {
      const ChScore s = ch_score(provider, random_quad(rng));
      EXPECT_EQ(s.verdict, Verdict::obeys) << "f=" << s.f << " lb=" << s.lower_bound;
    }
  }
}

TEST(GaussianRates, PolarizerAnglesArePeriodic) {
  const auto g = make_gaussian(0.9, {0.3, 0.2}, PassiveTransform::entangler());
  const auto a = coincidence_rates(g, PolarizerAngles(0.4, 1.1));
  const auto b = coincidence_rates(g, PolarizerAngles(0.4 + kPi, 1.1 - 2 * kPi));
  EXPECT_NEAR(a.p_tt, b.p_tt, 1e-14);
  EXPECT_NEAR(a.p_t_, b.p_t_, 1e-14);
}

}  // namespace
}  // namespace photobell
