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

#include "photobell/sampling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "photobell/optics.hpp"

namespace photobell {

AngleQuad random_quad(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  AngleQuad q;
  q.theta1 = angle(rng);
  q.theta2 = angle(rng);
  q.theta1p = angle(rng);
  q.theta2p = angle(rng);
  return q;
}

PolarizerAngles random_angles(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  const double t1 = angle(rng);
  const double t2 = angle(rng);
  return PolarizerAngles(t1, t2);
}

CoherentAmplitudes random_coherent(Rng& rng, double max_abs) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CoherentAmplitudes z;
  for (auto& zi : z) {
    const double r = max_abs * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    zi = std::polar(r, phi);
  }
  return z;
}

std::vector<double> random_simplex_weights(Rng& rng, int count) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(count);
  double total = 0.0;
  for (double& x : w) {
    x = exp1(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  // Put any rounding residue on the largest weight so the sum is 1.
  double sum = 0.0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i];
    if (w[i] > w[largest]) largest = i;
  }
  w[largest] += 1.0 - sum;
  return w;
}

PassiveTransform random_passive(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix4cd a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<Eigen::Matrix4cd> qr(a);
  Eigen::Matrix4cd q = qr.householderQ();
  const Eigen::Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) q.col(j) *= std::polar(1.0, std::arg(r(j, j)));
  return PassiveTransform(q);
}

CoherentMixture random_coherent_mixture(Rng& rng) {
  std::uniform_int_distribution<int> size(1, 5);
  CoherentMixture m;
  const int n = size(rng);
  m.weights = random_simplex_weights(rng, n);
  for (int i = 0; i < n; ++i) m.states.push_back(random_coherent(rng, 2.0));
  return m;
}

GaussianState random_gaussian(Rng& rng, double max_squeeze, double kappa_min) {
  std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
  std::uniform_real_distribution<double> kappa(kappa_min, 1.0);
  Matrix8d d = Matrix8d::Identity();
  Matrix8d z = Matrix8d::Identity();
  for (int i = 0; i < 4; ++i) {
    const double k = kappa(rng);
    d(i, i) = k;
    d(i + 4, i + 4) = k;
    const double r = squeeze(rng);
    z(i, i) = std::exp(r);
    z(i + 4, i + 4) = std::exp(-r);
  }
  const Matrix8d o1 = passive_to_symplectic(random_passive(rng)).matrix();
  const Matrix8d o2 = passive_to_symplectic(random_passive(rng)).matrix();
  const Matrix8d s = o1 * z * o2;
  const Matrix8d g = s.transpose() * d * s;
  return GaussianState::from_precision(0.5 * (g + g.transpose()));
}

}  // namespace photobell
