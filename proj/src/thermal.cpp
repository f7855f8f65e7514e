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

#include <array>
#include <cmath>
#include <string>

#include "photobell/fock_state.hpp"
#include "photobell/induced_representation.hpp"

namespace photobell {
namespace {

// P(sum of four geometric(x) occupations == total).
double thermal_total_weight(double x, int total) {
  const double c = (total + 1.0) * (total + 2.0) * (total + 3.0) / 6.0;
  return std::pow(1.0 - x, 4) * std::pow(x, total) * c;
}

double thermal_tail_beyond(double x, int total) {
  if (x == 0.0) return 0.0;
  double tail = 0.0;
  for (int k = total + 1; k < total + 100000; ++k) {
    const double term = thermal_total_weight(x, k);
    tail += term;
    if (term <= 1e-18 * tail || term == 0.0) break;
  }
  return tail;
}

}  // namespace

Eigen::MatrixXd squeezed_number_states(double s, int max_input, int max_output) {
  if (max_input < 0 || max_output < 0) throw PreconditionViolated("negative truncation");
  // Working dimension large enough that max_input ladder steps leave levels
  // 0..max_output untouched by the truncation edge.
  const int work = max_output + max_input + 1;
  const double ch = std::cosh(s);
  const double sh = std::sinh(s);
  const double th = std::tanh(s);

  Eigen::VectorXd current = Eigen::VectorXd::Zero(work);
  current[0] = 1.0 / std::sqrt(ch);
  for (int n = 2; n < work; n += 2) {
    current[n] = current[n - 2] * (-th) * std::sqrt((n - 1.0) / n);
  }

  Eigen::MatrixXd out(max_output + 1, max_input + 1);
  out.col(0) = current.head(max_output + 1);
  Eigen::VectorXd next(work);
  for (int n = 1; n <= max_input; ++n) {
    // S|n> = (cosh s a† + sinh s a) S|n-1> / sqrt(n)
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < work; ++k) {
      double v = 0.0;
      if (k > 0) v += ch * std::sqrt(static_cast<double>(k)) * current[k - 1];
      if (k + 1 < work) v += sh * std::sqrt(k + 1.0) * current[k + 1];
      next[k] = v * inv;
    }
    current.swap(next);
    out.col(n) = current.head(max_output + 1);
  }
  return out;
}

FockDensityMatrix make_thermal_mixture(double kappa, SqueezeParams squeeze, int cutoff,
                                       const PassiveTransform& entangler, const Tolerances& tol) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw PreconditionViolated("kappa must lie in (0, 1]");
  if (!std::isfinite(squeeze.u) || !std::isfinite(squeeze.v)) {
    throw PreconditionViolated("squeeze parameters must be finite");
  }
  if (cutoff < 0) throw PreconditionViolated("cutoff must be nonnegative");

  // Geometric ratio n/(n+1) for mean occupation n = (1 - kappa)/(2 kappa).
  const double x = (1.0 - kappa) / (1.0 + kappa);
  const double tail = thermal_tail_beyond(x, cutoff);
  if (tail > tol.thermal_tail) {
    throw TruncationTooSevere("thermal tail " + std::to_string(tail) + " beyond cutoff " +
                                  std::to_string(cutoff),
                              tail);
  }
  int components_total = 0;
  while (thermal_tail_beyond(x, components_total) >= tol.thermal_component_mass) {
    ++components_total;
  }

  // Per-mode squeeze parameters matching the Gaussian diagonal squeeze.
  const std::array<double, 4> s{-squeeze.u, squeeze.v, -squeeze.v, squeeze.u};
  std::array<Eigen::MatrixXd, 4> ladders;
  for (int i = 0; i < 4; ++i) ladders[i] = squeezed_number_states(s[i], components_total, cutoff);

  const auto basis = FockBasis::four_mode(cutoff);
  const auto components = FockBasis::four_mode(components_total);
  const auto dim = static_cast<Eigen::Index>(basis->dim());
  Eigen::MatrixXcd factor(dim, static_cast<Eigen::Index>(components->dim()));
  for (std::size_t c = 0; c < components->dim(); ++c) {
    const Occupation& n = components->occupation(c);
    const double weight = std::pow(1.0 - x, 4) * std::pow(x, n[0] + n[1] + n[2] + n[3]);
    const double scale = std::sqrt(weight);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Occupation& m = basis->occupation(static_cast<std::size_t>(r));
      factor(r, static_cast<Eigen::Index>(c)) =
          scale * ladders[0](m[0], n[0]) * ladders[1](m[1], n[1]) * ladders[2](m[2], n[2]) *
          ladders[3](m[3], n[3]);
    }
  }

  if (!entangler.is_identity()) {
    const std::array<int, 4> all{0, 1, 2, 3};
    apply_mode_unitary(*basis, all, entangler.inverse().matrix(), factor);
  }

  const double deficit = std::max(0.0, 1.0 - factor.squaredNorm());
  if (deficit > tol.truncation) {
    throw TruncationTooSevere("squeezed thermal state loses " + std::to_string(deficit) +
                                  " probability at cutoff " + std::to_string(cutoff),
                              deficit);
  }
  return FockDensityMatrix(basis, std::move(factor), deficit);
}

}  // namespace photobell
