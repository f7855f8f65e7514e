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

#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "photobell/errors.hpp"

namespace photobell {

/// Reduces an analyzer angle to [0, pi); a polarizer at theta and theta + pi
/// is the same device.
inline double normalize_angle(double theta) {
  if (!std::isfinite(theta)) throw PreconditionViolated("polarizer angle must be finite");
  double r = std::fmod(theta, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  if (r >= std::numbers::pi) r -= std::numbers::pi;
  return r;
}

/// Settings of the two polarizers; an empty angle means that polarizer is removed.
class PolarizerAngles {
 public:
  PolarizerAngles() = default;
  PolarizerAngles(std::optional<double> theta1, std::optional<double> theta2)
      : theta1_(theta1 ? std::optional<double>(normalize_angle(*theta1)) : std::nullopt),
        theta2_(theta2 ? std::optional<double>(normalize_angle(*theta2)) : std::nullopt) {}

  static PolarizerAngles removed() { return {}; }

  const std::optional<double>& theta1() const { return theta1_; }
  const std::optional<double>& theta2() const { return theta2_; }

  friend bool operator==(const PolarizerAngles&, const PolarizerAngles&) = default;

 private:
  std::optional<double> theta1_;
  std::optional<double> theta2_;
};

/// The four analyzer angles entering the Clauser-Horne combination.
struct AngleQuad {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta1p = 0.0;
  double theta2p = 0.0;

  /// (pi/8, pi/4, 3pi/8, 0): the canonical two-photon violating choice.
  static AngleQuad canonical() {
    constexpr double pi = std::numbers::pi;
    return {pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, 0.0};
  }

  double operator[](int i) const {
    switch (i) {
      case 0: return theta1;
      case 1: return theta2;
      case 2: return theta1p;
      default: return theta2p;
    }
  }
  double& operator[](int i) {
    switch (i) {
      case 0: return theta1;
      case 1: return theta2;
      case 2: return theta1p;
      default: return theta2p;
    }
  }
};

}  // namespace photobell
