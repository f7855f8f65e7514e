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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "photobell/bell.hpp"
#include "photobell/transforms.hpp"

namespace photobell {

enum class Family { two_photon, coherent, gaussian };
/// One-parameter cuts through the (u, v) plane, or the full grid.
enum class Slice { v0, u0, uv, umv, grid };

std::string_view to_string(Family family);
std::string_view to_string(Slice slice);
std::optional<Family> parse_family(std::string_view text);
std::optional<Slice> parse_slice(std::string_view text);

struct GridRange {
  double min = 0.0;
  double max = 1.2;
  int steps = 49;

  /// Evenly spaced points, min itself when steps == 1.
  std::vector<double> points() const;
};

struct SweepSpec {
  Family family = Family::gaussian;
  double kappa = 1.0;
  Slice slice = Slice::u0;
  GridRange u_range;
  GridRange v_range;
  /// Fixed analyzer angles; empty means run an angle search per row.
  std::optional<AngleQuad> quad = AngleQuad::canonical();
  std::uint64_t seed = 0;
  /// Amplitudes for the coherent family.
  CoherentAmplitudes z{};
  PassiveTransform entangler = PassiveTransform::entangler();
  int threads = 1;
  int search_grid = 8;
  int search_refine = 20;

  /// Throws PreconditionViolated on an invalid spec.
  void validate() const;
  /// The (u, v) points in row order: the varying parameter of a slice, or
  /// u-major for the grid. Non-Gaussian families have a single point.
  std::vector<std::pair<double, double>> points() const;
};

struct SweepRow {
  Family family = Family::gaussian;
  double kappa = 1.0;
  double u = 0.0;
  double v = 0.0;
  AngleQuad quad;
  CoincidenceRates rates;
  double f = 0.0;
  double lower_bound = 0.0;
  Verdict verdict = Verdict::obeys;
  /// Set when the row could not be evaluated; the numeric fields are NaN.
  std::optional<std::string> error;
};

/// One row per point, in point order, whatever the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

struct AngleSearchResult {
  /// Largest f found.
  ChScore upper;
  /// Smallest f - lower_bound found.
  ChScore lower;
};

/// Coarse grid over [0, pi)^4 followed by coordinate descent from the best
/// grid point and from a few seeded random starts.
AngleSearchResult search_angles(const RatesProvider& provider, int grid_density, int refine_iters,
                                std::uint64_t seed = 0,
                                const Tolerances& tol = default_tolerances());

struct ComparisonReport {
  double kappa_a = 0.0;
  double kappa_b = 0.0;
  double max_f_a = 0.0;
  double max_f_b = 0.0;
  /// The colder (larger kappa) sweep shows the strictly larger maximum.
  bool expected_ordering = false;
};

/// Runs two sweeps that differ only in kappa and compares their maxima.
ComparisonReport compare_kappa(const SweepSpec& a, const SweepSpec& b);

/// Largest f over the rows that evaluated successfully.
double max_f(const std::vector<SweepRow>& rows);

}  // namespace photobell
