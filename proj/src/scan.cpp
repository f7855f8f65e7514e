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

#include "photobell/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "photobell/gaussian.hpp"

namespace photobell {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::two_photon: return "two_photon";
    case Family::coherent: return "coherent";
    case Family::gaussian: return "gaussian";
  }
  return "unknown";
}

std::string_view to_string(Slice slice) {
  switch (slice) {
    case Slice::v0: return "v0";
    case Slice::u0: return "u0";
    case Slice::uv: return "uv";
    case Slice::umv: return "umv";
    case Slice::grid: return "grid";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::two_photon, Family::coherent, Family::gaussian}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<Slice> parse_slice(std::string_view text) {
  for (Slice s : {Slice::v0, Slice::u0, Slice::uv, Slice::umv, Slice::grid}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<double> GridRange::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  if (steps == 1) {
    out.push_back(min);
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    out.push_back(i == steps - 1 ? max : min + (max - min) * i / (steps - 1));
  }
  return out;
}

void SweepSpec::validate() const {
  const auto finite_range = [](const GridRange& r) {
    return r.steps >= 1 && std::isfinite(r.min) && std::isfinite(r.max);
  };
  if (!finite_range(u_range) || !finite_range(v_range)) {
    throw PreconditionViolated("sweep ranges need finite bounds and at least one step");
  }
  if (!(kappa > 0.0 && kappa <= 1.0)) throw PreconditionViolated("kappa must lie in (0, 1]");
  if (threads < 1) throw PreconditionViolated("threads must be at least 1");
  if (!quad && search_grid < 4) throw PreconditionViolated("angle search needs grid >= 4");
  if (search_refine < 0) throw PreconditionViolated("refine iterations must be nonnegative");
  if (quad) {
    for (int i = 0; i < 4; ++i) {
      if (!std::isfinite((*quad)[i])) throw PreconditionViolated("angles must be finite");
    }
  }
}

std::vector<std::pair<double, double>> SweepSpec::points() const {
  std::vector<std::pair<double, double>> out;
  if (family != Family::gaussian) {
    out.emplace_back(0.0, 0.0);
    return out;
  }
  switch (slice) {
    case Slice::v0:
      for (double u : u_range.points()) out.emplace_back(u, 0.0);
      break;
    case Slice::u0:
      for (double v : v_range.points()) out.emplace_back(0.0, v);
      break;
    case Slice::uv:
      for (double t : u_range.points()) out.emplace_back(t, t);
      break;
    case Slice::umv:
      for (double t : u_range.points()) out.emplace_back(t, 0.0 - t);
      break;
    case Slice::grid:
      for (double u : u_range.points()) {
        for (double v : v_range.points()) out.emplace_back(u, v);
      }
      break;
  }
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

std::string error_kind(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const InvalidGaussian&) {
    return "invalid_gaussian";
  } catch (const SingularMatrix&) {
    return "singular_matrix";
  } catch (const ProbabilityOutOfRange&) {
    return "probability_out_of_range";
  } catch (const TruncationTooSevere&) {
    return "truncation_too_severe";
  } catch (const PreconditionViolated&) {
    return "precondition_violated";
  } catch (...) {
    return "internal";
  }
}

SweepRow failed_row(const SweepSpec& spec, double u, double v, const std::string& kind) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SweepRow row;
  row.family = spec.family;
  row.kappa = spec.kappa;
  row.u = u;
  row.v = v;
  row.quad = spec.quad.value_or(AngleQuad{nan, nan, nan, nan});
  row.rates = CoincidenceRates{nan, nan, nan, nan, {}};
  row.f = nan;
  row.lower_bound = nan;
  row.error = kind;
  return row;
}

SweepRow evaluate_row(const SweepSpec& spec, double u, double v) {
  RatesProvider provider;
  double kappa = spec.kappa;
  switch (spec.family) {
    case Family::two_photon:
      provider = two_photon_rates_provider();
      kappa = 1.0;
      break;
    case Family::coherent:
      provider = coherent_rates_provider(spec.z);
      kappa = 1.0;
      break;
    case Family::gaussian:
      provider = gaussian_rates_provider(make_gaussian(spec.kappa, {u, v}, spec.entangler));
      break;
  }
  const ChScore score = spec.quad ? ch_score(provider, *spec.quad)
                                  : search_angles(provider, spec.search_grid, spec.search_refine,
                                                  spec.seed)
                                        .upper;
  SweepRow row;
  row.family = spec.family;
  row.kappa = kappa;
  row.u = u;
  row.v = v;
  row.quad = score.quad;
  row.rates = score.rates;
  row.f = score.f;
  row.lower_bound = score.lower_bound;
  row.verdict = score.verdict;
  return row;
}

// Coordinate descent maximizing `sign * objective`.
AngleQuad refine(const RatesProvider& provider, AngleQuad start, double step, int iters,
                 double sign, const Tolerances& tol, double& best_value) {
  const auto objective = [&](const AngleQuad& q) {
    const ChScore s = ch_score(provider, q, tol);
    return sign * (sign > 0 ? s.f : s.f - s.lower_bound);
  };
  AngleQuad best = start;
  best_value = objective(best);
  for (int it = 0; it < iters; ++it) {
    bool improved = false;
    for (int c = 0; c < 4; ++c) {
      for (double dir : {1.0, -1.0}) {
        AngleQuad trial = best;
        trial[c] = normalize_angle(trial[c] + dir * step);
        const double value = objective(trial);
        if (value > best_value) {
          best_value = value;
          best = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto points = spec.points();
  std::vector<SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const auto [u, v] = points[i];
      try {
        rows[i] = evaluate_row(spec, u, v);
      } catch (...) {
        rows[i] = failed_row(spec, u, v, error_kind(std::current_exception()));
      }
    }
  };
  const int threads = std::min<int>(spec.threads, static_cast<int>(points.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

AngleSearchResult search_angles(const RatesProvider& provider, int grid_density, int refine_iters,
                                std::uint64_t seed, const Tolerances& tol) {
  if (grid_density < 4) throw PreconditionViolated("angle search needs grid density >= 4");
  if (refine_iters < 0) throw PreconditionViolated("refine iterations must be nonnegative");
  const int g = grid_density;
  const double h = kPi / g;

  // All rates on the grid of (theta1, theta2) pairs; every quadruple of grid
  // angles is then assembled without further provider calls.
  std::vector<CoincidenceRates> table(static_cast<std::size_t>(g) * g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) table[i * g + j] = provider(PolarizerAngles(i * h, j * h));
  }
  const auto at = [&](int i, int j) -> const CoincidenceRates& { return table[i * g + j]; };

  double best_upper = -std::numeric_limits<double>::infinity();
  double best_lower = std::numeric_limits<double>::infinity();
  std::array<int, 4> arg_upper{}, arg_lower{};
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      for (int ip = 0; ip < g; ++ip) {
        for (int jp = 0; jp < g; ++jp) {
          const double f = at(i, j).p_tt - at(i, jp).p_tt + at(ip, j).p_tt + at(ip, jp).p_tt -
                           at(ip, j).p_t_ - at(i, j).p__t;
          const double gap = f + at(i, j).p__;
          if (f > best_upper) {
            best_upper = f;
            arg_upper = {i, j, ip, jp};
          }
          if (gap < best_lower) {
            best_lower = gap;
            arg_lower = {i, j, ip, jp};
          }
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  constexpr int kRandomStarts = 3;
  std::vector<AngleQuad> random_starts;
  for (int r = 0; r < kRandomStarts; ++r) {
    random_starts.push_back({angle(rng), angle(rng), angle(rng), angle(rng)});
  }

  const auto best_of = [&](const std::array<int, 4>& arg, double sign) {
    std::vector<AngleQuad> starts{{arg[0] * h, arg[1] * h, arg[2] * h, arg[3] * h}};
    starts.insert(starts.end(), random_starts.begin(), random_starts.end());
    AngleQuad best = starts[0];
    double best_value = -std::numeric_limits<double>::infinity();
    for (const AngleQuad& start : starts) {
      double value = 0.0;
      const AngleQuad q = refine(provider, start, 0.5 * h, refine_iters, sign, tol, value);
      if (value > best_value) {
        best_value = value;
        best = q;
      }
    }
    return ch_score(provider, best, tol);
  };

  AngleSearchResult result;
  result.upper = best_of(arg_upper, 1.0);
  result.lower = best_of(arg_lower, -1.0);
  return result;
}

double max_f(const std::vector<SweepRow>& rows) {
  double best = -std::numeric_limits<double>::infinity();
  for (const SweepRow& row : rows) {
    if (!row.error) best = std::max(best, row.f);
  }
  return best;
}

ComparisonReport compare_kappa(const SweepSpec& a, const SweepSpec& b) {
  SweepSpec check = b;
  check.kappa = a.kappa;
  check.threads = a.threads;
  const bool same = a.family == check.family && a.slice == check.slice &&
                    a.u_range.min == check.u_range.min && a.u_range.max == check.u_range.max &&
                    a.u_range.steps == check.u_range.steps &&
                    a.v_range.min == check.v_range.min && a.v_range.max == check.v_range.max &&
                    a.v_range.steps == check.v_range.steps && a.seed == check.seed &&
                    a.z == check.z && a.search_grid == check.search_grid &&
                    a.search_refine == check.search_refine &&
                    a.entangler.matrix() == check.entangler.matrix() &&
                    a.quad.has_value() == check.quad.has_value() &&
                    (!a.quad || (a.quad->theta1 == check.quad->theta1 &&
                                 a.quad->theta2 == check.quad->theta2 &&
                                 a.quad->theta1p == check.quad->theta1p &&
                                 a.quad->theta2p == check.quad->theta2p));
  if (!same) throw PreconditionViolated("compared sweeps must differ only in kappa");

  ComparisonReport report;
  report.kappa_a = a.kappa;
  report.kappa_b = b.kappa;
  report.max_f_a = max_f(run_sweep(a));
  report.max_f_b = max_f(run_sweep(b));
  if (a.kappa > b.kappa) {
    report.expected_ordering = report.max_f_b < report.max_f_a;
  } else if (b.kappa > a.kappa) {
    report.expected_ordering = report.max_f_a < report.max_f_b;
  }
  return report;
}

}  // namespace photobell
