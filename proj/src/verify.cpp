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

#include "photobell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "photobell/bell.hpp"
#include "photobell/fock_state.hpp"
#include "photobell/gaussian.hpp"
#include "photobell/sampling.hpp"

namespace photobell {
namespace {

double rate_residual(const CoincidenceRates& a, const CoincidenceRates& b) {
  return std::max({std::abs(a.p_tt - b.p_tt), std::abs(a.p_t_ - b.p_t_),
                   std::abs(a.p__t - b.p__t), std::abs(a.p__ - b.p__)});
}

// Accepts any truncation so that its effect shows up as a residual.
Tolerances permissive() {
  Tolerances tol;
  tol.truncation = 1.0;
  tol.thermal_tail = 1.0;
  tol.probability_slack = 1.0;
  return tol;
}

template <typename Body>
SuiteResult run_suite(std::string name, double tolerance, Body&& body) {
  SuiteResult suite;
  suite.name = std::move(name);
  try {
    body(suite);
  } catch (const std::exception&) {
    suite.max_residual = std::numeric_limits<double>::infinity();
  }
  suite.passed = suite.max_residual <= tolerance;
  return suite;
}

}  // namespace

VerifyReport run_verification(int cutoff, double tolerance, std::uint64_t seed) {
  VerifyReport report;
  report.cutoff = cutoff;
  report.tolerance = tolerance;
  const Tolerances loose = permissive();

  report.suites.push_back(run_suite("two_photon_fock_vs_closed", tolerance, [&](SuiteResult& s) {
    Rng rng(seed);
    const FockDensityMatrix rho = to_density(make_two_photon_bell(cutoff));
    for (int i = 0; i < 100; ++i) {
      const PolarizerAngles angles = random_angles(rng);
      s.max_residual = std::max(s.max_residual,
                                rate_residual(coincidence_rates_fock(rho, angles, loose),
                                              coincidence_rates_two_photon_closed(angles)));
      ++s.cases;
    }
  }));

  report.suites.push_back(run_suite("coherent_fock_vs_closed", tolerance, [&](SuiteResult& s) {
    Rng rng(seed + 1);
    for (int i = 0; i < 20; ++i) {
      const CoherentAmplitudes z = random_coherent(rng, 0.7);
      const FockDensityMatrix rho = to_density(make_coherent_state(z, cutoff, loose));
      const PolarizerAngles angles = random_angles(rng);
      s.max_residual = std::max(s.max_residual,
                                rate_residual(coincidence_rates_fock(rho, angles, loose),
                                              coincidence_rates_coherent_closed(z, angles)));
      ++s.cases;
    }
  }));

  report.suites.push_back(run_suite("gaussian_fock_vs_gaussian", tolerance, [&](SuiteResult& s) {
    const PassiveTransform u = PassiveTransform::entangler();
    const std::pair<double, double> points[] = {{0.3, 0.0}, {0.0, 0.3}, {0.3, 0.3}, {0.6, 0.6}};
    for (double kappa : {1.0, 0.75}) {
      for (const auto& [uu, vv] : points) {
        const auto rho = std::make_shared<const FockDensityMatrix>(
            make_thermal_mixture(kappa, {uu, vv}, cutoff, u, loose));
        const GaussianState g = make_gaussian(kappa, {uu, vv}, u);
        const AngleQuad q = AngleQuad::canonical();
        const ChScore fock = ch_score(fock_rates_provider(rho, loose), q, loose);
        const ChScore gauss = ch_score(gaussian_rates_provider(g), q);
        for (const PolarizerAngles& angles :
             {PolarizerAngles(q.theta1, q.theta2), PolarizerAngles(q.theta1p, q.theta2p)}) {
          s.max_residual = std::max(s.max_residual,
                                    rate_residual(coincidence_rates_fock(*rho, angles, loose),
                                                  coincidence_rates(g, angles)));
        }
        s.max_residual = std::max(s.max_residual, std::abs(fock.f - gauss.f));
        ++s.cases;
      }
    }
  }));

  report.suites.push_back(run_suite("classical_mixture_obedience", tolerance, [&](SuiteResult& s) {
    Rng rng(seed + 2);
    for (int i = 0; i < 200; ++i) {
      const CoherentMixture m = random_coherent_mixture(rng);
      const ChScore score =
          ch_score(coherent_mixture_rates_provider(m.weights, m.states), random_quad(rng));
      s.max_residual = std::max({s.max_residual, score.f, score.lower_bound - score.f, 0.0});
      ++s.cases;
    }
  }));

  report.passed = std::all_of(report.suites.begin(), report.suites.end(),
                              [](const SuiteResult& s) { return s.passed; });
  return report;
}

}  // namespace photobell
