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

#include "photobell/bell.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "photobell/optics.hpp"

namespace photobell {

double clamp_probability(double p, const Tolerances& tol) {
  if (!std::isfinite(p)) throw ProbabilityOutOfRange("probability is not finite");
  if (p < 0.0) {
    if (p < -tol.probability_slack) {
      throw ProbabilityOutOfRange("probability " + std::to_string(p) + " is below 0");
    }
    return 0.0;
  }
  if (p > 1.0) {
    if (p > 1.0 + tol.probability_slack) {
      throw ProbabilityOutOfRange("probability " + std::to_string(p) + " exceeds 1");
    }
    return 1.0;
  }
  return p;
}

CoincidenceRates rates_from_vacuum(const VacuumProbabilities& vac, const PolarizerAngles& angles,
                                   const Tolerances& tol) {
  const auto rate = [&](int i, int j) {
    return clamp_probability(1.0 - vac.beam1[i] - vac.beam2[j] + vac.joint[i][j], tol);
  };
  CoincidenceRates out;
  out.p_tt = rate(0, 0);
  out.p_t_ = rate(0, 1);
  out.p__t = rate(1, 0);
  out.p__ = rate(1, 1);
  out.angles = angles;
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::obeys: return "obeys";
    case Verdict::violates_upper: return "violates_upper";
    case Verdict::violates_lower: return "violates_lower";
  }
  return "unknown";
}

CoincidenceRates coincidence_rates_fock(const FockDensityMatrix& rho, const PolarizerAngles& angles,
                                        const Tolerances& tol) {
  std::optional<FockDensityMatrix> rotated;
  if (angles.theta1()) rotated = rotate_beam(rho, Beam::k, *angles.theta1());
  if (angles.theta2()) rotated = rotate_beam(rotated ? *rotated : rho, Beam::k_prime, *angles.theta2());
  const FockDensityMatrix* state = rotated ? &*rotated : &rho;

  const FockBasis& basis = state->basis();
  std::array<int, 4> position{};
  for (int m = 0; m < 4; ++m) {
    position[m] = basis.position_of(ModeIndex(m));
    if (position[m] < 0) throw PreconditionViolated("coincidence rates need all four modes");
  }
  // Probability mass per pattern of empty modes.
  std::array<double, 16> by_empty{};
  const Eigen::VectorXd diag = state->diagonal();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Occupation& occ = basis.occupation(i);
    unsigned mask = 0;
    for (int m = 0; m < 4; ++m) {
      if (occ[position[m]] == 0) mask |= 1u << m;
    }
    by_empty[mask] += diag[static_cast<Eigen::Index>(i)];
  }
  const auto vacuum = [&](ModeSet s) {
    double p = 0.0;
    for (unsigned mask = 0; mask < 16; ++mask) {
      if ((s.bits() & ~mask) == 0) p += by_empty[mask];
    }
    return p;
  };

  const ModeSet beam1[2] = {angles.theta1() ? ModeSet{0} : ModeSet{0, 1}, ModeSet{0, 1}};
  const ModeSet beam2[2] = {angles.theta2() ? ModeSet{2} : ModeSet{2, 3}, ModeSet{2, 3}};
  VacuumProbabilities vac;
  for (int i = 0; i < 2; ++i) {
    vac.beam1[i] = vacuum(beam1[i]);
    vac.beam2[i] = vacuum(beam2[i]);
    for (int j = 0; j < 2; ++j) vac.joint[i][j] = vacuum(beam1[i] | beam2[j]);
  }
  return rates_from_vacuum(vac, angles, tol);
}

CoincidenceRates coincidence_rates_coherent_closed(const CoherentAmplitudes& z,
                                                   const PolarizerAngles& angles) {
  const auto transmitted = [](std::complex<double> zx, std::complex<double> zy,
                              const std::optional<double>& theta) {
    if (!theta) return std::norm(zx) + std::norm(zy);
    return std::norm(zx * std::cos(*theta) + zy * std::sin(*theta));
  };
  const double open1 = -std::expm1(-(std::norm(z[0]) + std::norm(z[1])));
  const double open2 = -std::expm1(-(std::norm(z[2]) + std::norm(z[3])));
  const double pol1 = -std::expm1(-transmitted(z[0], z[1], angles.theta1()));
  const double pol2 = -std::expm1(-transmitted(z[2], z[3], angles.theta2()));
  CoincidenceRates out;
  out.p_tt = pol1 * pol2;
  out.p_t_ = pol1 * open2;
  out.p__t = open1 * pol2;
  out.p__ = open1 * open2;
  out.angles = angles;
  return out;
}

CoincidenceRates coincidence_rates_two_photon_closed(const PolarizerAngles& angles) {
  CoincidenceRates out;
  out.p__ = 0.5;
  out.p_t_ = angles.theta1() ? 0.25 : 0.5;
  out.p__t = angles.theta2() ? 0.25 : 0.5;
  if (angles.theta1() && angles.theta2()) {
    const double s = std::sin(*angles.theta1() + *angles.theta2());
    out.p_tt = 0.25 * s * s;
  } else if (angles.theta1() || angles.theta2()) {
    out.p_tt = 0.25;
  } else {
    out.p_tt = 0.5;
  }
  out.angles = angles;
  return out;
}

Verdict verdict_for(double f, double lower_bound, const Tolerances& tol) {
  if (f > tol.verdict) return Verdict::violates_upper;
  if (f < lower_bound - tol.verdict) return Verdict::violates_lower;
  return Verdict::obeys;
}

ChScore ch_score(const RatesProvider& provider, const AngleQuad& quad, const Tolerances& tol) {
  const CoincidenceRates a = provider(PolarizerAngles(quad.theta1, quad.theta2));
  const CoincidenceRates b = provider(PolarizerAngles(quad.theta1, quad.theta2p));
  const CoincidenceRates c = provider(PolarizerAngles(quad.theta1p, quad.theta2));
  const CoincidenceRates d = provider(PolarizerAngles(quad.theta1p, quad.theta2p));
  ChScore score;
  score.f = a.p_tt - b.p_tt + c.p_tt + d.p_tt - c.p_t_ - a.p__t;
  score.lower_bound = -a.p__;
  score.quad = quad;
  score.verdict = verdict_for(score.f, score.lower_bound, tol);
  score.rates = a;
  return score;
}

bool clauser_horne_lemma_check(double x, double xp, double y, double yp, double big_x,
                               double big_y, double slack) {
  const auto in_range = [](double v, double hi) { return v >= 0.0 && v <= hi; };
  if (!in_range(x, big_x) || !in_range(xp, big_x) || !in_range(y, big_y) ||
      !in_range(yp, big_y)) {
    throw PreconditionViolated("lemma needs 0 <= x, x' <= X and 0 <= y, y' <= Y");
  }
  const double middle = x * y - x * yp + xp * y + xp * yp - big_y * xp - big_x * y;
  return middle <= slack && middle >= -big_x * big_y - slack;
}

RatesProvider fock_rates_provider(std::shared_ptr<const FockDensityMatrix> rho,
                                  const Tolerances& tol) {
  if (!rho) throw PreconditionViolated("null Fock state");
  return [rho = std::move(rho), tol](const PolarizerAngles& angles) {
    return coincidence_rates_fock(*rho, angles, tol);
  };
}

RatesProvider gaussian_rates_provider(GaussianState state, const Tolerances& tol) {
  return [state = std::move(state), tol](const PolarizerAngles& angles) {
    return coincidence_rates(state, angles, tol);
  };
}

RatesProvider coherent_rates_provider(const CoherentAmplitudes& z) {
  return [z](const PolarizerAngles& angles) { return coincidence_rates_coherent_closed(z, angles); };
}

RatesProvider two_photon_rates_provider() {
  return [](const PolarizerAngles& angles) { return coincidence_rates_two_photon_closed(angles); };
}

RatesProvider coherent_mixture_rates_provider(std::vector<double> weights,
                                              std::vector<CoherentAmplitudes> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw PreconditionViolated("mixture needs one weight per state");
  }
  for (double w : weights) {
    if (!(w >= 0.0)) throw PreconditionViolated("mixture weights must be nonnegative");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw PreconditionViolated("mixture weights must sum to one");
  return [weights = std::move(weights), states = std::move(states)](const PolarizerAngles& angles) {
    CoincidenceRates out;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const CoincidenceRates r = coincidence_rates_coherent_closed(states[i], angles);
      out.p_tt += weights[i] * r.p_tt;
      out.p_t_ += weights[i] * r.p_t_;
      out.p__t += weights[i] * r.p__t;
      out.p__ += weights[i] * r.p__;
    }
    out.angles = angles;
    return out;
  };
}

}  // namespace photobell
