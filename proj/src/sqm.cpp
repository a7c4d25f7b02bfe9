// Copyright 2026 The aerts-machines Authors
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

#include "aerts/sqm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aerts/error.hpp"

namespace aerts::sqm {

ChordCoordinate::ChordCoordinate(double x) : x_(x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw InvalidParameter("chord coordinate " + std::to_string(x) + " outside [-1, 1]");
  }
}

BreakProfile epsilon_profile(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw InvalidParameter("epsilon " + std::to_string(epsilon) + " outside [0, 1]");
  }
  return Epsilon{epsilon};
}

BreakProfile fixed_point_profile(double x0) { return FixedPoint{ChordCoordinate(x0)}; }

ChordCoordinate land_on_chord(const ParticleState& v, const UnitVector3& u) {
  return ChordCoordinate(std::clamp(v.position.dot(u), -1.0, 1.0));
}

namespace {

struct BreakSampler {
  RandomStream& rng;

  // Uniform and Epsilon(1) share the same arithmetic so they agree bit-for-bit.
  double operator()(Uniform) const { return -1.0 + 2.0 * rng.uniform(); }
  double operator()(const FixedPoint& f) const { return f.point.value(); }
  double operator()(const Epsilon& e) const {
    return -e.epsilon + 2.0 * e.epsilon * rng.uniform();
  }
};

}  // namespace

ChordCoordinate sample_break(const BreakProfile& profile, RandomStream& rng) {
  return ChordCoordinate(std::visit(BreakSampler{rng}, profile));
}

SqmOutcome resolve(const UnitVector3& u, ChordCoordinate landing, ChordCoordinate break_point) {
  SqmOutcome out;
  out.landing = landing;
  out.break_point = break_point;
  out.boundary = break_point == landing;
  // A break below the particle leaves it on the fragment anchored at +u.
  out.sign = outcome_if(break_point <= landing);
  out.direction = out.sign == Outcome::Plus ? u : -u;
  return out;
}

SqmOutcome run_measurement(const ParticleState& v, const UnitVector3& u,
                           const BreakProfile& profile, RandomStream& rng) {
  return resolve(u, land_on_chord(v, u), sample_break(profile, rng));
}

Probabilities analytic_probability(const ParticleState& v, const UnitVector3& u) {
  const double c = land_on_chord(v, u).value();
  return {(1.0 + c) / 2.0, (1.0 - c) / 2.0};
}

Probabilities epsilon_probability_at(double cos_gamma, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw InvalidParameter("epsilon " + std::to_string(eps) + " outside [0, 1]");
  }
  if (cos_gamma >= eps) return {1.0, 0.0};
  if (cos_gamma <= -eps) return {0.0, 1.0};
  return {(eps + cos_gamma) / (2.0 * eps), (eps - cos_gamma) / (2.0 * eps)};
}

Probabilities analytic_epsilon_probability(const ParticleState& v, const UnitVector3& u,
                                           double eps) {
  return epsilon_probability_at(land_on_chord(v, u).value(), eps);
}

std::vector<SqmOutcome> run_sequence(const ParticleState& v0,
                                     std::span<const UnitVector3> directions,
                                     const BreakProfile& profile, RandomStream& rng) {
  if (directions.empty()) throw InvalidParameter("measurement sequence is empty");
  std::vector<SqmOutcome> outcomes;
  outcomes.reserve(directions.size());
  ParticleState state = v0;
  for (const UnitVector3& u : directions) {
    outcomes.push_back(run_measurement(state, u, profile, rng));
    state.position = outcomes.back().direction;
  }
  return outcomes;
}

}  // namespace aerts::sqm
