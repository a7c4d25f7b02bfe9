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

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "aerts/geometry.hpp"
#include "aerts/quantum.hpp"
#include "aerts/random.hpp"

/// Sphere model of a spin-1/2 measurement: a particle on the unit sphere
/// falls orthogonally onto an elastic stretched between u and -u; the
/// elastic breaks and the fragment holding the particle drags it to an end.
namespace aerts::sqm {

/// Position of the particle on the sphere.
struct ParticleState {
  UnitVector3 position;
};

/// Signed position along the stretched elastic: +1 at the u end, -1 at the
/// -u end, 0 at the centre of the sphere. The elastic has total length 2,
/// so the fragments on either side of x have lengths 1 - x and 1 + x.
class ChordCoordinate {
 public:
  ChordCoordinate() = default;
  /// Throws InvalidParameter outside [-1, 1].
  explicit ChordCoordinate(double x);

  double value() const { return x_; }
  double length_to_plus_end() const { return 1.0 - x_; }
  double length_to_minus_end() const { return 1.0 + x_; }

  friend auto operator<=>(const ChordCoordinate&, const ChordCoordinate&) = default;

 private:
  double x_ = 0.0;
};

/// Breakable everywhere with equal likelihood.
struct Uniform {};

/// Breaks only at `point`.
struct FixedPoint {
  ChordCoordinate point;
};

/// Breaks uniformly in [-epsilon, epsilon]; unbreakable outside.
struct Epsilon {
  double epsilon = 1.0;
};

using BreakProfile = std::variant<Uniform, FixedPoint, Epsilon>;

/// Throws InvalidParameter for epsilon outside [0, 1].
BreakProfile epsilon_profile(double epsilon);
BreakProfile fixed_point_profile(double x0);

struct SqmOutcome {
  /// The reached end, sign * u. Also the particle's new position.
  UnitVector3 direction;
  Outcome sign = Outcome::Plus;
  ChordCoordinate break_point;
  ChordCoordinate landing;
  /// Set when break_point == landing; the outcome is then +1 by convention.
  bool boundary = false;
};

struct Probabilities {
  double plus = 0.0;
  double minus = 0.0;
};

/// Orthogonal fall onto the diameter: x = v . u.
ChordCoordinate land_on_chord(const ParticleState& v, const UnitVector3& u);

/// Break point: Uniform -> U[-1, 1), FixedPoint -> x0, Epsilon -> U[-eps, eps).
/// Consumes exactly one draw for the random profiles and none for FixedPoint.
ChordCoordinate sample_break(const BreakProfile& profile, RandomStream& rng);

/// Outcome for a known break point; the deterministic core of every run.
SqmOutcome resolve(const UnitVector3& u, ChordCoordinate landing, ChordCoordinate break_point);

/// One measurement e_u with the given elastic.
SqmOutcome run_measurement(const ParticleState& v, const UnitVector3& u,
                           const BreakProfile& profile, RandomStream& rng);

/// Uniform elastic: ((1 + cos g)/2, (1 - cos g)/2).
Probabilities analytic_probability(const ParticleState& v, const UnitVector3& u);

/// Piecewise probabilities for an elastic breakable only in [-eps, eps].
/// Throws InvalidParameter for eps outside [0, 1].
Probabilities analytic_epsilon_probability(const ParticleState& v, const UnitVector3& u,
                                           double eps);

/// Same law for a known landing coordinate.
Probabilities epsilon_probability_at(double cos_gamma, double eps);

/// Runs the measurements in order, each starting from the previous outcome's
/// direction. Throws InvalidParameter for an empty list.
std::vector<SqmOutcome> run_sequence(const ParticleState& v0,
                                     std::span<const UnitVector3> directions,
                                     const BreakProfile& profile, RandomStream& rng);

}  // namespace aerts::sqm
