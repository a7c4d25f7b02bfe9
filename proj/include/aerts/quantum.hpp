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

#include <array>
#include <complex>
#include <utility>

#include "aerts/geometry.hpp"
#include "aerts/random.hpp"

namespace aerts {

using Complex = std::complex<double>;

/// Unnormalized pair of amplitudes over the z-basis {|+>, |->}.
using Amplitudes = std::array<Complex, 2>;

/// Measurement outcome of a two-valued experiment.
enum class Outcome : int { Minus = -1, Plus = 1 };

constexpr int value(Outcome o) { return static_cast<int>(o); }
constexpr Outcome outcome_if(bool plus) { return plus ? Outcome::Plus : Outcome::Minus; }
constexpr Outcome operator-(Outcome o) { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }

/// Normalized spin-1/2 state alpha|+> + beta|-> in the z-basis.
class SpinState {
 public:
  static constexpr double kNormTolerance = 1e-12;
  /// Two states are the same ray when |<a|b>| exceeds 1 - kRayTolerance.
  static constexpr double kRayTolerance = 1e-10;

  /// Spin up along z-hat.
  SpinState() = default;

  /// Throws InvalidState unless |alpha|^2 + |beta|^2 = 1 within kNormTolerance.
  SpinState(Complex alpha, Complex beta);

  /// Rescales to unit norm; throws InvalidState for the zero vector.
  static SpinState normalized(Complex alpha, Complex beta);

  Complex alpha() const { return amps_[0]; }
  Complex beta() const { return amps_[1]; }
  const Amplitudes& amplitudes() const { return amps_; }

 private:
  Amplitudes amps_{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
};

/// <a|b>.
Complex inner(const SpinState& a, const SpinState& b);

/// Equality up to a global phase.
bool ray_equal(const SpinState& a, const SpinState& b);

/// 2x2 complex matrix, row-major.
class Operator2 {
 public:
  Operator2() = default;
  constexpr Operator2(Complex m00, Complex m01, Complex m10, Complex m11)
      : m_{m00, m01, m10, m11} {}

  static Operator2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Operator2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static Operator2 pauli_y() { return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}; }
  static Operator2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

  /// Spin observable along `n` rescaled to eigenvalues +-1, i.e. n . sigma.
  static Operator2 spin_observable(const UnitVector3& n);

  Complex operator()(int row, int col) const { return m_[2 * row + col]; }

  Operator2 adjoint() const;
  Complex trace() const { return m_[0] + m_[3]; }
  Amplitudes apply(const Amplitudes& v) const;
  Amplitudes apply(const SpinState& s) const { return apply(s.amplitudes()); }

  friend Operator2 operator+(const Operator2& a, const Operator2& b);
  friend Operator2 operator-(const Operator2& a, const Operator2& b);
  friend Operator2 operator*(const Operator2& a, const Operator2& b);
  friend Operator2 operator*(Complex s, const Operator2& a);

 private:
  std::array<Complex, 4> m_{};
};

/// Max-abs entry-wise comparison.
bool approx_equal(const Operator2& a, const Operator2& b, double tol);

/// Bloch vector (2 Re a*b, 2 Im a*b, |a|^2 - |b|^2) of a state.
UnitVector3 pauli_map(const SpinState& s);

/// |+>_v with alpha = cos(theta/2) e^{-i phi/2}, beta = sin(theta/2) e^{i phi/2}.
SpinState state_from_direction(const UnitVector3& v);

/// Same as above for raw vectors; throws InvalidDirection for the zero vector.
SpinState state_from_direction(Vec3 v);

/// |+>_u <+|_u.
Operator2 projector(const UnitVector3& u);

/// cos(gamma/2) I - i sin(gamma/2) n . sigma.
Operator2 rotation_operator(const UnitVector3& n, double gamma);

/// |<+|_u s>|^2.
double born_probability(const SpinState& s, const UnitVector3& u);

struct SpinMeasurement {
  Outcome outcome;
  SpinState post_state;
};

/// Projective measurement along `u`: +1 with probability
/// born_probability(s, u) and post-state |+>_u, otherwise -1 and |->_u.
SpinMeasurement sample_spin_measurement(const SpinState& s, const UnitVector3& u,
                                        RandomStream& rng);

/// Two spin-1/2 state over the z product basis, ordered ++, +-, -+, --.
class TwoSpinState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  explicit TwoSpinState(const std::array<Complex, 4>& amplitudes);

  const std::array<Complex, 4>& amplitudes() const { return amps_; }

  /// <psi| A (x) B |psi>.
  Complex expectation(const Operator2& a, const Operator2& b) const;

  /// Amplitudes over the product basis {|+-_w>} along `w`, same ordering.
  std::array<Complex, 4> amplitudes_in_basis(const UnitVector3& w) const;

 private:
  std::array<Complex, 4> amps_;
};

bool ray_equal(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b);

/// (|+-> - |-+>)/sqrt(2).
TwoSpinState singlet_state();

/// Closed-form singlet correlation -c . d for +-1 outcomes.
double singlet_expectation(const UnitVector3& c, const UnitVector3& d);

/// Joint singlet outcomes drawn from P(+,+) = P(-,-) = sin^2(g/2)/2 and
/// P(+,-) = P(-,+) = cos^2(g/2)/2, with g the angle between c and d.
std::pair<Outcome, Outcome> singlet_sample(const UnitVector3& c, const UnitVector3& d,
                                           RandomStream& rng);

/// |e_ab - e_ab'| + |e_a'b' + e_a'b|. Throws InvalidExpectation for inputs
/// outside [-1, 1].
double chsh_value(double e_ab, double e_ab_prime, double e_a_prime_b_prime, double e_a_prime_b);

}  // namespace aerts
