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

#include "aerts/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aerts/error.hpp"

namespace aerts {

namespace {

double norm2(const Amplitudes& v) { return std::norm(v[0]) + std::norm(v[1]); }

}  // namespace

SpinState::SpinState(Complex alpha, Complex beta) : amps_{alpha, beta} {
  const double n2 = norm2(amps_);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw InvalidState("spin state is not normalized (|alpha|^2 + |beta|^2 = " +
                       std::to_string(n2) + ")");
  }
}

SpinState SpinState::normalized(Complex alpha, Complex beta) {
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!std::isfinite(n) || n == 0.0) throw InvalidState("cannot normalize a zero spin state");
  return {alpha / n, beta / n};
}

Complex inner(const SpinState& a, const SpinState& b) {
  return std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta();
}

bool ray_equal(const SpinState& a, const SpinState& b) {
  return std::abs(inner(a, b)) > 1.0 - SpinState::kRayTolerance;
}

Operator2 Operator2::spin_observable(const UnitVector3& n) {
  return {n.z(), Complex{n.x(), -n.y()}, Complex{n.x(), n.y()}, -n.z()};
}

Operator2 Operator2::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

Amplitudes Operator2::apply(const Amplitudes& v) const {
  return {m_[0] * v[0] + m_[1] * v[1], m_[2] * v[0] + m_[3] * v[1]};
}

Operator2 operator+(const Operator2& a, const Operator2& b) {
  return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2], a.m_[3] + b.m_[3]};
}

Operator2 operator-(const Operator2& a, const Operator2& b) {
  return {a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2], a.m_[3] - b.m_[3]};
}

Operator2 operator*(const Operator2& a, const Operator2& b) {
  return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
          a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
}

Operator2 operator*(Complex s, const Operator2& a) {
  return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
}

bool approx_equal(const Operator2& a, const Operator2& b, double tol) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (std::abs(a(r, c) - b(r, c)) > tol) return false;
    }
  }
  return true;
}

UnitVector3 pauli_map(const SpinState& s) {
  const Complex ab = std::conj(s.alpha()) * s.beta();
  return UnitVector3::normalized(
      {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(s.alpha()) - std::norm(s.beta())});
}

SpinState state_from_direction(const UnitVector3& v) {
  // Half-angle forms avoid acos near the poles.
  const double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + v.z())));
  const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - v.z())));
  const double phi = std::atan2(v.y(), v.x());
  return SpinState::normalized(std::polar(c, -0.5 * phi), std::polar(s, 0.5 * phi));
}

SpinState state_from_direction(Vec3 v) { return state_from_direction(UnitVector3::normalized(v)); }

Operator2 projector(const UnitVector3& u) {
  const SpinState up = state_from_direction(u);
  const Complex a = up.alpha();
  const Complex b = up.beta();
  return {a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)};
}

Operator2 rotation_operator(const UnitVector3& n, double gamma) {
  return Complex{std::cos(0.5 * gamma), 0.0} * Operator2::identity() -
         Complex{0.0, std::sin(0.5 * gamma)} * Operator2::spin_observable(n);
}

double born_probability(const SpinState& s, const UnitVector3& u) {
  return std::clamp(std::norm(inner(state_from_direction(u), s)), 0.0, 1.0);
}

SpinMeasurement sample_spin_measurement(const SpinState& s, const UnitVector3& u,
                                        RandomStream& rng) {
  if (rng.uniform() < born_probability(s, u)) {
    return {Outcome::Plus, state_from_direction(u)};
  }
  return {Outcome::Minus, state_from_direction(-u)};
}

TwoSpinState::TwoSpinState(const std::array<Complex, 4>& amplitudes) : amps_(amplitudes) {
  double n2 = 0.0;
  for (const Complex& a : amps_) n2 += std::norm(a);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw InvalidState("two-spin state is not normalized");
  }
}

Complex TwoSpinState::expectation(const Operator2& a, const Operator2& b) const {
  // Explicit sum over the 4x4 Kronecker product entries.
  Complex total{0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          total += std::conj(amps_[2 * i + j]) * a(i, k) * b(j, l) * amps_[2 * k + l];
        }
      }
    }
  }
  return total;
}

std::array<Complex, 4> TwoSpinState::amplitudes_in_basis(const UnitVector3& w) const {
  const std::array<SpinState, 2> basis{state_from_direction(w), state_from_direction(-w)};
  std::array<Complex, 4> out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex c{0.0, 0.0};
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          c += std::conj(basis[i].amplitudes()[k]) * std::conj(basis[j].amplitudes()[l]) *
               amps_[2 * k + l];
        }
      }
      out[2 * i + j] = c;
    }
  }
  return out;
}

bool ray_equal(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  Complex overlap{0.0, 0.0};
  for (int i = 0; i < 4; ++i) overlap += std::conj(a[i]) * b[i];
  return std::abs(overlap) > 1.0 - SpinState::kRayTolerance;
}

TwoSpinState singlet_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return TwoSpinState({0.0, h, -h, 0.0});
}

double singlet_expectation(const UnitVector3& c, const UnitVector3& d) {
  return std::clamp(-c.dot(d), -1.0, 1.0);
}

std::pair<Outcome, Outcome> singlet_sample(const UnitVector3& c, const UnitVector3& d,
                                           RandomStream& rng) {
  // sin^2(g/2) = (1 - c.d)/2 is the probability that both sides agree.
  const double p_same = std::clamp(0.5 * (1.0 - c.dot(d)), 0.0, 1.0);
  const Outcome a = outcome_if(rng.uniform() < 0.5);
  const bool same = rng.uniform() < p_same;
  return {a, same ? a : -a};
}

double chsh_value(double e_ab, double e_ab_prime, double e_a_prime_b_prime, double e_a_prime_b) {
  for (double e : {e_ab, e_ab_prime, e_a_prime_b_prime, e_a_prime_b}) {
    if (!(e >= -1.0 && e <= 1.0)) {
      throw InvalidExpectation("expectation value " + std::to_string(e) +
                               " lies outside [-1, 1]");
    }
  }
  return std::abs(e_ab - e_ab_prime) + std::abs(e_a_prime_b_prime + e_a_prime_b);
}

}  // namespace aerts
