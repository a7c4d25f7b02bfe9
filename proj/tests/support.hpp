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

// Test-only generators and independent oracles. Nothing here calls the code
// paths it is used to check.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "aerts/geometry.hpp"
#include "aerts/quantum.hpp"
#include "aerts/random.hpp"

namespace aerts::testing {

using C = std::complex<double>;

/// Uniform direction on the sphere (Archimedes: z uniform, azimuth uniform).
inline UnitVector3 random_direction(RandomStream& rng) {
  const double z = -1.0 + 2.0 * rng.uniform();
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector3::normalized({r * std::cos(phi), r * std::sin(phi), z});
}

/// Random normalized amplitudes with a random global phase.
inline SpinState random_state(RandomStream& rng) {
  C a;
  C b;
  do {
    a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    b = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  } while (std::norm(a) + std::norm(b) < 1e-6);
  return SpinState::normalized(a, b);
}

using Matrix4 = std::array<std::array<C, 4>, 4>;

/// n . sigma written out from the Pauli matrices.
inline std::array<std::array<C, 2>, 2> sigma_dot(Vec3 n) {
  const std::array<std::array<C, 2>, 2> sx{{{0.0, 1.0}, {1.0, 0.0}}};
  const std::array<std::array<C, 2>, 2> sy{{{0.0, C{0.0, -1.0}}, {C{0.0, 1.0}, 0.0}}};
  const std::array<std::array<C, 2>, 2> sz{{{1.0, 0.0}, {0.0, -1.0}}};
  std::array<std::array<C, 2>, 2> m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i][j] = n.x * sx[i][j] + n.y * sy[i][j] + n.z * sz[i][j];
  }
  return m;
}

/// Explicit Kronecker product A (x) B.
inline Matrix4 kron(const std::array<std::array<C, 2>, 2>& a,
                    const std::array<std::array<C, 2>, 2>& b) {
  Matrix4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return m;
}

/// <psi| M |psi> for the singlet written directly as (0, 1, -1, 0)/sqrt(2).
inline double singlet_brute_force(Vec3 c, Vec3 d) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<C, 4> psi{0.0, h, -h, 0.0};
  const Matrix4 m = kron(sigma_dot(c), sigma_dot(d));
  C total = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) total += std::conj(psi[i]) * m[i][j] * psi[j];
  return total.real();
}

/// Exhaustive CHSH maximum over deterministic +-1 assignments.
inline double brute_force_lhv_maximum() {
  double best = -1.0;
  for (int a : {1, -1})
    for (int ap : {1, -1})
      for (int b : {1, -1})
        for (int bp : {1, -1}) {
          const double s = std::abs(a * b - a * bp) + std::abs(ap * bp + ap * b);
          best = std::max(best, s);
        }
  return best;
}

/// 3 sigma binomial half-width.
inline double three_sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

}  // namespace aerts::testing
