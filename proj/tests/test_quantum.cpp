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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aerts/error.hpp"
#include "aerts/kernels.hpp"
#include "aerts/quantum.hpp"
#include "support.hpp"

using namespace aerts;
using aerts::testing::random_direction;
using aerts::testing::random_state;

namespace {

const double kH = 1.0 / std::sqrt(2.0);
constexpr double kPi = std::numbers::pi;

UnitVector3 in_xz(double angle) { return UnitVector3::from_polar(angle, 0.0); }

}  // namespace

TEST_CASE("spin states validate normalization") {
  CHECK_NOTHROW(SpinState(1.0, 0.0));
  CHECK_THROWS_AS(SpinState(1.0, 1.0), InvalidState);
  CHECK_THROWS_AS(SpinState::normalized(0.0, 0.0), InvalidState);
  CHECK_THROWS_AS(state_from_direction(Vec3{0.0, 0.0, 0.0}), InvalidDirection);
}

TEST_CASE("pauli_map examples") {
  CHECK(approx_equal(pauli_map(SpinState(1.0, 0.0)), UnitVector3::z_axis(), 1e-15));
  CHECK(approx_equal(pauli_map(SpinState(0.0, 1.0)), -UnitVector3::z_axis(), 1e-15));
  // 2 Re(a* b) = 2 * 1/2 = 1, Im = 0, |a|^2 - |b|^2 = 0.
  CHECK(approx_equal(pauli_map(SpinState(kH, kH)), UnitVector3::x_axis(), 1e-12));
}

TEST_CASE("state_from_direction examples") {
  CHECK(ray_equal(state_from_direction(UnitVector3::z_axis()), SpinState(1.0, 0.0)));
  CHECK(ray_equal(state_from_direction(-UnitVector3::z_axis()), SpinState(0.0, 1.0)));
  // theta = pi/2, phi = 0: cos(pi/4) and sin(pi/4).
  CHECK(ray_equal(state_from_direction(UnitVector3::x_axis()), SpinState(kH, kH)));
  // A global phase does not change the ray.
  const Complex phase = std::polar(1.0, 0.7);
  CHECK(ray_equal(SpinState(kH, kH), SpinState(phase * kH, phase * kH)));
  CHECK_FALSE(ray_equal(SpinState(kH, kH), SpinState(kH, -kH)));
}

TEST_CASE("ray round trip both ways") {
  RandomStream rng(11);
  for (int i = 0; i < 1000; ++i) {
    const UnitVector3 v = random_direction(rng);
    REQUIRE(approx_equal(pauli_map(state_from_direction(v)), v, 1e-10));
    const SpinState s = random_state(rng);
    REQUIRE(ray_equal(state_from_direction(pauli_map(s)), s));
  }
}

TEST_CASE("projector examples and algebra") {
  CHECK(approx_equal(projector(UnitVector3::z_axis()), Operator2(1.0, 0.0, 0.0, 0.0), 1e-15));
  CHECK(approx_equal(projector(-UnitVector3::z_axis()), Operator2(0.0, 0.0, 0.0, 1.0), 1e-15));
  // Outer product of (1, 1)/sqrt(2) written out by hand.
  CHECK(approx_equal(projector(UnitVector3::x_axis()), Operator2(0.5, 0.5, 0.5, 0.5), 1e-12));

  RandomStream rng(12);
  for (int i = 0; i < 200; ++i) {
    const UnitVector3 u = random_direction(rng);
    const Operator2 p = projector(u);
    REQUIRE(approx_equal(p * p, p, 1e-10));
    REQUIRE(approx_equal(p.adjoint(), p, 1e-10));
    REQUIRE(std::abs(p.trace() - 1.0) < 1e-12);
    REQUIRE(approx_equal(p + projector(-u), Operator2::identity(), 1e-10));
  }
}

TEST_CASE("rotation operator examples") {
  const UnitVector3 n = UnitVector3::normalized({1.0, 2.0, 3.0});
  CHECK(approx_equal(rotation_operator(n, 0.0), Operator2::identity(), 1e-15));
  CHECK(approx_equal(rotation_operator(n, 2.0 * kPi), Complex{-1.0, 0.0} * Operator2::identity(),
                     1e-12));

  RandomStream rng(13);
  for (int i = 0; i < 200; ++i) {
    const Operator2 r = rotation_operator(random_direction(rng), 10.0 * rng.uniform());
    REQUIRE(approx_equal(r.adjoint() * r, Operator2::identity(), 1e-10));
  }
}

TEST_CASE("rotation carries |+>_u to |+>_v about u x v") {
  RandomStream rng(14);
  for (int i = 0; i < 1000; ++i) {
    const UnitVector3 u = random_direction(rng);
    const UnitVector3 v = random_direction(rng);
    const double gamma = std::acos(std::clamp(u.dot(v), -1.0, 1.0));
    const Amplitudes rotated = rotation_operator(rotation_axis(u, v), gamma).apply(state_from_direction(u));
    REQUIRE(ray_equal(SpinState(rotated[0], rotated[1]), state_from_direction(v)));

    // Equivalently, rotating v about v x u by the same angle reaches u.
    const Amplitudes back = rotation_operator(rotation_axis(v, u), gamma).apply(state_from_direction(v));
    REQUIRE(ray_equal(SpinState(back[0], back[1]), state_from_direction(u)));
  }
}

TEST_CASE("antiparallel rotation uses the canonical perpendicular") {
  const UnitVector3 u = UnitVector3::normalized({0.3, -0.2, 0.9});
  const Amplitudes r = rotation_operator(rotation_axis(u, -u), kPi).apply(state_from_direction(u));
  CHECK(ray_equal(SpinState(r[0], r[1]), state_from_direction(-u)));
}

TEST_CASE("spin observable identities") {
  const Operator2 sx = Operator2::pauli_x();
  const Operator2 sy = Operator2::pauli_y();
  const Operator2 sz = Operator2::pauli_z();
  // With S = sigma/2 (hbar = 1): [S_x, S_y] = i S_z  <=>  [sx, sy] = 2i sz.
  CHECK(approx_equal(sx * sy - sy * sx, Complex{0.0, 2.0} * sz, 1e-15));
  CHECK(approx_equal(Operator2::spin_observable(UnitVector3::x_axis()), sx, 0.0));

  // <+|_u S_n |+>_u = 0 whenever n is orthogonal to u.
  RandomStream rng(15);
  for (int i = 0; i < 500; ++i) {
    const UnitVector3 u = random_direction(rng);
    const UnitVector3 n = UnitVector3::normalized(u.cross(random_direction(rng)));
    const SpinState up = state_from_direction(u);
    const Amplitudes sn_up = Operator2::spin_observable(n).apply(up);
    const Complex m = std::conj(up.alpha()) * sn_up[0] + std::conj(up.beta()) * sn_up[1];
    REQUIRE(std::abs(m) < 1e-12);
  }
}

TEST_CASE("born probability matches cos^2(gamma/2)") {
  const UnitVector3 u = UnitVector3::z_axis();
  CHECK(born_probability(state_from_direction(u), u) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(born_probability(state_from_direction(in_xz(kPi / 2)), u) - 0.5) < 1e-12);

  // Inner-product route vs closed form at gamma = pi/3: cos^2(pi/6) = 3/4.
  const SpinState s = state_from_direction(in_xz(kPi / 3));
  const double via_inner = std::norm(inner(SpinState(1.0, 0.0), s));
  CHECK(std::abs(via_inner - 0.75) < 1e-12);
  CHECK(std::abs(born_probability(s, u) - 0.75) < 1e-12);

  RandomStream rng(16);
  for (int i = 0; i < 1000; ++i) {
    const SpinState st = random_state(rng);
    const UnitVector3 dir = random_direction(rng);
    REQUIRE(std::abs(born_probability(st, dir) + born_probability(st, -dir) - 1.0) < 1e-12);
    const double g = pauli_map(st).angle_to(dir);
    REQUIRE(std::abs(born_probability(st, dir) - std::pow(std::cos(g / 2), 2)) < 1e-10);
  }
}

TEST_CASE("spin measurement sampling") {
  const UnitVector3 u = UnitVector3::normalized({1.0, -1.0, 0.5});
  RandomStream rng(17);
  for (int i = 0; i < 1000; ++i) {
    const SpinMeasurement up = sample_spin_measurement(state_from_direction(u), u, rng);
    REQUIRE(up.outcome == Outcome::Plus);
    REQUIRE(ray_equal(up.post_state, state_from_direction(u)));
    const SpinMeasurement down = sample_spin_measurement(state_from_direction(-u), u, rng);
    REQUIRE(down.outcome == Outcome::Minus);
    REQUIRE(ray_equal(down.post_state, state_from_direction(-u)));
  }

  const auto f = kernels::born_plus_frequency(in_xz(kPi / 2), UnitVector3::z_axis(), 1000000, 42);
  CHECK(std::abs(f.p_hat - 0.5) <= 3 * 0.0005);
}

TEST_CASE("singlet state") {
  const TwoSpinState s = singlet_state();
  double n2 = 0.0;
  for (const Complex& a : s.amplitudes()) n2 += std::norm(a);
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-15));

  RandomStream rng(18);
  for (int i = 0; i < 200; ++i) {
    const UnitVector3 w = random_direction(rng);
    REQUIRE(ray_equal(s.amplitudes_in_basis(w), s.amplitudes()));
    // Marginal on A: |amp(+,+)|^2 + |amp(+,-)|^2 in the w basis.
    const auto a = s.amplitudes_in_basis(w);
    REQUIRE(std::abs(std::norm(a[0]) + std::norm(a[1]) - 0.5) < 1e-12);
    REQUIRE(std::abs(s.expectation(projector(w), Operator2::identity()).real() - 0.5) < 1e-12);
  }
}

TEST_CASE("singlet expectation examples and brute force") {
  const UnitVector3 z = UnitVector3::z_axis();
  CHECK(singlet_expectation(z, z) == -1.0);
  CHECK(singlet_expectation(z, UnitVector3::x_axis()) == 0.0);
  CHECK(std::abs(singlet_expectation(z, in_xz(kPi / 4)) + std::sqrt(2.0) / 2) < 1e-12);

  RandomStream rng(19);
  const TwoSpinState s = singlet_state();
  for (int i = 0; i < 1000; ++i) {
    const UnitVector3 c = random_direction(rng);
    const UnitVector3 d = random_direction(rng);
    const double oracle = testing::singlet_brute_force(c.vec(), d.vec());
    REQUIRE(std::abs(singlet_expectation(c, d) - oracle) < 1e-12);
    const Complex lib = s.expectation(Operator2::spin_observable(c), Operator2::spin_observable(d));
    REQUIRE(std::abs(lib.real() - oracle) < 1e-12);
    REQUIRE(std::abs(lib.imag()) < 1e-12);
  }
}

TEST_CASE("singlet sampler") {
  RandomStream rng(20);
  const UnitVector3 c = UnitVector3::normalized({0.2, 0.4, -0.7});
  for (int i = 0; i < 10000; ++i) {
    const auto [a, b] = singlet_sample(c, c, rng);
    REQUIRE(a == -b);
    const auto [a2, b2] = singlet_sample(c, -c, rng);
    REQUIRE(a2 == b2);
  }

  const std::uint64_t n = 1000000;
  const UnitVector3 z = UnitVector3::z_axis();
  const UnitVector3 d = in_xz(kPi / 4);
  const auto e = kernels::singlet_correlation(z, d, n, 42);
  CHECK(std::abs(e.value + std::sqrt(2.0) / 2) <= 3 * e.standard_error);

  // Four-cell law against the explicit amplitudes: P(+,+) = |<+c +d|psi>|^2.
  const TwoSpinState s = singlet_state();
  const double p_pp = s.expectation(projector(z), projector(d)).real();
  const double g = z.angle_to(d);
  CHECK(std::abs(p_pp - std::pow(std::sin(g / 2), 2) / 2) < 1e-12);
  const double p_pm = s.expectation(projector(z), projector(-d)).real();
  CHECK(std::abs(p_pm - std::pow(std::cos(g / 2), 2) / 2) < 1e-12);

  // No-signaling: A's marginal stays 1/2 whatever B measures.
  for (const UnitVector3& remote : {z, d, UnitVector3::y_axis()}) {
    std::uint64_t plus_a = 0;
    std::uint64_t plus_b = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      RandomStream t = RandomStream::for_trial(99, i);
      const auto [oa, ob] = singlet_sample(z, remote, t);
      plus_a += oa == Outcome::Plus;
      plus_b += ob == Outcome::Plus;
    }
    CHECK(std::abs(static_cast<double>(plus_a) / n - 0.5) <= 3 * 0.0005);
    CHECK(std::abs(static_cast<double>(plus_b) / n - 0.5) <= 3 * 0.0005);
  }
}

TEST_CASE("chsh_value") {
  const double h = std::sqrt(2.0) / 2;
  CHECK(std::abs(chsh_value(-h, h, -h, -h) - 2.0 * std::sqrt(2.0)) < 1e-12);
  CHECK(chsh_value(-1, 1, 1, 1) == 4.0);
  CHECK(chsh_value(0, 0, 0, 0) == 0.0);
  CHECK_THROWS_AS(chsh_value(1.5, 0, 0, 0), InvalidExpectation);
  CHECK_THROWS_AS(chsh_value(0, 0, 0, NAN), InvalidExpectation);
}
