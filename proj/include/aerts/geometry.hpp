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

#include <cmath>

namespace aerts {

/// Plain Cartesian 3-vector used for intermediate arithmetic.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;

  constexpr double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

/// A point on the unit sphere. Construction enforces |v| = 1 within
/// `kTolerance`; `normalized` rescales arbitrary non-zero vectors.
class UnitVector3 {
 public:
  static constexpr double kTolerance = 1e-12;

  /// The north pole, z-hat.
  UnitVector3() = default;

  /// Throws InvalidDirection unless x^2 + y^2 + z^2 = 1 within kTolerance.
  UnitVector3(double x, double y, double z);

  /// Throws InvalidDirection for zero or non-finite vectors.
  static UnitVector3 normalized(Vec3 v);

  /// Direction with polar angle `theta` from z-hat and azimuth `phi`.
  static UnitVector3 from_polar(double theta, double phi);

  static UnitVector3 x_axis() { return {1.0, 0.0, 0.0}; }
  static UnitVector3 y_axis() { return {0.0, 1.0, 0.0}; }
  static UnitVector3 z_axis() { return {0.0, 0.0, 1.0}; }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  Vec3 vec() const { return v_; }

  double dot(const UnitVector3& o) const { return v_.dot(o.v_); }
  Vec3 cross(const UnitVector3& o) const { return v_.cross(o.v_); }

  /// Angle in [0, pi] between the two directions.
  double angle_to(const UnitVector3& o) const;

  UnitVector3 operator-() const;
  friend bool operator==(const UnitVector3&, const UnitVector3&) = default;

 private:
  struct Unchecked {};
  UnitVector3(Vec3 v, Unchecked) : v_(v) {}

  Vec3 v_{0.0, 0.0, 1.0};
};

/// Component-wise comparison with an absolute tolerance.
bool approx_equal(const UnitVector3& a, const UnitVector3& b, double tol);

/// A unit vector orthogonal to `u`, chosen deterministically: u x e normalized,
/// where e is the first of x-hat, y-hat, z-hat along which |u| has its smallest
/// component.
UnitVector3 canonical_perpendicular(const UnitVector3& u);

/// Axis of the right-handed rotation that carries `from` onto `to` through
/// the smaller angle. Parallel inputs yield z-hat (any axis works for a zero
/// angle); antiparallel inputs yield canonical_perpendicular(from).
UnitVector3 rotation_axis(const UnitVector3& from, const UnitVector3& to);

}  // namespace aerts
