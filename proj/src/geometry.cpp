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

#include "aerts/geometry.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "aerts/error.hpp"

namespace aerts {

UnitVector3::UnitVector3(double x, double y, double z) : v_{x, y, z} {
  const double n2 = v_.dot(v_);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolerance) {
    throw InvalidDirection("vector is not unit length (|v|^2 = " + std::to_string(n2) + ")");
  }
}

UnitVector3 UnitVector3::normalized(Vec3 v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n == 0.0) {
    throw InvalidDirection("cannot normalize a zero or non-finite vector");
  }
  return UnitVector3((1.0 / n) * v, Unchecked{});
}

UnitVector3 UnitVector3::from_polar(double theta, double phi) {
  return normalized({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                     std::cos(theta)});
}

double UnitVector3::angle_to(const UnitVector3& o) const {
  return std::acos(std::clamp(dot(o), -1.0, 1.0));
}

UnitVector3 UnitVector3::operator-() const { return UnitVector3(-v_, Unchecked{}); }

bool approx_equal(const UnitVector3& a, const UnitVector3& b, double tol) {
  return std::abs(a.x() - b.x()) <= tol && std::abs(a.y() - b.y()) <= tol &&
         std::abs(a.z() - b.z()) <= tol;
}

UnitVector3 canonical_perpendicular(const UnitVector3& u) {
  const std::array<double, 3> mag{std::abs(u.x()), std::abs(u.y()), std::abs(u.z())};
  const auto axis = std::min_element(mag.begin(), mag.end()) - mag.begin();
  Vec3 e{};
  if (axis == 0) e.x = 1.0;
  if (axis == 1) e.y = 1.0;
  if (axis == 2) e.z = 1.0;
  return UnitVector3::normalized(u.cross(UnitVector3::normalized(e)));
}

UnitVector3 rotation_axis(const UnitVector3& from, const UnitVector3& to) {
  const Vec3 n = from.cross(to);
  // Below this the cross product is dominated by rounding.
  if (n.norm() > 1e-12) return UnitVector3::normalized(n);
  if (from.dot(to) > 0.0) return UnitVector3::z_axis();
  return canonical_perpendicular(from);
}

}  // namespace aerts
