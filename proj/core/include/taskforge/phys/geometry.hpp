// Copyright 2026 The Taskforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TASKFORGE_PHYS_GEOMETRY_HPP_
#define TASKFORGE_PHYS_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <string_view>

namespace taskforge::phys {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
  double operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

/// Axis-aligned box in the world frame, or EMPTY.
///
/// Intersection is commutative, associative and idempotent with EMPTY
/// absorbing. Degenerate boxes (min == max on an axis) are not empty.
class Aabb {
 public:
  Aabb() = default;  // EMPTY
  Aabb(Vec3 min, Vec3 max);

  static Aabb empty() { return {}; }
  static Aabb centered(Vec3 center, Vec3 half_extents);

  bool is_empty() const { return empty_; }
  const Vec3& min() const { return min_; }
  const Vec3& max() const { return max_; }
  Vec3 center() const { return (min_ + max_) * 0.5; }
  Vec3 size() const { return max_ - min_; }

  Aabb intersect(const Aabb& other) const;
  /// Shrinks each face inwards by `half` (per axis); empty if it inverts.
  Aabb inset(Vec3 half) const;
  bool contains(Vec3 p, double tol = 0.0) const;
  /// True iff `inner` lies inside this box (both non-empty).
  bool contains(const Aabb& inner, double tol = 0.0) const;
  /// Euclidean distance from p to the box (0 inside). Infinite for EMPTY.
  double distance(Vec3 p) const;

  friend bool operator==(const Aabb& a, const Aabb& b);

 private:
  Vec3 min_{};
  Vec3 max_{};
  bool empty_ = true;
};

/// Upright box (full side lengths) or sphere, meters.
struct Shape {
  enum class Kind { kBox, kSphere };
  Kind kind = Kind::kSphere;
  Vec3 dims{};  // full side lengths for boxes
  double radius = 0.0;

  static Shape box(double dx, double dy, double dz) {
    return {Kind::kBox, {dx, dy, dz}, 0.0};
  }
  static Shape sphere(double r) { return {Kind::kSphere, {}, r}; }

  Vec3 half_extents() const {
    return kind == Kind::kBox ? dims * 0.5 : Vec3{radius, radius, radius};
  }
  bool valid() const {
    return kind == Kind::kBox ? dims.x > 0 && dims.y > 0 && dims.z > 0
                              : radius > 0;
  }
  friend bool operator==(const Shape&, const Shape&) = default;
};

struct Pose {
  Vec3 position{};
  double yaw = 0.0;
  bool finite() const { return position.finite() && std::isfinite(yaw); }
  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Reach is a closed ball of radius `reach` around `base`. A held object
/// sits at gripper position + `attach_offset`.
struct RobotModel {
  Vec3 base{0.0, 0.0, 0.75};
  double reach = 1.0;
  Vec3 attach_offset{0.0, 0.0, -0.07};
};

/// Placement volume templates a spawn rule can bind to a predicate.
/// For P(a, b) the first argument is placed relative to the second, except
/// kAttach where the second argument is pinned to the first.
enum class VolumeTemplate {
  kOnTop,
  kInside,
  kLeftOf,   // -x
  kRightOf,  // +x
  kInFront,  // -y
  kBehind,   // +y
  kNear,
  kAttach,
  kState,  // no geometry
};

std::string_view template_name(VolumeTemplate t);
bool parse_template(std::string_view name, VolumeTemplate& out);

}  // namespace taskforge::phys

#endif  // TASKFORGE_PHYS_GEOMETRY_HPP_
