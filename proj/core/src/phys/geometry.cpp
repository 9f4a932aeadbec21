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

#include "taskforge/phys/geometry.hpp"

#include <algorithm>
#include <limits>

namespace taskforge::phys {

Aabb::Aabb(Vec3 min, Vec3 max) : min_(min), max_(max), empty_(false) {
  for (int a = 0; a < 3; ++a) {
    if (!(min_[a] <= max_[a])) empty_ = true;  // also catches NaN
  }
  if (empty_) min_ = max_ = Vec3{};
}

Aabb Aabb::centered(Vec3 center, Vec3 half_extents) {
  return {center - half_extents, center + half_extents};
}

Aabb Aabb::intersect(const Aabb& o) const {
  if (empty_ || o.empty_) return {};
  return {{std::max(min_.x, o.min_.x), std::max(min_.y, o.min_.y),
           std::max(min_.z, o.min_.z)},
          {std::min(max_.x, o.max_.x), std::min(max_.y, o.max_.y),
           std::min(max_.z, o.max_.z)}};
}

Aabb Aabb::inset(Vec3 half) const {
  if (empty_) return {};
  return {min_ + half, max_ - half};
}

bool Aabb::contains(Vec3 p, double tol) const {
  if (empty_) return false;
  for (int a = 0; a < 3; ++a) {
    if (p[a] < min_[a] - tol || p[a] > max_[a] + tol) return false;
  }
  return true;
}

bool Aabb::contains(const Aabb& inner, double tol) const {
  if (empty_ || inner.empty_) return false;
  return contains(inner.min_, tol) && contains(inner.max_, tol);
}

double Aabb::distance(Vec3 p) const {
  if (empty_) return std::numeric_limits<double>::infinity();
  Vec3 d;
  for (int a = 0; a < 3; ++a) {
    d[a] = std::max({min_[a] - p[a], 0.0, p[a] - max_[a]});
  }
  return d.norm();
}

bool operator==(const Aabb& a, const Aabb& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
  return a.min_ == b.min_ && a.max_ == b.max_;
}

namespace {
constexpr std::pair<std::string_view, VolumeTemplate> kTemplates[] = {
    {"ontop", VolumeTemplate::kOnTop},     {"inside", VolumeTemplate::kInside},
    {"leftof", VolumeTemplate::kLeftOf},   {"rightof", VolumeTemplate::kRightOf},
    {"infront", VolumeTemplate::kInFront}, {"behind", VolumeTemplate::kBehind},
    {"near", VolumeTemplate::kNear},       {"attach", VolumeTemplate::kAttach},
    {"state", VolumeTemplate::kState},
};
}  // namespace

std::string_view template_name(VolumeTemplate t) {
  for (const auto& [name, value] : kTemplates) {
    if (value == t) return name;
  }
  return "?";
}

bool parse_template(std::string_view name, VolumeTemplate& out) {
  for (const auto& [n, value] : kTemplates) {
    if (n == name) {
      out = value;
      return true;
    }
  }
  return false;
}

}  // namespace taskforge::phys
