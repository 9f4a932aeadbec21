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

#ifndef TASKFORGE_MODEL_HIERARCHY_HPP_
#define TASKFORGE_MODEL_HIERARCHY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taskforge/errors.hpp"

namespace taskforge {

using ClassId = std::uint16_t;

inline constexpr std::string_view kRootClassName = "object";

/// Single-inheritance class forest rooted at the implicit class "object".
///
/// Classes can only be added under an existing parent, so the parent
/// relation is acyclic and every class is reachable from the root by
/// construction. A class is concrete (instantiable) iff it has no children.
class ClassHierarchy {
 public:
  static constexpr ClassId kRoot = 0;

  ClassHierarchy();

  /// Throws DomainError if `name` already exists.
  ClassId add(std::string_view name, ClassId parent = kRoot);

  std::optional<ClassId> find(std::string_view name) const;
  /// Throws DomainError for unknown names.
  ClassId id(std::string_view name) const;

  const std::string& name(ClassId id) const;
  std::optional<ClassId> parent(ClassId id) const;
  std::size_t size() const { return names_.size(); }

  /// Reflexive: every class is a subclass of itself.
  bool is_subclass(ClassId child, ClassId ancestor) const;
  bool is_subclass(std::string_view child, std::string_view ancestor) const;

  bool is_concrete(ClassId id) const;
  /// Concrete classes at or below `id`, in declaration order.
  std::vector<ClassId> concrete_under(ClassId id) const;

  /// Structural equality: same class names with the same parents.
  /// Declaration order is not significant.
  friend bool operator==(const ClassHierarchy& a, const ClassHierarchy& b);

 private:
  void check(ClassId id) const;

  std::vector<std::string> names_;
  std::vector<std::optional<ClassId>> parents_;
  std::vector<std::uint32_t> child_counts_;
  std::map<std::string, ClassId, std::less<>> index_;
};

}  // namespace taskforge

#endif  // TASKFORGE_MODEL_HIERARCHY_HPP_
