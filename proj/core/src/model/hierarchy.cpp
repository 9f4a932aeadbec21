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

#include "taskforge/model/hierarchy.hpp"

namespace taskforge {

ClassHierarchy::ClassHierarchy() {
  names_.emplace_back(kRootClassName);
  parents_.emplace_back(std::nullopt);
  child_counts_.push_back(0);
  index_.emplace(std::string(kRootClassName), kRoot);
}

ClassId ClassHierarchy::add(std::string_view name, ClassId parent) {
  check(parent);
  if (index_.find(name) != index_.end()) {
    throw DomainError("duplicate class '" + std::string(name) + "'");
  }
  if (names_.size() >= 0xFFFF) throw DomainError("too many classes");
  const auto id = static_cast<ClassId>(names_.size());
  names_.emplace_back(name);
  parents_.emplace_back(parent);
  child_counts_.push_back(0);
  ++child_counts_[parent];
  index_.emplace(std::string(name), id);
  return id;
}

std::optional<ClassId> ClassHierarchy::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClassId ClassHierarchy::id(std::string_view name) const {
  auto found = find(name);
  if (!found) throw DomainError("unknown class '" + std::string(name) + "'");
  return *found;
}

const std::string& ClassHierarchy::name(ClassId id) const {
  check(id);
  return names_[id];
}

std::optional<ClassId> ClassHierarchy::parent(ClassId id) const {
  check(id);
  return parents_[id];
}

bool ClassHierarchy::is_subclass(ClassId child, ClassId ancestor) const {
  check(child);
  check(ancestor);
  std::optional<ClassId> cur = child;
  while (cur) {
    if (*cur == ancestor) return true;
    cur = parents_[*cur];
  }
  return false;
}

bool ClassHierarchy::is_subclass(std::string_view child,
                                 std::string_view ancestor) const {
  return is_subclass(id(child), id(ancestor));
}

bool ClassHierarchy::is_concrete(ClassId id) const {
  check(id);
  return child_counts_[id] == 0;
}

std::vector<ClassId> ClassHierarchy::concrete_under(ClassId id) const {
  check(id);
  std::vector<ClassId> out;
  for (ClassId c = 0; c < names_.size(); ++c) {
    if (child_counts_[c] == 0 && is_subclass(c, id)) out.push_back(c);
  }
  return out;
}

void ClassHierarchy::check(ClassId id) const {
  if (id >= names_.size()) {
    throw DomainError("unknown class id " + std::to_string(id));
  }
}

bool operator==(const ClassHierarchy& a, const ClassHierarchy& b) {
  if (a.names_.size() != b.names_.size()) return false;
  for (ClassId i = 0; i < a.names_.size(); ++i) {
    auto other = b.find(a.names_[i]);
    if (!other) return false;
    const auto pa = a.parents_[i];
    const auto pb = b.parents_[*other];
    if (pa.has_value() != pb.has_value()) return false;
    if (pa && a.names_[*pa] != b.names_[*pb]) return false;
  }
  return true;
}

}  // namespace taskforge
