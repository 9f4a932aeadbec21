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

#include "taskforge/data/similarity.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace taskforge::data {

std::size_t edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::set<std::string> goal_signatures(const TaskRecord& rec) {
  std::map<std::string, std::string> cls;
  for (const auto& e : rec.entities) cls[e.name] = e.cls;
  std::set<std::string> out;
  for (const auto& sg : rec.subgoals) {
    for (const auto& atom : sg.goal) {
      std::string s = atom.at(0) + "(";
      for (std::size_t i = 1; i < atom.size(); ++i) {
        if (i > 1) s += ',';
        auto it = cls.find(atom[i]);
        s += it == cls.end() ? atom[i] : it->second;
      }
      out.insert(s + ")");
    }
  }
  return out;
}

namespace {

struct Features {
  std::vector<std::string> names;
  std::set<std::string> goals;
};

Features features(const TaskRecord& r) {
  Features f;
  for (const auto& act : r.actions) f.names.push_back(act.at(0));
  f.goals = goal_signatures(r);
  return f;
}

double combine(const Features& a, const Features& b, double seq_weight) {
  const std::size_t longest = std::max(a.names.size(), b.names.size());
  const double seq =
      longest == 0 ? 1.0
                   : 1.0 - static_cast<double>(edit_distance(a.names, b.names)) /
                               static_cast<double>(longest);
  std::size_t common = 0;
  for (const auto& s : a.goals) common += b.goals.count(s);
  const std::size_t uni = a.goals.size() + b.goals.size() - common;
  const double jac = uni == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(uni);
  return seq_weight * seq + (1.0 - seq_weight) * jac;
}

}  // namespace

double similarity(const TaskRecord& a, const TaskRecord& b, double seq_weight) {
  if (a.domain_hash != b.domain_hash) {
    throw DomainMismatch("records " + a.id + " and " + b.id + " come from different domains");
  }
  return combine(features(a), features(b), seq_weight);
}

std::vector<double> similarity_matrix(const std::vector<TaskRecord>& records, unsigned workers,
                                      double seq_weight) {
  const std::size_t n = records.size();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    if (records[i].domain_hash != records[0].domain_hash) {
      throw DomainMismatch("dataset mixes domains: record " + records[i].id);
    }
  }
  std::vector<Features> feats;
  feats.reserve(n);
  for (const auto& r : records) feats.push_back(features(r));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      m[i * n + i] = 1.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        m[i * n + j] = combine(feats[i], feats[j], seq_weight);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m[i * n + j] = m[j * n + i];
  }
  return m;
}

}  // namespace taskforge::data
