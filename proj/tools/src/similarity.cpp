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

#include <charconv>
#include <fstream>
#include <ostream>

#include "taskforge/cli/commands.hpp"
#include "taskforge/data/export.hpp"
#include "taskforge/data/similarity.hpp"

namespace taskforge::cli {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

int cmd_similarity(const SimilarityOptions& opts, std::ostream& out, std::ostream& log) {
  std::vector<data::TaskRecord> records;
  try {
    std::ifstream in(opts.dataset, std::ios::binary);
    if (!in) {
      log << "error: cannot open '" << opts.dataset << "'\n";
      return kExitConfig;
    }
    records = data::import_tasks(in);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  std::vector<double> m;
  try {
    m = data::similarity_matrix(records, opts.workers, opts.seq_weight);
  } catch (const data::DomainMismatch& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.out.empty() && opts.out != "-") {
    file.open(opts.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      log << "error: cannot write '" << opts.out << "'\n";
      return kExitConfig;
    }
    sink = &file;
  }
  const std::size_t n = records.size();
  *sink << "id";
  for (const auto& r : records) *sink << '\t' << r.id;
  *sink << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    *sink << records[i].id;
    for (std::size_t j = 0; j < n; ++j) *sink << '\t' << shortest(m[i * n + j]);
    *sink << '\n';
  }
  sink->flush();
  return *sink ? kExitOk : kExitConfig;
}

}  // namespace taskforge::cli
