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

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "taskforge/data/hash.hpp"
#include "taskforge/data/record.hpp"
#include "taskforge/data/similarity.hpp"
#include "taskforge/dsl/parser.hpp"
#include "taskforge/gen/enumerate.hpp"
#include "taskforge/gen/generator.hpp"
#include "taskforge/phys/validator.hpp"

using namespace taskforge;

namespace {

const fixtures::Bundled& bundled() {
  static const fixtures::Bundled b = fixtures::load_bundled();
  return b;
}

void BM_ParseDomain(benchmark::State& state) {
  const std::string text = fixtures::read_text(fixtures::data_path("pick_place/domain.pddl"));
  for (auto _ : state) benchmark::DoNotOptimize(dsl::parse_domain(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDomain);

void BM_GenerateSequence(benchmark::State& state) {
  const auto& b = bundled();
  GenerationConfig cfg;
  cfg.length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(generate_sequence(b.dom, b.weights, cfg));
  }
}
BENCHMARK(BM_GenerateSequence)->Arg(3)->Arg(6)->Arg(12);

void BM_ValidateTask(benchmark::State& state) {
  const auto& b = bundled();
  std::vector<TaskSpec> tasks;
  GenerationConfig cfg;
  cfg.length = 5;
  for (cfg.seed = 0; tasks.size() < 64; ++cfg.seed) {
    if (auto r = generate_sequence(b.dom, b.weights, cfg); r.ok()) tasks.push_back(*r.task);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phys::validate_task(b.dom, tasks[i % tasks.size()], b.setup, i));
    ++i;
  }
}
BENCHMARK(BM_ValidateTask);

void BM_SimilarityMatrix(benchmark::State& state) {
  const auto& b = bundled();
  const std::string hash = data::domain_hash(b.dom);
  std::vector<data::TaskRecord> recs;
  GenerationConfig cfg;
  for (cfg.seed = 0; recs.size() < static_cast<std::size_t>(state.range(0)); ++cfg.seed) {
    cfg.length = 3 + cfg.seed % 4;
    if (auto r = generate_sequence(b.dom, b.weights, cfg); r.ok()) {
      recs.push_back(data::build_record(b.dom, hash, *r.task, {}, b.setup, {}));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(data::similarity_matrix(recs));
}
BENCHMARK(BM_SimilarityMatrix)->Arg(100)->Arg(400);

void BM_CountUnconstrained(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_unconstrained(8, 15));
}
BENCHMARK(BM_CountUnconstrained);

}  // namespace

BENCHMARK_MAIN();
