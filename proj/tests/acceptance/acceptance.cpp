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

// Acceptance checks for the generator. Prints one PASS or FAIL line per
// criterion and exits nonzero when any fails.

#include <unistd.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "taskforge/cli/commands.hpp"
#include "taskforge/data/similarity.hpp"
#include "taskforge/dsl/parser.hpp"
#include "taskforge/gen/enumerate.hpp"
#include "taskforge/gen/generator.hpp"
#include "taskforge/phys/checker.hpp"
#include "taskforge/phys/validator.hpp"

using namespace taskforge;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

cli::InputPaths bundled_inputs() {
  const std::string dir = fixtures::data_path("pick_place/");
  return {dir + "domain.pddl", dir + "weights.cfg", dir + "shapes.cfg", dir + "rules.cfg"};
}

fs::path scratch_dir() {
  auto p = fs::temp_directory_path() / ("taskforge_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

// Step-by-step chain check using only the schema tables.
bool chain_holds(const DomainDefinition& dom, const TaskSpec& t) {
  if (t.states.size() != t.sequence.size() + 1) return false;
  for (std::size_t i = 0; i < t.sequence.size(); ++i) {
    const auto& act = dom.action(t.sequence[i].action);
    const auto& b = t.sequence[i].binding;
    for (const auto& lit : act.preconditions) {
      if (t.states[i].contains(instantiate(lit.atom, b)) != lit.positive) return false;
    }
    WorldState next = t.states[i];
    for (const auto& d : act.del_effects) next.erase(instantiate(d, b));
    for (const auto& a : act.add_effects) next.insert(instantiate(a, b));
    if (!(next == t.states[i + 1])) return false;
  }
  return true;
}

Outcome unconstrained_count() {
  cli::CountOptions opts;
  opts.inputs = bundled_inputs();
  opts.length = 15;
  std::ostringstream warm, log;
  cli::cmd_count(opts, warm, log);
  std::ostringstream out;
  const auto t0 = Clock::now();
  const int code = cli::cmd_count(opts, out, log);
  const double ms = seconds_since(t0) * 1e3;
  const bool exact = out.str().find("unconstrained 35184372088832\n") != std::string::npos;
  // 8^15 computed independently.
  std::uint64_t expect = 1;
  for (int i = 0; i < 15; ++i) expect *= 8;
  const bool oracle = expect == 35184372088832ull;
  return {code == 0 && exact && oracle && ms < 1.0,
          "8^15 = " + std::to_string(expect) + ", " + std::to_string(ms) + " ms"};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  const auto mini = fixtures::mini_domain();
  const auto w = uniform_weights(mini);
  std::ostringstream detail;
  bool ok = mini.actions.size() <= 4;
  for (std::size_t len = 1; len <= 5; ++len) {
    std::set<std::string> oracle, seen;
    enumerate_valid_sequences(mini, len, 3, [&](const TaskSpec& t) { oracle.insert(sequence_key(t)); });
    GenerationConfig cfg;
    cfg.length = len;
    cfg.max_entities = 3;
    std::size_t outside = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      cfg.seed = seed;
      const auto r = generate_sequence(mini, w, cfg);
      if (!r.ok()) {
        ++outside;
        continue;
      }
      const auto key = sequence_key(*r.task);
      if (!oracle.count(key)) ++outside;
      seen.insert(key);
    }
    ok = ok && outside == 0 && seen == oracle;
    detail << " L" << len << ":" << seen.size() << "/" << oracle.size();
  }
  const double s = seconds_since(t0);
  detail << ", " << s << " s";
  return {ok && s < 60.0, "generated/oracle" + detail.str()};
}

Outcome soundness() {
  const auto t0 = Clock::now();
  const auto b = fixtures::load_bundled();
  std::size_t checked = 0, failures = 0;
  for (std::uint64_t seed = 0; checked < 1000; ++seed) {
    GenerationConfig cfg;
    cfg.length = 3 + seed % 4;
    cfg.seed = seed;
    const auto r = generate_sequence(b.dom, b.weights, cfg);
    if (!r.ok()) continue;
    ++checked;
    if (!revalidate_task(b.dom, *r.task).empty() || !chain_holds(b.dom, *r.task)) ++failures;
  }
  const double s = seconds_since(t0);
  return {failures == 0 && s < 30.0,
          std::to_string(checked) + " tasks, " + std::to_string(failures) + " failures, " +
              std::to_string(s) + " s"};
}

Outcome physical_properties() {
  const auto t0 = Clock::now();
  // (a) mutual LeftOf.
  std::size_t empty_hits = 0;
  const int runs = 1000;
  {
    fixtures::Geo g;
    const auto x = g.add("a", "Block");
    const auto y = g.add("b", "Ball");
    g.fact("LeftOf", x, y);
    g.fact("LeftOf", y, x);
    for (int i = 0; i < runs; ++i) {
      empty_hits += g.spawn(static_cast<std::uint64_t>(i)).failure == phys::FailureKind::kEmptyVolume;
    }
  }
  // (b) the only placement region lies beyond the reach radius.
  std::size_t unreachable_hits = 0;
  {
    fixtures::Geo g;
    g.setup.robot.base = {-1.0, 0.0, 0.75};
    const auto table = g.add("table", "Table");
    const auto apple = g.add("apple", "Ball");
    g.fact("OnTop", apple, table);
    for (int i = 0; i < runs; ++i) {
      unreachable_hits +=
          g.spawn(static_cast<std::uint64_t>(i)).failure == phys::FailureKind::kUnreachable;
    }
  }
  // (c) re-check feasible scenes from bundled tasks and random relation sets.
  std::size_t scenes = 0, violations = 0;
  const auto b = fixtures::load_bundled();
  for (std::uint64_t seed = 0; scenes < 5000; ++seed) {
    GenerationConfig cfg;
    cfg.length = 3 + seed % 4;
    cfg.seed = seed;
    const auto r = generate_sequence(b.dom, b.weights, cfg);
    if (!r.ok()) continue;
    const auto report = phys::validate_task(b.dom, *r.task, b.setup, seed);
    for (std::size_t i = 0; i < report.subgoals.size(); ++i) {
      const auto& v = report.subgoals[i];
      if (!v.feasible) continue;
      ++scenes;
      if (!phys::recheck_scene(b.dom, r.task->states[i], b.setup, *v.scene).empty()) ++violations;
    }
  }
  Rng rng(77);
  for (std::uint64_t trial = 0; scenes < 10000; ++trial) {
    const auto g = fixtures::random_geo(rng);
    const auto out = g.spawn(trial);
    if (!out.feasible()) continue;
    ++scenes;
    if (!phys::recheck_scene(g.dom, g.state, g.setup, *out.scene).empty()) ++violations;
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << "empty-volume " << empty_hits << "/" << runs << ", unreachable " << unreachable_hits << "/"
    << runs << ", " << violations << " violations in " << scenes << " scenes, " << s << " s";
  return {empty_hits == runs && unreachable_hits == runs && violations == 0 && s < 120.0, d.str()};
}

Outcome determinism(const fs::path& dir) {
  const auto t0 = Clock::now();
  std::string first;
  bool same = true;
  std::ostringstream log;
  for (int rep = 0; rep < 3; ++rep) {
    cli::GenerateOptions opts;
    opts.inputs = bundled_inputs();
    opts.n = 1000;
    opts.seed = 17;
    opts.workers = 2;
    opts.out = (dir / ("det" + std::to_string(rep) + ".jsonl")).string();
    if (cli::cmd_generate(opts, log) != cli::kExitOk) same = false;
    const auto text = fixtures::read_text(opts.out);
    if (rep == 0) first = text;
    else if (text != first) same = false;
  }
  const double s = seconds_since(t0);
  return {same && !first.empty() && s < 60.0,
          "3 runs of 1000 tasks, " + std::to_string(first.size()) + " bytes, " +
              std::to_string(s) + " s"};
}

Outcome parser_round_trip() {
  std::size_t failures = 0;
  auto check = [&](const DomainDefinition& d) {
    const auto back = dsl::parse_domain(dsl::serialize_domain(d));
    if (!back.ok() || !(*back.value == d)) ++failures;
  };
  check(fixtures::parse_or_throw(fixtures::read_text(fixtures::data_path("pick_place/domain.pddl"))));
  Rng rng(500);
  for (int i = 0; i < 500; ++i) check(fixtures::random_domain(rng));
  return {failures == 0, "501 domains, " + std::to_string(failures) + " failures"};
}

data::TaskRecord fixture_record(std::string id, std::vector<std::string> actions,
                                std::vector<data::Atom> goals) {
  data::TaskRecord r;
  r.id = std::move(id);
  r.domain_hash = "h";
  r.entities = {{"g", "Gripper"}, {"a1", "Apple"}, {"a2", "Apple"}, {"t", "Table"}};
  for (auto& a : actions) r.actions.push_back({a});
  data::SubgoalRecord sg;
  sg.goal = std::move(goals);
  r.subgoals.push_back(sg);
  return r;
}

Outcome similarity_values() {
  const auto a = fixture_record("a", {"Approach", "Grasp", "Place"},
                                {{"Holding", "g", "a1"}, {"OnTop", "a1", "t"}});
  const auto d = fixture_record("d", {"Move", "Open"}, {{"IsOpen", "g"}});
  const auto c = fixture_record("c", {"Approach", "Grasp", "Move"}, {{"Holding", "g", "a2"}});
  const double same = data::similarity(a, a);
  const double disjoint = data::similarity(a, d);
  const double hand = data::similarity(a, c);
  // One substitution in three steps; one of two lifted goals shared.
  const double expect = 0.5 * (1.0 - 1.0 / 3.0) + 0.5 * (1.0 / 2.0);
  std::ostringstream det;
  det.precision(12);
  det << "identity " << same << ", disjoint " << disjoint << ", pair " << hand;
  return {same == 1.0 && disjoint == 0.0 && std::fabs(hand - expect) <= 1e-9 &&
              std::fabs(hand - 0.58333) <= 1e-5,
          det.str()};
}

Outcome weighted_sampling() {
  const auto dom = fixtures::parse_or_throw(R"((define (domain w)
  (:action X :parameters () :precondition (and) :effect (and))
  (:action Y :parameters () :precondition (and) :effect (and))
  (:action Z :parameters () :precondition (and) :effect (and))))");
  const auto raw = fixtures::value_or_throw(dsl::parse_weights("action X 1\naction Y 2\naction Z 4\n"),
                                            "weights");
  const auto w = resolve_weights(dom, raw);
  const int draws = 100000;
  std::vector<double> counts(3, 0.0);
  GenerationConfig cfg;
  cfg.length = 1;
  for (int i = 0; i < draws; ++i) {
    cfg.seed = static_cast<std::uint64_t>(i);
    const auto r = generate_sequence(dom, w, cfg);
    if (r.ok()) counts[r.task->sequence[0].action] += 1;
  }
  const double p[3] = {1.0 / 7, 2.0 / 7, 4.0 / 7};
  double stat = 0.0;
  bool within = true;
  for (int k = 0; k < 3; ++k) {
    const double e = draws * p[k];
    stat += (counts[k] - e) * (counts[k] - e) / e;
    within = within && std::fabs(counts[k] - e) <= 3.0 * std::sqrt(draws * p[k] * (1 - p[k]));
  }
  boost::math::chi_squared dist(2.0);
  const double pval = boost::math::cdf(boost::math::complement(dist, stat));
  std::ostringstream d;
  d << "counts " << counts[0] << "/" << counts[1] << "/" << counts[2] << ", chi2 " << stat
    << ", p " << pval;
  return {within && pval > 0.01, d.str()};
}

Outcome scale(const fs::path& dir) {
  const auto t0 = Clock::now();
  cli::GenerateOptions opts;
  opts.inputs = bundled_inputs();
  opts.n = 10000;
  opts.len_min = 3;
  opts.len_max = 6;
  opts.workers = 8;
  opts.out = (dir / "scale.jsonl").string();
  std::ostringstream log;
  const int code = cli::cmd_generate(opts, log);
  const double s = seconds_since(t0);
  const auto m = nlohmann::json::parse(fixtures::read_text(opts.out + ".manifest.json"));
  const double rate = m["stats"]["viability_rate"];
  const std::size_t written = m["stats"]["records_written"];
  std::ostringstream d;
  d << written << " tasks, viability rate " << rate << " (reference "
    << m["stats"]["reference_viability_rate"].get<double>() << "), " << s << " s";
  return {code == 0 && written == 10000 && rate > 0.0 && rate < 1.0 && s < 600.0, d.str()};
}

}  // namespace

int main() {
  const fs::path dir = scratch_dir();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"unconstrained count", unconstrained_count},
      {"oracle equivalence", oracle_equivalence},
      {"symbolic soundness", soundness},
      {"physical validation properties", physical_properties},
      {"determinism", [&] { return determinism(dir); }},
      {"parser round trip", parser_round_trip},
      {"similarity metric", similarity_values},
      {"weighted sampling", weighted_sampling},
      {"scale smoke test", [&] { return scale(dir); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return failed == 0 ? 0 : 1;
}
