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

#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "taskforge/errors.hpp"
#include "taskforge/model/semantics.hpp"
#include "taskforge/phys/checker.hpp"
#include "taskforge/phys/validator.hpp"

using namespace taskforge;
using namespace taskforge::phys;
using fixtures::Geo;

namespace {

Aabb random_box(Rng& rng) {
  Vec3 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  Vec3 b{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  if (rng.below(5) == 0) return Aabb::empty();
  return Aabb({std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)},
              {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)});
}

bool inside_shape(const Shape& s, Vec3 c, Vec3 p, double grow) {
  if (s.kind == Shape::Kind::kSphere) return (p - c).norm() <= s.radius + grow;
  const Vec3 h = s.half_extents();
  for (int a = 0; a < 3; ++a) {
    if (std::fabs(p[a] - c[a]) > h[a] + grow) return false;
  }
  return true;
}

// Grid search for a point inside both shapes, each grown by `grow`.
bool grid_overlap(const Shape& a, Vec3 pa, const Shape& b, Vec3 pb, double grow, double step) {
  const Aabb region = Aabb::centered(pa, a.half_extents() + Vec3{grow, grow, grow})
                          .intersect(Aabb::centered(pb, b.half_extents() + Vec3{grow, grow, grow}));
  if (region.is_empty()) return false;
  for (double x = std::floor(region.min().x / step) * step; x <= region.max().x; x += step) {
    for (double y = std::floor(region.min().y / step) * step; y <= region.max().y; y += step) {
      for (double z = std::floor(region.min().z / step) * step; z <= region.max().z; z += step) {
        const Vec3 p{x, y, z};
        if (inside_shape(a, pa, p, grow) && inside_shape(b, pb, p, grow)) return true;
      }
    }
  }
  return false;
}

Shape shrink(const Shape& s, double d) {
  if (s.kind == Shape::Kind::kSphere) return Shape::sphere(s.radius - d);
  return Shape::box(s.dims.x - 2 * d, s.dims.y - 2 * d, s.dims.z - 2 * d);
}

Shape random_shape(Rng& rng) {
  if (rng.below(2)) return Shape::sphere(rng.uniform(0.02, 0.08));
  return Shape::box(rng.uniform(0.03, 0.15), rng.uniform(0.03, 0.15), rng.uniform(0.03, 0.15));
}

}  // namespace

TEST_SUITE("phys") {

TEST_CASE("box intersection algebra") {
  Rng rng(4);
  for (int i = 0; i < 2000; ++i) {
    const Aabb a = random_box(rng), b = random_box(rng), c = random_box(rng);
    CHECK(a.intersect(b) == b.intersect(a));
    CHECK(a.intersect(b).intersect(c) == a.intersect(b.intersect(c)));
    CHECK(a.intersect(a) == a);
    CHECK(a.intersect(Aabb::empty()).is_empty());
  }
}

TEST_CASE("collision examples") {
  const auto s = Shape::sphere(0.05);
  CHECK_FALSE(shapes_collide(s, {0, 0, 0}, s, {0.2, 0, 0}, 0.001));
  CHECK(shapes_collide(s, {0, 0, 0}, s, {0, 0, 0}, 0.001));
  // Touching, or overlapping by less than the tolerance, is contact.
  CHECK_FALSE(shapes_collide(s, {0, 0, 0}, s, {0.1, 0, 0}, 0.001));
  CHECK_FALSE(shapes_collide(s, {0, 0, 0}, s, {0.0995, 0, 0}, 0.001));
  CHECK(shapes_collide(s, {0, 0, 0}, s, {0.098, 0, 0}, 0.001));
  const auto b = Shape::box(0.1, 0.1, 0.1);
  CHECK_FALSE(shapes_collide(b, {0, 0, 0}, b, {0.1, 0, 0}, 0.001));
  CHECK(shapes_collide(b, {0, 0, 0}, b, {0.09, 0.05, 0}, 0.001));
  CHECK_FALSE(shapes_collide(b, {0, 0, 0}, s, {0.1, 0, 0}, 0.001));
  // Sphere near a box corner: AABBs overlap but the shapes do not.
  CHECK_FALSE(shapes_collide(b, {0, 0, 0}, s, {0.09, 0.09, 0.09}, 0.001));
}

TEST_CASE("collision test agrees with a grid oracle") {
  Rng rng(99);
  const double tol = 0.001;
  const double step = 0.004;
  int positives = 0, negatives = 0;
  for (int i = 0; i < 250; ++i) {
    const Shape a = random_shape(rng), b = random_shape(rng);
    const Vec3 pa{0, 0, 0};
    const Vec3 pb{rng.uniform(-0.12, 0.12), rng.uniform(-0.12, 0.12), rng.uniform(-0.12, 0.12)};
    const bool hit = shapes_collide(a, pa, b, pb, tol);
    if (grid_overlap(shrink(a, 2 * tol), pa, shrink(b, 2 * tol), pb, 0.0, step)) CHECK(hit);
    if (hit) CHECK(grid_overlap(a, pa, b, pb, step * std::sqrt(3.0), step));
    (hit ? positives : negatives)++;
  }
  CHECK(positives > 20);
  CHECK(negatives > 20);
}

TEST_CASE("reachability is a closed ball") {
  RobotModel r;
  CHECK(check_reachability(r, Pose{{1.0, 0, 0.75}, 0}));
  CHECK_FALSE(check_reachability(r, Pose{{1.0001, 0, 0.75}, 0}));
  CHECK(check_reachability(r, Pose{r.base, 0}));
}

TEST_CASE("ontop volume sits on the table top face") {
  Geo g;
  const auto table = g.add("table", "Table");
  const auto apple = g.add("apple", "Ball");
  g.fact("OnTop", apple, table);
  const Aabb v = g.volume(apple);
  REQUIRE_FALSE(v.is_empty());
  // Table top at 0.725 + 0.025; apple radius 0.04. Footprint 0.1..1.1 x -0.5..0.5.
  CHECK(v.min().z == doctest::Approx(0.79).epsilon(1e-8));
  CHECK(v.max().z == doctest::Approx(0.79).epsilon(1e-8));
  CHECK(v.min().x == doctest::Approx(0.14));
  CHECK(v.max().x == doctest::Approx(1.06));
  CHECK(v.min().y == doctest::Approx(-0.46));
  CHECK(v.max().y == doctest::Approx(0.46));
  // With nothing constraining it the volume is the workspace shrunk by the radius.
  Geo free;
  const auto lone = free.add("apple", "Ball");
  CHECK(free.volume(lone) == free.setup.workspace.inset({0.04, 0.04, 0.04}));
}

TEST_CASE("mutual leftof is provably empty") {
  // x_a <= x_b - w and x_b <= x_a - w sum to 0 <= -2w: no solution for w > 0.
  Geo g;
  const auto a = g.add("a", "Block");
  const auto b = g.add("b", "Block");
  g.fact("LeftOf", a, b);
  g.fact("LeftOf", b, a);
  CHECK(g.volume(a).is_empty());
  CHECK(g.volume(b).is_empty());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto out = g.spawn(seed);
    CHECK_FALSE(out.feasible());
    CHECK(out.failure == FailureKind::kEmptyVolume);
    CHECK(out.attempts == 0);
  }
}

TEST_CASE("longer contradictory cycles are empty too") {
  Geo g;
  const auto a = g.add("a", "Block");
  const auto b = g.add("b", "Ball");
  const auto c = g.add("c", "Block");
  g.fact("LeftOf", a, b);
  g.fact("LeftOf", b, c);
  g.fact("RightOf", a, c);
  CHECK(g.spawn(1).failure == FailureKind::kEmptyVolume);
  // An object taller than its container cannot rest inside it.
  Geo h;
  h.setup.shapes[h.dom.hierarchy.id("Block")] = Shape::box(0.1, 0.1, 0.3);
  const auto bin = h.add("bin", "Bin");
  const auto big = h.add("big", "Block");
  h.fact("Inside", big, bin);
  CHECK(h.spawn(1).failure == FailureKind::kEmptyVolume);
}

TEST_CASE("adding a spatial fact never enlarges a volume") {
  Rng rng(21);
  const char* preds[] = {"OnTop", "LeftOf", "RightOf", "InFront", "Behind", "Near", "Inside"};
  for (int trial = 0; trial < 300; ++trial) {
    Geo g;
    std::vector<EntityId> ids{g.add("table", "Table")};
    const char* classes[] = {"Ball", "Block", "Bin"};
    for (int i = 0; i < 3; ++i) ids.push_back(g.add("e" + std::to_string(i), classes[rng.below(3)]));
    SceneState placed;
    if (rng.below(2)) {
      const auto& box = g.setup.workspace;
      placed.placements[ids[1]] = {Pose{box.center(), 0}, *g.setup.shape_of(g.state.entity(ids[1]).cls), false};
    }
    for (int k = 0; k < 3; ++k) {
      const auto a = ids[1 + rng.below(3)];
      const auto b = ids[rng.below(4)];
      if (a == b) continue;
      const Aabb before = g.volume(a, placed);
      g.fact(preds[rng.below(7)], a, b);
      const Aabb after = g.volume(a, placed);
      if (!after.is_empty()) CHECK(before.contains(after, 1e-9));
    }
  }
}

TEST_CASE("single placement on the table is feasible and checks out") {
  Geo g;
  const auto table = g.add("table", "Table");
  const auto apple = g.add("apple", "Ball");
  g.fact("OnTop", apple, table);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto out = g.spawn(seed);
    REQUIRE(out.feasible());
    CHECK(out.attempts <= g.setup.max_attempts);
    CHECK(recheck_scene(g.dom, g.state, g.setup, *out.scene).empty());
    CHECK(check_collisions(*out.scene).empty());
    CHECK(out.scene->placements.at(table).fixed);
  }
  CHECK(g.spawn(5).scene == g.spawn(5).scene);
}

TEST_CASE("volume outside the reach radius is unreachable") {
  Geo g;
  g.setup.robot.base = {-1.0, 0.0, 0.75};  // nearest table point is 1.14 m away
  const auto table = g.add("table", "Table");
  const auto apple = g.add("apple", "Ball");
  g.fact("OnTop", apple, table);
  const Aabb v = g.volume(apple);
  REQUIRE(v.distance(g.setup.robot.base) > g.setup.robot.reach);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto out = g.spawn(seed);
    CHECK_FALSE(out.feasible());
    CHECK(out.failure == FailureKind::kUnreachable);
  }
}

TEST_CASE("two blocks cannot share a bin that is too small") {
  // Bin interior 0.2 x 0.2; each block 0.15 wide, so any two placements
  // side by side need 0.3 along some axis.
  Geo g;
  g.setup.shapes[g.dom.hierarchy.id("Block")] = Shape::box(0.15, 0.15, 0.05);
  const auto bin = g.add("bin", "Bin");
  const auto a = g.add("a", "Block");
  const auto b = g.add("b", "Block");
  g.fact("Inside", a, bin);
  g.fact("Inside", b, bin);

  // Exhaustive grid over both footprints relative to the bin center.
  const Shape blk = Shape::box(0.15, 0.15, 0.05);
  bool any_free = false;
  for (double ax = -0.025; ax <= 0.025 + 1e-12; ax += 0.005) {
    for (double ay = -0.025; ay <= 0.025 + 1e-12; ay += 0.005) {
      for (double bx = -0.025; bx <= 0.025 + 1e-12; bx += 0.005) {
        for (double by = -0.025; by <= 0.025 + 1e-12; by += 0.005) {
          if (!shapes_collide(blk, {ax, ay, 0}, blk, {bx, by, 0}, g.setup.tolerance)) any_free = true;
        }
      }
    }
  }
  REQUIRE_FALSE(any_free);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto out = g.spawn(seed);
    CHECK_FALSE(out.feasible());
    const bool kind_ok = out.failure == FailureKind::kCollision ||
                         out.failure == FailureKind::kAttemptsExhausted;
    CHECK(kind_ok);
  }
}

TEST_CASE("entities forced onto the same pose collide provably") {
  Geo g;
  const auto t1 = g.add("table", "Table");
  const auto t2 = g.add("table_2", "Table");
  (void)t1;
  (void)t2;
  const auto out = g.spawn(3);
  CHECK(out.failure == FailureKind::kCollision);
}

TEST_CASE("holding pins the object to the gripper") {
  Geo g;
  const auto table = g.add("table", "Table");
  const auto grip = g.add("gripper", "Gripper");
  const auto ball = g.add("ball", "Ball");
  const auto block = g.add("block", "Block");
  g.fact("Holding", grip, ball);
  g.fact("OnTop", block, table);
  g.fact("Near", grip, block);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto out = g.spawn(seed);
    REQUIRE(out.feasible());
    const Vec3 pg = out.scene->placements.at(grip).pose.position;
    const Vec3 pb = out.scene->placements.at(ball).pose.position;
    CHECK((pb - (pg + g.setup.robot.attach_offset)).norm() < 1e-12);
    CHECK(recheck_scene(g.dom, g.state, g.setup, *out.scene).empty());
  }
}

TEST_CASE("recheck flags broken scenes") {
  Geo g;
  const auto table = g.add("table", "Table");
  const auto apple = g.add("apple", "Ball");
  const auto cube = g.add("cube", "Block");
  g.fact("OnTop", apple, table);
  g.fact("LeftOf", cube, apple);
  auto out = g.spawn(2);
  REQUIRE(out.feasible());
  REQUIRE(recheck_scene(g.dom, g.state, g.setup, *out.scene).empty());
  auto moved = *out.scene;
  moved.placements[apple].pose.position.z += 0.05;
  CHECK_FALSE(recheck_scene(g.dom, g.state, g.setup, moved).empty());
  auto swapped = *out.scene;
  std::swap(swapped.placements[apple].pose.position.x, swapped.placements[cube].pose.position.x);
  swapped.placements[cube].pose.position.x += 0.5;
  CHECK_FALSE(recheck_scene(g.dom, g.state, g.setup, swapped).empty());
  auto missing = *out.scene;
  missing.placements.erase(cube);
  CHECK_FALSE(recheck_scene(g.dom, g.state, g.setup, missing).empty());
}

TEST_CASE("random fact sets: every feasible scene passes the re-checker") {
  Rng rng(31337);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Geo g = fixtures::random_geo(rng);
    const auto out = g.spawn(trial);
    if (!out.feasible()) {
      ++infeasible;
      continue;
    }
    ++feasible;
    const auto problems = recheck_scene(g.dom, g.state, g.setup, *out.scene);
    CHECK_MESSAGE(problems.empty(), (problems.empty() ? "" : problems[0]));
  }
  CHECK(feasible > 100);
  CHECK(infeasible > 10);
}

TEST_CASE("missing configuration is reported before spawning") {
  Geo g;
  g.setup.rules[*g.dom.find_predicate("Near")].reset();
  const auto a = g.add("a", "Ball");
  const auto b = g.add("b", "Block");
  g.fact("Near", a, b);
  Rng rng(1);
  CHECK_THROWS_AS(spawn_scene(g.dom, g.state, g.setup, rng), ConfigError);
  TaskSpec t;
  t.states = {g.state};
  CHECK_THROWS_AS(validate_task(g.dom, t, g.setup, 1), ConfigError);
  Geo h;
  h.setup.shapes[h.dom.hierarchy.id("Ball")].reset();
  h.add("a", "Ball");
  TaskSpec u;
  u.states = {h.state};
  CHECK_THROWS_AS(validate_task(h.dom, u, h.setup, 1), ConfigError);
}

TEST_CASE("validate_task aggregates subgoal verdicts") {
  const auto b = fixtures::load_bundled();
  WorldState s0 = make_initial_state(b.dom);
  const auto apple = s0.add_entity({"apple_1", b.dom.hierarchy.id("Apple")});
  const EntityId gripper{0}, table{1};
  TaskSpec task;
  task.seed = 5;
  task.states.push_back(s0);
  auto step = [&](const char* name, std::vector<EntityId> args) {
    const auto act = make_action(b.dom, task.states.back(), name, std::move(args));
    REQUIRE(check_preconditions(b.dom, task.states.back(), act).ok());
    task.states.push_back(apply_postconditions(b.dom, task.states.back(), act));
    task.sequence.push_back(act);
  };
  step("Approach", {gripper, apple});
  step("Grasp", {gripper, apple, table});
  step("Place", {gripper, apple, table});
  const auto ok = validate_task(b.dom, task, b.setup, 9);
  REQUIRE(ok.subgoals.size() == 4);
  CHECK(ok.feasible());
  CHECK_FALSE(ok.first_failure());

  // Moving the table off the workspace leaves no room to rest the apple on it.
  step("Approach", {gripper, apple});
  step("Grasp", {gripper, apple, table});
  auto far = b.setup;
  far.fixed[b.dom.hierarchy.id("Table")] = Vec3{3.0, 0.0, 0.725};
  const auto bad = validate_task(b.dom, task, far, 9);
  REQUIRE(bad.subgoals.size() == 6);
  CHECK_FALSE(bad.feasible());
  REQUIRE(bad.first_failure());
  CHECK(*bad.first_failure() == 3);
  CHECK(bad.subgoals[3].failure == FailureKind::kEmptyVolume);
  CHECK(bad.subgoals[4].failure == FailureKind::kEmptyVolume);
  CHECK(bad.subgoals[5].feasible);
  CHECK(bad.subgoals[5].evaluated);

  far.short_circuit = true;
  const auto cut = validate_task(b.dom, task, far, 9);
  CHECK_FALSE(cut.feasible());
  CHECK(cut.subgoals[3].evaluated);
  CHECK_FALSE(cut.subgoals[4].evaluated);
  CHECK_FALSE(cut.subgoals[5].evaluated);
}

}  // TEST_SUITE
