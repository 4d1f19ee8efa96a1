/*
 * Copyright (C) 2026 The tescps Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#include <tescps/scenario/cps.hpp>

#include <doctest.h>

using namespace tescps;
using namespace tescps::cps;

namespace {

Rig random_rig(std::size_t index, Eigen::Vector2d start)
{
  Rig rig;
  const auto k = std::to_string(index + 1);
  rig.ids = {"R" + k, "B" + k, "I" + k};
  rig.start = start;
  rig.plans = random_plans(index);
  return rig;
}

Rig scripted_rig(std::size_t index, Eigen::Vector2d start, Plan plan)
{
  auto rig = random_rig(index, start);
  rig.plans = scripted_plans(std::move(plan));
  return rig;
}

Action move_at(TimeStamp t, Direction d, double power)
{
  Action a;
  a.time = t;
  a.kind = ActionKind::Move;
  a.direction = d;
  a.power = power;
  return a;
}

const double level4 = 2000 * ws_per_wh - 40;

} // namespace

TEST_SUITE("cps")
{
  TEST_CASE("rel examples")
  {
    const auto rb = rel_RB("R", "B");
    CHECK(rb.related({Event::move("R", Direction::N, 20)}, {Event::discharge("B", 20)}));
    CHECK(rb.related({Event::discharge("B", 20)}, {Event::move("R", Direction::N, 20)}));
    CHECK_FALSE(rb.related({Event::read_bat("R", 2000)}, {Event::read("B", 1999)}));
    CHECK(rb.related({Event::read_bat("R", 2000)}, {Event::read("B", 2000)}));
    CHECK_FALSE(rb.related({Event::move("R", Direction::N, 20)}, {Event::discharge("B", 19)}));

    const auto fr = rel_FR("I", "R", PhysicsConfig{});
    CHECK(fr.related({Event::move("I", Direction::N, 40)}, {Event::move("R", Direction::N, 20)}));
    CHECK(fr.related({Event::loc("I", {5, 5})}, {Event::charge_switch("R", Switch::On)}));

    const auto f12 = rel_F12("I1", "I2");
    const Observation o1{{Event::loc("I1", {3, 3})}, 1};
    const Observation o2{{Event::loc("I2", {3, 3})}, 1};
    CHECK(f12.related(o1.observable, o2.observable));
    const auto excl = kappa_excl(f12);
    const auto e1 = field_interface("I1", PhysicsConfig{});
    const auto e2 = field_interface("I2", PhysicsConfig{});
    CHECK_FALSE(excl(o1, o2, e1, e2));
    CHECK(excl(o1, {o2.observable, 2}, e1, e2));
  }

  TEST_CASE("realize")
  {
    const auto rig = golden_rig();
    const auto proj = realize(rig, rig.plans(rig, {4, 0}));
    CHECK(proj.robot.size() == 4);
    CHECK(proj.battery.size() == 2);
    CHECK(proj.field.size() == 3);

    Action charge;
    charge.time = 1;
    charge.kind = ActionKind::Charge;
    charge.rate = 10;
    CHECK_THROWS_AS(realize(rig, {charge}), std::invalid_argument);
    CHECK_THROWS_AS(realize(rig, {move_at(2, Direction::N, 1), move_at(1, Direction::N, 1)}), std::invalid_argument);
  }

  TEST_CASE("battery acceptor")
  {
    const auto battery = battery_component(golden_rig());
    const TesPrefix column{{{Event::discharge("B", 20)}, 2}, {{Event::read("B", level4)}, 4}};
    CHECK(battery.accept(column) != Verdict::Fail);
    const TesPrefix wrong{{{Event::discharge("B", 20)}, 2}, {{Event::read("B", level4 + 1)}, 4}};
    CHECK(battery.accept(wrong) == Verdict::Fail);
  }

  TEST_CASE("field acceptor")
  {
    const auto field = field_component(golden_rig());
    const TesPrefix column{{{Event::loc("I", {0, 0})}, 1},
                           {{Event::move("I", Direction::N, 40)}, 2},
                           {{Event::loc("I", {0, 1})}, 3}};
    CHECK(field.accept(column) != Verdict::Fail);
    const TesPrefix off{{{Event::loc("I", {0, 0})}, 1},
                        {{Event::move("I", Direction::N, 40)}, 2},
                        {{Event::loc("I", {0, 2})}, 3}};
    CHECK(field.accept(off) == Verdict::Fail);
  }

  TEST_CASE("golden composite")
  {
    const auto system = field_robot_battery(golden_rig());
    const auto gen = system.generate({4, 0});
    REQUIRE(gen.size() == 1);
    const auto& p = *gen.begin();
    CHECK(system.accept(p) != Verdict::Fail);
    REQUIRE(p.size() == 4);
    CHECK(p[0].observable == Observable{Event::read_loc("R", {0, 0}), Event::loc("I", {0, 0})});
    CHECK(p[1].observable == Observable{Event::move("R", Direction::N, 20), Event::discharge("B", 20),
                                        Event::move("I", Direction::N, 40)});
    CHECK(p[2].observable == Observable{Event::read_loc("R", {0, 1}), Event::loc("I", {0, 1})});
    CHECK(p[3].observable == Observable{Event::read_bat("R", level4), Event::read("B", level4)});
  }

  TEST_CASE("robot x battery pairs every move with a discharge")
  {
    const auto rig = random_rig(0, {10, 10});
    const auto rb = robot_battery(rig);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      for (const auto& p : rb.generate({15, seed}))
      {
        CHECK(rb.accept(p) != Verdict::Fail);
        for (const auto& o : p)
          for (const auto& e : o.observable)
            if (e.kind() == EventKind::Move)
            {
              const auto has_discharge = std::any_of(o.observable.begin(), o.observable.end(), [](const Event& x) {
                return x.kind() == EventKind::Discharge && x.agent() == "B1";
              });
              CHECK(has_discharge);
            }
      }
  }

  TEST_CASE("composite rejects equal locations")
  {
    const auto r1 = random_rig(0, {3, 3});
    const auto r2 = random_rig(1, {3, 3});
    const auto system = composite_system(r1, r2);
    const TesPrefix together{{{Event::read_loc("R1", {3, 3}), Event::loc("I1", {3, 3}), Event::read_loc("R2", {3, 3}),
                               Event::loc("I2", {3, 3})},
                              1}};
    CHECK(system.accept(together) == Verdict::Fail);
    const TesPrefix staggered{{{Event::read_loc("R1", {3, 3}), Event::loc("I1", {3, 3})}, 1},
                              {{Event::read_loc("R2", {3, 3}), Event::loc("I2", {3, 3})}, 2}};
    CHECK(system.accept(staggered) != Verdict::Fail);
  }

  TEST_CASE("nested form equals the regrouped form")
  {
    const auto r1 = scripted_rig(0, {2, 2}, {move_at(1, Direction::N, 20), {TimeStamp(2), ActionKind::ReadLoc},
                                             {TimeStamp(3), ActionKind::ReadBat}});
    const auto r2 = scripted_rig(1, {8, 8}, {{TimeStamp(3, 2), ActionKind::ReadLoc},
                                             move_at(TimeStamp(5, 2), Direction::W, 10),
                                             {TimeStamp(7, 2), ActionKind::ReadLoc}});
    const auto nested = composite_system(r1, r2);
    const auto regrouped = regrouped_system(r1, r2);
    const auto gen = nested.generate({3, 0});
    CHECK_FALSE(gen.empty());
    CHECK(gen == regrouped.generate({3, 0}));
    for (const auto& p : gen)
      CHECK(regrouped.accept(p) != Verdict::Fail);

    const auto q1 = random_rig(0, {5, 5});
    const auto q2 = random_rig(1, {15, 15});
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      CHECK(composite_system(q1, q2).generate({3, seed}) == regrouped_system(q1, q2).generate({3, seed}));
  }

  TEST_CASE("generators are deterministic and accepted")
  {
    const auto rig = random_rig(0, {10, 10});
    for (const auto& c : {robot_component(rig), battery_component(rig), field_component(rig)})
      for (std::uint64_t seed = 0; seed < 10; ++seed)
      {
        const auto gen = c.generate({12, seed});
        CHECK(gen == c.generate({12, seed}));
        for (const auto& p : gen)
        {
          CHECK(validate_prefix(p) == Verdict::Pass);
          CHECK(c.accept(p) != Verdict::Fail);
          for (const auto& e : p.events())
            CHECK(c.interface.contains(e));
        }
      }
  }
}
