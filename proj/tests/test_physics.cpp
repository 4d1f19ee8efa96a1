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

#include <tescps/scenario/physics.hpp>

#include <doctest.h>

using namespace tescps;
using namespace tescps::cps;

TEST_SUITE("physics")
{
  TEST_CASE("displacement")
  {
    PhysicsConfig cfg;
    cfg.mass = 2.0;
    const Eigen::Vector2d at(1, 1);
    CHECK(displacement(0, 1, 4.0, cfg, at) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(displacement(3, 3, 4.0, cfg, at) == 0.0);
    cfg.friction = 0.0;
    CHECK(displacement(0, 1, 4.0, cfg, at) == 0.0);
    CHECK_THROWS_AS(displacement(0, 1, -1.0, cfg, at), std::invalid_argument);
    CHECK_THROWS_AS(displacement(2, 1, 1.0, cfg, at), std::invalid_argument);
  }

  TEST_CASE("grip caps the traction")
  {
    PhysicsConfig cfg;
    cfg.mass = 2.0;
    cfg.friction = 0.5;
    // cap = 1/4 * 0.5 * 2 * 9.81 = 2.4525 N; s = 1/2 * (cap / m) * t^2
    const double expected = 0.5 * (0.25 * 0.5 * 2.0 * 9.81 / 2.0);
    CHECK(displacement(0, 1, 100.0, cfg, {0, 0}) == doctest::Approx(expected).epsilon(1e-12));

    cfg.patches.push_back({Eigen::AlignedBox2d(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1)), 0.0});
    CHECK(cfg.friction_at({0.5, 0.5}) == 0.0);
    CHECK(cfg.friction_at({5, 5}) == 0.5);
    CHECK(displacement(0, 1, 4.0, cfg, {0.5, 0.5}) == 0.0);
  }

  TEST_CASE("lev and battery level")
  {
    PhysicsConfig cfg;
    cfg.capacity = 10 * ws_per_wh;
    CHECK(lev(TesPrefix{}, "B", cfg) == 0.0);
    CHECK(battery_level(TesPrefix{}, "B", cfg) == cfg.capacity);

    const TesPrefix two_seconds{{{Event::discharge("B", 3600)}, 0}, {{Event::read("B", 28800)}, 2}};
    CHECK(lev(two_seconds, "B", cfg) == doctest::Approx(7200).epsilon(1e-12));
    CHECK(battery_level(two_seconds, "B", cfg) / ws_per_wh == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(battery_read_value(two_seconds, 1, "B", cfg) == doctest::Approx(28800).epsilon(1e-12));
    CHECK_THROWS_AS(battery_read_value(two_seconds, 0, "B", cfg), std::invalid_argument);
    CHECK_THROWS_AS(battery_read_value(two_seconds, 7, "B", cfg), std::out_of_range);

    const TesPrefix drained{{{Event::discharge("B", 3600)}, 0}, {{Event::read("B", 0)}, 20}};
    CHECK(battery_level(drained, "B", cfg) == 0.0);

    const TesPrefix recharged{{{Event::discharge("B", 100)}, 0},
                              {{Event::charge_rate("B", 1000)}, 10},
                              {{Event::read("B", 36000)}, 20}};
    CHECK(battery_level(recharged, "B", cfg) == cfg.capacity);
    const TesPrefix partial{{{Event::discharge("B", 100)}, 0},
                            {{Event::charge_rate("B", 50)}, 10},
                            {{Event::read("B", 0)}, 20}};
    CHECK(battery_level(partial, "B", cfg) == doctest::Approx(cfg.capacity - 500).epsilon(1e-12));
  }

  TEST_CASE("reads do not end a rate")
  {
    PhysicsConfig cfg;
    const TesPrefix with_read{{{Event::discharge("B", 20)}, 2}, {{Event::read("B", 0)}, 3}, {{Event::read("B", 0)}, 4}};
    const TesPrefix without{{{Event::discharge("B", 20)}, 2}, {{Event::read("B", 0)}, 4}};
    CHECK(lev(with_read, "B", cfg) == lev(without, "B", cfg));
    CHECK(lev(without, "B", cfg) == doctest::Approx(40).epsilon(1e-12));
    // Another battery's events are ignored.
    const TesPrefix other{{{Event::discharge("B", 20)}, 2}, {{Event::discharge("B2", 5)}, 3}, {{Event::read("B", 0)}, 4}};
    CHECK(lev(other, "B", cfg) == lev(without, "B", cfg));
  }

  TEST_CASE("golden run level")
  {
    PhysicsConfig cfg;
    const TesPrefix column{{{Event::discharge("B", 20)}, 2}, {{Event::read("B", 0)}, 4}};
    const double level = battery_level(column, "B", cfg);
    CHECK(level == doctest::Approx(7200000.0 - 40.0).epsilon(1e-12));
    CHECK(std::round(level / ws_per_wh) == 2000.0);
  }

  TEST_CASE("dis")
  {
    PhysicsConfig cfg;
    CHECK(dis(TesPrefix{}, "I", {3, 4}, cfg) == Eigen::Vector2d(3, 4));
    const TesPrefix run{{{Event::loc("I", {0, 0})}, 1},
                           {{Event::move("I", Direction::N, 40)}, 2},
                           {{Event::loc("I", {0, 1})}, 3}};
    const auto at3 = dis(run, "I", {0, 0}, cfg);
    CHECK(at3.x() == doctest::Approx(0.0));
    CHECK(at3.y() == doctest::Approx(1.0).epsilon(1e-12));

    const TesPrefix fence{{{Event::move("I", Direction::N, 40)}, 1}, {{Event::loc("I", {0, 20})}, 2}};
    CHECK(dis(fence, "I", {0, 20}, cfg) == Eigen::Vector2d(0, 20));
    const TesPrefix west{{{Event::move("I", Direction::W, 40)}, 1}, {{Event::loc("I", {0, 5})}, 2}};
    CHECK(dis(west, "I", {0.5, 5}, cfg) == Eigen::Vector2d(0, 5));
  }

  TEST_CASE("config validation")
  {
    PhysicsConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.mass = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.friction = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.capacity = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.discharge_factor = 0.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK(PhysicsConfig{}.traction_for(20) == doctest::Approx(40.0));
  }
}
