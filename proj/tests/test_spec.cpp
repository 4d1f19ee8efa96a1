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

#include <tescps/scenario/spec.hpp>

#include <doctest.h>
#include <json.hpp>

#include <fstream>

using namespace tescps;
using namespace tescps::cps;
using nlohmann::json;

namespace {

json load(const std::string& name)
{
  std::ifstream in(std::string(TESCPS_SCENARIOS) + "/" + name);
  return json::parse(in);
}

std::string error_of(const json& doc)
{
  try
  {
    parse_scenario(doc);
  }
  catch (const SpecError& e)
  {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

} // namespace

TEST_SUITE("spec")
{
  TEST_CASE("bundled scenarios load")
  {
    for (const auto* name : {"golden.json", "two_robots.json", "swap.json"})
    {
      CAPTURE(name);
      const auto spec = load_scenario(std::string(TESCPS_SCENARIOS) + "/" + name);
      CHECK_FALSE(spec.rigs.empty());
      CHECK_FALSE(build_system(spec).generate({3, spec.seed}).empty());
    }
    const auto t1 = parse_scenario(load("golden.json"));
    CHECK(t1.rigs.size() == 1);
    CHECK(t1.battery_ids() == std::vector<std::string>{"B"});
    CHECK(t1.object_ids() == std::vector<std::string>{"I"});
    CHECK(t1.physics.capacity == doctest::Approx(2000 * ws_per_wh));
    CHECK(t1.depth == 4);
    CHECK(t1.rig_of("F").ids.robot == "R");
    CHECK_THROWS_AS(t1.rig_of("Q"), SpecError);
  }

  TEST_CASE("validation names the offending id or key")
  {
    auto doc = load("golden.json");
    doc["composition"]["right"]["right"]["ref"] = "B9";
    CHECK(mentions(error_of(doc), "undeclared id 'B9'"));

    doc = load("golden.json");
    doc["composition"]["op"] = "sum";
    CHECK(mentions(error_of(doc), "unknown op 'sum'"));

    doc = load("golden.json");
    doc["composition"]["relation"] = "maybe";
    CHECK(mentions(error_of(doc), "unknown relation 'maybe'"));

    doc = load("golden.json");
    doc["physics"]["mass_kg"] = -1;
    CHECK(mentions(error_of(doc), "mass"));

    doc = load("golden.json");
    doc["instances"][2]["initial"] = json::array({30, 0});
    CHECK(mentions(error_of(doc), "instances.F"));

    doc = load("golden.json");
    doc["schedules"]["R"][1]["action"] = "jump";
    CHECK(mentions(error_of(doc), "unknown action 'jump'"));

    doc = load("golden.json");
    doc["schedules"]["R"][1]["t"] = "x";
    CHECK(mentions(error_of(doc), "bad time"));

    doc = load("golden.json");
    doc["instances"].push_back({{"id", "B"}, {"type", "battery"}});
    CHECK(mentions(error_of(doc), "duplicate id 'B'"));

    doc = load("golden.json");
    doc["generator"]["mode"] = "magic";
    CHECK(mentions(error_of(doc), "unknown mode 'magic'"));

    CHECK(mentions(error_of(json::array()), "expected a JSON object"));
  }

  TEST_CASE("time forms")
  {
    auto doc = load("golden.json");
    doc["schedules"]["R"][0]["t"] = "1/2";
    doc["schedules"]["R"][1]["t"] = {{"num", 3}, {"den", 2}};
    const auto spec = parse_scenario(doc);
    const auto plan = spec.rigs[0].plans(spec.rigs[0], {4, 0});
    CHECK(plan[0].time == TimeStamp(1, 2));
    CHECK(plan[1].time == TimeStamp(3, 2));
  }

  TEST_CASE("instance components")
  {
    const auto spec = parse_scenario(load("golden.json"));
    CHECK(instance_component(spec, "B").interface.contains(Event::read("B", 5)));
    CHECK_FALSE(instance_component(spec, "B").interface.contains(Event::read("B2", 5)));
    CHECK_THROWS_AS(instance_component(spec, "nope"), SpecError);
  }
}
