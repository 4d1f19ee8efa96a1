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

#include <tescps/trace_io.hpp>

#include <fstream>
#include <set>

namespace tescps::cps {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecError(what); }

std::string kind_name(InstanceKind k)
{
  switch (k)
  {
    case InstanceKind::Robot: return "robot";
    case InstanceKind::Battery: return "battery";
    case InstanceKind::Field: return "field";
  }
  return "?";
}

template <typename T>
T get(const json& obj, const std::string& key, const T& fallback, const std::string& where)
{
  if (!obj.contains(key))
    return fallback;
  try
  {
    return obj.at(key).get<T>();
  }
  catch (const json::exception&)
  {
    fail(where + ": '" + key + "' has the wrong type");
  }
}

std::string required_string(const json& obj, const std::string& key, const std::string& where)
{
  if (!obj.contains(key) || !obj.at(key).is_string())
    fail(where + ": missing string '" + key + "'");
  return obj.at(key).get<std::string>();
}

Eigen::Vector2d point(const json& j, const std::string& where)
{
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::AlignedBox2d box(const json& j, const std::string& where)
{
  if (!j.is_object() || !j.contains("min") || !j.contains("max"))
    fail(where + ": expected {\"min\": [x, y], \"max\": [x, y]}");
  return {point(j["min"], where + ".min"), point(j["max"], where + ".max")};
}

PhysicsConfig parse_physics(const json& j)
{
  PhysicsConfig cfg;
  if (j.is_null())
    return cfg;
  if (!j.is_object())
    fail("physics: expected an object");
  cfg.mass = get(j, "mass_kg", cfg.mass, "physics");
  cfg.gravity = get(j, "gravity", cfg.gravity, "physics");
  cfg.wheel_radius = get(j, "wheel_radius_m", cfg.wheel_radius, "physics");
  cfg.omega = get(j, "omega_rad_s", cfg.omega, "physics");
  cfg.capacity = get(j, "capacity_wh", cfg.capacity / ws_per_wh, "physics") * ws_per_wh;
  cfg.eta_internal = get(j, "eta_internal_w", cfg.eta_internal, "physics");
  cfg.discharge_factor = get(j, "discharge_factor", cfg.discharge_factor, "physics");
  if (j.contains("friction"))
  {
    const auto& f = j["friction"];
    if (f.is_number())
      cfg.friction = f.get<double>();
    else
    {
      cfg.friction = get(f, "default", cfg.friction, "physics.friction");
      for (const auto& p : f.value("patches", json::array()))
        cfg.patches.push_back({box(p, "physics.friction.patches"), get(p, "mu", 1.0, "physics.friction.patches")});
    }
  }
  if (j.contains("field_bounds"))
    cfg.field_bounds = box(j["field_bounds"], "physics.field_bounds");
  if (j.contains("station"))
    cfg.station = point(j["station"], "physics.station");
  try
  {
    cfg.validate();
  }
  catch (const std::invalid_argument& e)
  {
    fail(e.what());
  }
  return cfg;
}

Action parse_action(const json& j, const std::string& robot)
{
  const std::string where = "schedules." + robot;
  if (!j.is_object() || !j.contains("t"))
    fail(where + ": every entry needs a time 't'");
  Action a;
  try
  {
    a.time = time_from_json(j["t"]);
  }
  catch (const std::exception& e)
  {
    fail(where + ": bad time: " + e.what());
  }
  const auto action = required_string(j, "action", where);
  if (action == "read_loc")
    a.kind = ActionKind::ReadLoc;
  else if (action == "read_bat")
    a.kind = ActionKind::ReadBat;
  else if (action == "move")
  {
    a.kind = ActionKind::Move;
    try
    {
      a.direction = direction_from(required_string(j, "dir", where));
    }
    catch (const std::invalid_argument& e)
    {
      fail(where + ": " + e.what());
    }
    a.power = get(j, "power", 0.0, where);
    if (a.power < 0)
      fail(where + ": move power must be >= 0");
  }
  else if (action == "charge")
  {
    a.kind = ActionKind::Charge;
    a.rate = get(j, "rate", 0.0, where);
    if (a.rate < 0)
      fail(where + ": charge rate must be >= 0");
  }
  else if (action == "charge_off")
    a.kind = ActionKind::ChargeOff;
  else
    fail(where + ": unknown action '" + action + "' (valid: read_loc, read_bat, move, charge, charge_off)");
  return a;
}

void check_kind(const ScenarioSpec& spec, const std::string& id, InstanceKind want, const std::string& where)
{
  const auto it = spec.kinds.find(id);
  if (it == spec.kinds.end())
    fail(where + ": undeclared id '" + id + "'");
  if (it->second != want)
    fail(where + ": '" + id + "' is a " + kind_name(it->second) + ", expected a " + kind_name(want));
}

void validate_composition(const ScenarioSpec& spec, const json& node, const std::string& where)
{
  if (!node.is_object())
    fail(where + ": expected an object");
  if (node.contains("ref"))
  {
    const auto ref = required_string(node, "ref", where);
    if (!spec.kinds.count(ref))
      fail(where + ": undeclared id '" + ref + "'");
    return;
  }
  const auto op = required_string(node, "op", where);
  if (op != "product" && op != "divide")
    fail(where + ": unknown op '" + op + "' (valid: product, divide)");
  const auto relation = get<std::string>(node, "relation", "free", where);
  if (relation != "free" && relation != "sync" && relation != "excl" && relation != "sync_excl")
    fail(where + ": unknown relation '" + relation + "' (valid: free, sync, excl, sync_excl)");
  if (get<std::string>(node, "plus", "union", where) != "union")
    fail(where + ": only 'union' is supported as plus");
  const auto rels = node.value("rels", json::array());
  if (relation != "free" && rels.empty())
    fail(where + ": relation '" + relation + "' needs a nonempty 'rels' list");
  for (const auto& r : rels)
  {
    const auto kind = required_string(r, "kind", where + ".rels");
    const auto a = required_string(r, "a", where + ".rels");
    const auto b = required_string(r, "b", where + ".rels");
    if (kind == "RB")
    {
      check_kind(spec, a, InstanceKind::Robot, where + ".rels");
      check_kind(spec, b, InstanceKind::Battery, where + ".rels");
    }
    else if (kind == "FR")
    {
      check_kind(spec, a, InstanceKind::Field, where + ".rels");
      check_kind(spec, b, InstanceKind::Robot, where + ".rels");
    }
    else if (kind == "F12")
    {
      check_kind(spec, a, InstanceKind::Field, where + ".rels");
      check_kind(spec, b, InstanceKind::Field, where + ".rels");
    }
    else
      fail(where + ".rels: unknown kind '" + kind + "' (valid: RB, FR, F12)");
  }
  if (!node.contains("left") || !node.contains("right"))
    fail(where + ": '" + op + "' needs 'left' and 'right'");
  validate_composition(spec, node["left"], where + ".left");
  validate_composition(spec, node["right"], where + ".right");
}

ObsRelation build_obs_relation(const ScenarioSpec& spec, const json& rels)
{
  std::optional<ObsRelation> out;
  for (const auto& r : rels)
  {
    const auto kind = r["kind"].get<std::string>();
    const auto a = r["a"].get<std::string>();
    const auto b = r["b"].get<std::string>();
    ObsRelation rel = kind == "RB"   ? rel_RB(a, b)
                    : kind == "FR"   ? rel_FR(spec.objects.at(a), b, spec.rig_of(b).physics)
                                     : rel_F12(spec.objects.at(a), spec.objects.at(b));
    out = out ? unite(*out, rel) : rel;
  }
  return out ? *out : ObsRelation::empty();
}

TesRelation build_relation(const ScenarioSpec& spec, const json& node)
{
  const auto relation = node.value("relation", std::string("free"));
  if (relation == "free")
    return free_relation();
  const auto rel = build_obs_relation(spec, node["rels"]);
  if (relation == "sync")
    return sync_relation(rel);
  if (relation == "excl")
    return excl_relation(rel);
  return sync_excl_relation(rel);
}

Component build_node(const ScenarioSpec& spec, const json& node)
{
  if (node.contains("ref"))
    return instance_component(spec, node["ref"].get<std::string>());
  const auto left = build_node(spec, node["left"]);
  const auto right = build_node(spec, node["right"]);
  const auto relation = build_relation(spec, node);
  if (node["op"] == "product")
    return product(left, right, relation, union_composition());
  DivisionOptions opts;
  opts.depth = spec.depth;
  return divide(left, right, relation, union_composition(), opts);
}

} // namespace

const Rig& ScenarioSpec::rig_of(const std::string& id) const
{
  for (const auto& rig : rigs)
    if (rig.ids.robot == id || rig.ids.battery == id || (objects.count(id) && objects.at(id) == rig.ids.object))
      return rig;
  throw SpecError("no robot owns '" + id + "'");
}

std::vector<std::string> ScenarioSpec::battery_ids() const
{
  std::vector<std::string> out;
  for (const auto& rig : rigs)
    out.push_back(rig.ids.battery);
  return out;
}

std::vector<std::string> ScenarioSpec::object_ids() const
{
  std::vector<std::string> out;
  for (const auto& rig : rigs)
    out.push_back(rig.ids.object);
  return out;
}

ScenarioSpec parse_scenario(const json& doc)
{
  if (!doc.is_object())
    fail("scenario: expected a JSON object");
  ScenarioSpec spec;
  spec.physics = parse_physics(doc.value("physics", json()));

  const auto instances = doc.value("instances", json::array());
  if (!instances.is_array() || instances.empty())
    fail("instances: expected a nonempty array");

  std::map<std::string, json> decls;
  for (const auto& inst : instances)
  {
    const auto id = required_string(inst, "id", "instances");
    const auto type = required_string(inst, "type", "instances." + id);
    InstanceKind kind;
    if (type == "robot")
      kind = InstanceKind::Robot;
    else if (type == "battery")
      kind = InstanceKind::Battery;
    else if (type == "field")
      kind = InstanceKind::Field;
    else
      fail("instances." + id + ": unknown type '" + type + "' (valid: robot, battery, field)");
    if (!spec.kinds.emplace(id, kind).second)
      fail("instances: duplicate id '" + id + "'");
    decls[id] = inst;
    if (kind == InstanceKind::Field)
      spec.objects[id] = get<std::string>(inst, "object", id, "instances." + id);
  }

  std::set<std::string> owned;
  std::set<std::string> agents;
  for (const auto& inst : instances)
  {
    const auto id = inst["id"].get<std::string>();
    if (spec.kinds[id] != InstanceKind::Robot)
      continue;
    const std::string where = "instances." + id;
    const auto battery = required_string(inst, "battery", where);
    const auto field = required_string(inst, "field", where);
    check_kind(spec, battery, InstanceKind::Battery, where);
    check_kind(spec, field, InstanceKind::Field, where);
    for (const auto& part : {battery, field})
      if (!owned.insert(part).second)
        fail(where + ": '" + part + "' already belongs to another robot");

    Rig rig;
    rig.ids = {id, battery, spec.objects[field]};
    rig.physics = spec.physics;
    const auto& bdecl = decls[battery];
    rig.physics.capacity = get(bdecl, "capacity_wh", spec.physics.capacity / ws_per_wh, "instances." + battery)
                         * ws_per_wh;
    if (rig.physics.capacity < 0)
      fail("instances." + battery + ": capacity_wh must be >= 0");
    const auto& fdecl = decls[field];
    rig.start = fdecl.contains("initial") ? point(fdecl["initial"], "instances." + field + ".initial")
                                          : Eigen::Vector2d(0, 0);
    if (!rig.physics.field_bounds.contains(rig.start))
      fail("instances." + field + ": initial position lies outside field_bounds");
    for (const auto& agent : {rig.ids.robot, rig.ids.battery, rig.ids.object})
      if (!agents.insert(agent).second)
        fail(where + ": agent name '" + agent + "' is used twice");
    try
    {
      Event::symbol(rig.ids.object);
      Event::symbol(rig.ids.robot);
      Event::symbol(rig.ids.battery);
    }
    catch (const std::invalid_argument& e)
    {
      fail(where + ": " + e.what());
    }
    rig.plans = random_plans(spec.rigs.size());
    spec.rigs.push_back(std::move(rig));
  }
  if (spec.rigs.empty())
    fail("instances: at least one robot is required");
  for (const auto& [id, kind] : spec.kinds)
    if (kind != InstanceKind::Robot && !owned.count(id))
      fail("instances." + id + ": not attached to any robot");

  const auto gen = doc.value("generator", json::object());
  spec.generator = get<std::string>(gen, "mode", "random", "generator");
  if (spec.generator != "random" && spec.generator != "scripted")
    fail("generator: unknown mode '" + spec.generator + "' (valid: scripted, random)");

  const auto schedules = doc.value("schedules", json::object());
  if (!schedules.is_object())
    fail("schedules: expected an object keyed by robot id");
  for (const auto& [robot, entries] : schedules.items())
    check_kind(spec, robot, InstanceKind::Robot, "schedules");
  if (spec.generator == "scripted")
    for (auto& rig : spec.rigs)
    {
      Plan plan;
      if (schedules.contains(rig.ids.robot))
        for (const auto& entry : schedules[rig.ids.robot])
          plan.push_back(parse_action(entry, rig.ids.robot));
      try
      {
        realize(rig, plan);
      }
      catch (const std::invalid_argument& e)
      {
        fail("schedules." + rig.ids.robot + ": " + e.what());
      }
      rig.plans = scripted_plans(std::move(plan));
    }

  const auto run = doc.value("run", json::object());
  spec.depth = get<std::size_t>(run, "depth", spec.depth, "run");
  spec.seed = get<std::uint64_t>(run, "seed", spec.seed, "run");
  if (run.contains("out"))
    spec.out = get<std::string>(run, "out", "", "run");

  if (doc.contains("composition"))
  {
    spec.composition = doc["composition"];
    validate_composition(spec, spec.composition, "composition");
  }
  else if (spec.rigs.size() > 2)
    fail("composition: required with more than two robots");
  return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    fail("cannot open scenario file " + path.string());
  json doc;
  try
  {
    doc = json::parse(in);
  }
  catch (const json::parse_error& e)
  {
    fail(path.string() + ": " + e.what());
  }
  return parse_scenario(doc);
}

Component instance_component(const ScenarioSpec& spec, const std::string& id)
{
  const auto it = spec.kinds.find(id);
  if (it == spec.kinds.end())
    throw SpecError("undeclared id '" + id + "'");
  const auto& rig = spec.rig_of(id);
  switch (it->second)
  {
    case InstanceKind::Robot: return robot_component(rig);
    case InstanceKind::Battery: return battery_component(rig);
    case InstanceKind::Field: return field_component(rig);
  }
  throw SpecError("unknown instance kind for '" + id + "'");
}

Component build_system(const ScenarioSpec& spec)
{
  if (!spec.composition.is_null())
    return build_node(spec, spec.composition);
  if (spec.rigs.size() == 1)
    return field_robot_battery(spec.rigs.front());
  return composite_system(spec.rigs[0], spec.rigs[1]);
}

} // namespace tescps::cps
