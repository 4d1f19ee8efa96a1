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

#include <cmath>
#include <random>
#include <stdexcept>

namespace tescps::cps {

namespace {

constexpr double value_tolerance = 1e-9;
constexpr double level_abs_tolerance = 1e-6;
constexpr double position_tolerance = 1e-9;

bool close(double a, double b)
{
  return std::abs(a - b) <= value_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

bool close(const Position& a, const Position& b)
{
  return std::abs(a.x - b.x) <= position_tolerance && std::abs(a.y - b.y) <= position_tolerance;
}

const Event* single(const Observable& o)
{
  return o.size() == 1 ? &*o.begin() : nullptr;
}

bool is(const Event* e, EventKind kind, const std::string& agent)
{
  return e && e->kind() == kind && e->agent() == agent;
}

bool in_bounds(const Position& p, const PhysicsConfig& cfg)
{
  return cfg.field_bounds.contains(to_vector(p));
}

/// Structural check shared by the three components: well-formed times and
/// one event per observation, drawn from the interface.
bool singleton_trace(const TesPrefix& p, const Interface& e)
{
  if (validate_prefix(p) != Verdict::Pass)
    return false;
  return std::all_of(p.begin(), p.end(), [&](const Observation& o) {
    return o.observable.size() == 1 && e.contains(*o.observable.begin());
  });
}

Component projection_component(std::string name, Interface interface, const Rig& rig,
                               TesPrefix Projection::*part, std::function<bool(const TesPrefix&)> physics)
{
  Component c;
  c.name = std::move(name);
  c.interface = interface;
  c.accept = [interface, physics](const TesPrefix& p) {
    return singleton_trace(p, interface) && physics(p) ? Verdict::Pass : Verdict::Fail;
  };
  c.generate = [rig, part](const GenerationRequest& req) {
    return Behavior{realize(rig, rig.plans(rig, req)).*part};
  };
  return c;
}

Observable one(Event e) { return Observable{std::move(e)}; }

} // namespace

PlanSource scripted_plans(Plan plan)
{
  return [plan = std::move(plan)](const Rig&, const GenerationRequest& req) {
    return Plan(plan.begin(), plan.begin() + static_cast<std::ptrdiff_t>(std::min(req.depth, plan.size())));
  };
}

PlanSource random_plans(std::size_t index)
{
  return [index](const Rig&, const GenerationRequest& req) {
    std::seed_seq seq{static_cast<std::uint32_t>(req.seed), static_cast<std::uint32_t>(req.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    const std::uint64_t time_seed = req.seed == 0 ? 0 : rng() | 1;
    const auto times = increasing_times(req.depth, time_seed);
    const TimeStamp offset(static_cast<std::int64_t>(index % 7), 7);

    static constexpr Direction directions[] = {Direction::N, Direction::E, Direction::S, Direction::W};
    Plan plan;
    for (const auto& t : times)
    {
      Action a;
      a.time = t + offset;
      const auto roll = rng() % 20;
      if (roll < 5)
        a.kind = ActionKind::ReadLoc;
      else if (roll < 10)
        a.kind = ActionKind::ReadBat;
      else
      {
        a.kind = ActionKind::Move;
        a.direction = directions[rng() % 4];
        a.power = 5.0 * static_cast<double>(1 + rng() % 4);
      }
      plan.push_back(a);
    }
    return plan;
  };
}

Projection realize(const Rig& rig, const Plan& plan)
{
  const auto& ids = rig.ids;
  const auto& cfg = rig.physics;
  Projection out;

  auto position_now = [&](const TimeStamp& t) {
    auto probe = out.field;
    probe.push_back({one(Event::loc(ids.object, {0, 0})), t});
    return to_position(dis(probe, ids.object, rig.start, cfg));
  };

  for (const auto& a : plan)
  {
    if (!out.robot.empty() && !(out.robot.back().time < a.time))
      throw std::invalid_argument("plan times for " + ids.robot + " must increase strictly");
    switch (a.kind)
    {
      case ActionKind::ReadLoc:
      {
        const auto pos = position_now(a.time);
        out.robot.push_back({one(Event::read_loc(ids.robot, pos)), a.time});
        out.field.push_back({one(Event::loc(ids.object, pos)), a.time});
        break;
      }
      case ActionKind::ReadBat:
      {
        auto probe = out.battery;
        probe.push_back({one(Event::read(ids.battery, 0)), a.time});
        const double level = battery_level(probe, ids.battery, cfg);
        out.robot.push_back({one(Event::read_bat(ids.robot, level)), a.time});
        out.battery.push_back({one(Event::read(ids.battery, level)), a.time});
        break;
      }
      case ActionKind::Move:
        out.robot.push_back({one(Event::move(ids.robot, a.direction, a.power)), a.time});
        out.battery.push_back({one(Event::discharge(ids.battery, a.power * cfg.discharge_factor)), a.time});
        out.field.push_back({one(Event::move(ids.object, a.direction, cfg.traction_for(a.power))), a.time});
        break;
      case ActionKind::Charge:
      {
        const auto pos = position_now(a.time);
        if (!close(pos, to_position(cfg.station)))
          throw std::invalid_argument(ids.robot + " can only charge at the station (it is at ("
                                      + format_number(pos.x) + "," + format_number(pos.y) + ") at t="
                                      + a.time.str() + ")");
        out.robot.push_back({one(Event::charge_switch(ids.robot, Switch::On)), a.time});
        out.battery.push_back({one(Event::charge_rate(ids.battery, a.rate)), a.time});
        out.field.push_back({one(Event::loc(ids.object, pos)), a.time});
        break;
      }
      case ActionKind::ChargeOff:
        out.robot.push_back({one(Event::charge_switch(ids.robot, Switch::Off)), a.time});
        break;
    }
  }
  return out;
}

Interface robot_interface(const std::string& robot, const PhysicsConfig& cfg)
{
  return Interface::where(
    [robot, cfg](const Event& e) {
      if (e.agent() != robot)
        return false;
      switch (e.kind())
      {
        case EventKind::ReadLoc: return in_bounds(e.position(), cfg);
        case EventKind::ReadBat: return e.scalar() >= 0;
        case EventKind::Move: return e.heading().magnitude >= 0;
        case EventKind::ChargeSwitch: return true;
        default: return false;
      }
    },
    "E_" + robot);
}

Interface battery_interface(const std::string& battery, const PhysicsConfig& cfg)
{
  return Interface::where(
    [battery, cfg](const Event& e) {
      if (e.agent() != battery)
        return false;
      switch (e.kind())
      {
        case EventKind::Read: return e.scalar() >= 0 && e.scalar() <= cfg.capacity;
        case EventKind::Discharge:
        case EventKind::ChargeRate: return e.scalar() >= 0;
        default: return false;
      }
    },
    "E_" + battery);
}

Interface field_interface(const std::string& object, const PhysicsConfig& cfg)
{
  return Interface::where(
    [object, cfg](const Event& e) {
      if (e.agent() != object)
        return false;
      switch (e.kind())
      {
        case EventKind::Loc: return in_bounds(e.position(), cfg);
        case EventKind::Move: return e.heading().magnitude >= 0;
        default: return false;
      }
    },
    "E_F(" + object + ")");
}

Component robot_component(const Rig& rig)
{
  return projection_component(rig.ids.robot, robot_interface(rig.ids.robot, rig.physics), rig, &Projection::robot,
                              [](const TesPrefix&) { return true; });
}

Component battery_component(const Rig& rig)
{
  const auto id = rig.ids.battery;
  const auto cfg = rig.physics;
  auto reads_match = [id, cfg](const TesPrefix& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
    {
      const auto* e = single(p[i].observable);
      if (!is(e, EventKind::Read, id))
        continue;
      const double forced = battery_read_value(p, i, id, cfg);
      if (std::abs(e->scalar() - forced) > level_abs_tolerance + value_tolerance * cfg.capacity)
        return false;
    }
    return true;
  };
  return projection_component(id, battery_interface(id, cfg), rig, &Projection::battery, reads_match);
}

Component field_component(const Rig& rig)
{
  const auto id = rig.ids.object;
  const auto cfg = rig.physics;
  const Eigen::Vector2d start = rig.start;
  auto locs_match = [id, cfg, start](const TesPrefix& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
    {
      const auto* e = single(p[i].observable);
      if (is(e, EventKind::Loc, id) && !close(e->position(), to_position(dis(p.take(i + 1), id, start, cfg))))
        return false;
    }
    return true;
  };
  return projection_component("F(" + id + ")", field_interface(id, cfg), rig, &Projection::field, locs_match);
}

ObsRelation rel_RB(const std::string& robot, const std::string& battery)
{
  ObsRelation::Presentation p;
  p.related = [robot, battery](const Observable& a, const Observable& b) {
    const auto* x = single(a);
    const auto* y = single(b);
    if (is(x, EventKind::ReadBat, robot) && is(y, EventKind::Read, battery))
      return close(x->scalar(), y->scalar());
    if (is(x, EventKind::Move, robot) && is(y, EventKind::Discharge, battery))
      return y->scalar() >= x->heading().magnitude || close(y->scalar(), x->heading().magnitude);
    if (is(x, EventKind::ChargeSwitch, robot) && is(y, EventKind::ChargeRate, battery))
      return x->switch_state() == Switch::On;
    return false;
  };
  p.has_right_partner = [robot, battery](const Observable& a, const Interface& scope) {
    const auto* x = single(a);
    if (is(x, EventKind::ReadBat, robot))
      return scope.contains(Event::read(battery, x->scalar()));
    if (is(x, EventKind::Move, robot))
      return scope.contains(Event::discharge(battery, x->heading().magnitude));
    if (is(x, EventKind::ChargeSwitch, robot) && x->switch_state() == Switch::On)
      return scope.contains(Event::charge_rate(battery, 0));
    return false;
  };
  p.has_left_partner = [robot, battery](const Observable& b, const Interface& scope) {
    const auto* y = single(b);
    if (is(y, EventKind::Read, battery))
      return scope.contains(Event::read_bat(robot, y->scalar()));
    if (is(y, EventKind::Discharge, battery))
      return scope.contains(Event::move(robot, Direction::N, y->scalar()));
    if (is(y, EventKind::ChargeRate, battery))
      return scope.contains(Event::charge_switch(robot, Switch::On));
    return false;
  };
  return ObsRelation("RB(" + robot + "," + battery + ")", std::move(p), true);
}

ObsRelation rel_FR(const std::string& object, const std::string& robot, const PhysicsConfig& cfg)
{
  const double r_omega = cfg.wheel_radius * cfg.omega;
  const Position station = to_position(cfg.station);
  ObsRelation::Presentation p;
  p.related = [robot, object, r_omega, station](const Observable& a, const Observable& b) {
    const auto* x = single(a);
    const auto* y = single(b);
    if (is(x, EventKind::ReadLoc, robot) && is(y, EventKind::Loc, object))
      return close(x->position(), y->position());
    if (is(x, EventKind::Move, robot) && is(y, EventKind::Move, object))
      return x->heading().direction == y->heading().direction
          && close(y->heading().magnitude, x->heading().magnitude / r_omega);
    if (is(x, EventKind::ChargeSwitch, robot) && is(y, EventKind::Loc, object))
      return x->switch_state() == Switch::On && close(y->position(), station);
    return false;
  };
  p.has_right_partner = [robot, object, r_omega, station](const Observable& a, const Interface& scope) {
    const auto* x = single(a);
    if (is(x, EventKind::ReadLoc, robot))
      return scope.contains(Event::loc(object, x->position()));
    if (is(x, EventKind::Move, robot))
      return scope.contains(Event::move(object, x->heading().direction, x->heading().magnitude / r_omega));
    if (is(x, EventKind::ChargeSwitch, robot) && x->switch_state() == Switch::On)
      return scope.contains(Event::loc(object, station));
    return false;
  };
  p.has_left_partner = [robot, object, r_omega, station](const Observable& b, const Interface& scope) {
    const auto* y = single(b);
    if (is(y, EventKind::Loc, object))
      return scope.contains(Event::read_loc(robot, y->position()))
          || (close(y->position(), station) && scope.contains(Event::charge_switch(robot, Switch::On)));
    if (is(y, EventKind::Move, object))
      return scope.contains(Event::move(robot, y->heading().direction, y->heading().magnitude * r_omega));
    return false;
  };
  return ObsRelation("FR(" + object + "," + robot + ")", std::move(p), true);
}

ObsRelation rel_F12(const std::string& object1, const std::string& object2)
{
  ObsRelation::Presentation p;
  p.related = [object1, object2](const Observable& a, const Observable& b) {
    const auto* x = single(a);
    const auto* y = single(b);
    return is(x, EventKind::Loc, object1) && is(y, EventKind::Loc, object2) && close(x->position(), y->position());
  };
  p.has_right_partner = [object1, object2](const Observable& a, const Interface& scope) {
    const auto* x = single(a);
    return is(x, EventKind::Loc, object1) && scope.contains(Event::loc(object2, x->position()));
  };
  p.has_left_partner = [object1, object2](const Observable& b, const Interface& scope) {
    const auto* y = single(b);
    return is(y, EventKind::Loc, object2) && scope.contains(Event::loc(object1, y->position()));
  };
  return ObsRelation("F12(" + object1 + "," + object2 + ")", std::move(p), true);
}

Component robot_battery(const Rig& rig)
{
  return product(robot_component(rig), battery_component(rig), sync_relation(rel_RB(rig.ids.robot, rig.ids.battery)),
                 union_composition());
}

Component field_robot_battery(const Rig& rig)
{
  return product(field_component(rig), robot_battery(rig),
                 sync_relation(rel_FR(rig.ids.object, rig.ids.robot, rig.physics)), union_composition());
}

Component composite_system(const Rig& rig1, const Rig& rig2)
{
  const auto plus = union_composition();
  const auto fields = product(field_component(rig1), field_component(rig2),
                              excl_relation(rel_F12(rig1.ids.object, rig2.ids.object)), plus);
  const auto robots = product(robot_battery(rig1), robot_battery(rig2), free_relation(), plus);
  const auto fr = unite(rel_FR(rig1.ids.object, rig1.ids.robot, rig1.physics),
                        rel_FR(rig2.ids.object, rig2.ids.robot, rig2.physics));
  return product(fields, robots, sync_relation(fr), plus);
}

Component regrouped_system(const Rig& rig1, const Rig& rig2)
{
  return product(field_robot_battery(rig1), field_robot_battery(rig2),
                 excl_relation(rel_F12(rig1.ids.object, rig2.ids.object)), union_composition());
}

Rig golden_rig()
{
  Rig rig;
  Action move;
  move.time = TimeStamp(2);
  move.kind = ActionKind::Move;
  move.direction = Direction::N;
  move.power = 20.0;
  rig.plans = scripted_plans({
    {TimeStamp(1), ActionKind::ReadLoc},
    move,
    {TimeStamp(3), ActionKind::ReadLoc},
    {TimeStamp(4), ActionKind::ReadBat},
  });
  return rig;
}

} // namespace tescps::cps
