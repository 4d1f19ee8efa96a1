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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tescps::cps {

namespace {

bool mentions(const Observable& o, EventKind kind, const std::string& agent)
{
  return std::any_of(o.begin(), o.end(), [&](const Event& e) { return e.kind() == kind && e.agent() == agent; });
}

const Event* find(const Observable& o, EventKind kind, const std::string& agent)
{
  for (const auto& e : o)
    if (e.kind() == kind && e.agent() == agent)
      return &e;
  return nullptr;
}

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::invalid_argument("invalid physics config: " + what);
}

Eigen::Vector2d unit(Direction d)
{
  switch (d)
  {
    case Direction::N: return {0, 1};
    case Direction::S: return {0, -1};
    case Direction::E: return {1, 0};
    case Direction::W: return {-1, 0};
  }
  return {0, 0};
}

} // namespace

void PhysicsConfig::validate() const
{
  require(mass > 0, "mass must be > 0");
  require(gravity > 0, "gravity must be > 0");
  require(wheel_radius > 0 && omega > 0, "wheel_radius and omega must be > 0");
  require(friction >= 0 && friction <= 1, "friction must lie in [0,1]");
  for (const auto& p : patches)
    require(p.mu >= 0 && p.mu <= 1, "friction patch coefficient must lie in [0,1]");
  require(capacity >= 0, "capacity must be >= 0");
  require(eta_internal >= 0, "eta_internal must be >= 0");
  require(!field_bounds.isEmpty(), "field_bounds must be a nonempty box");
  require(field_bounds.contains(station), "station must lie inside field_bounds");
  require(discharge_factor >= 1, "discharge_factor must be >= 1");
}

double PhysicsConfig::friction_at(const Eigen::Vector2d& at) const
{
  double mu = friction;
  for (const auto& p : patches)
    if (p.area.contains(at))
      mu = p.mu;
  return mu;
}

double lev(const TesPrefix& prefix, const std::string& battery, const PhysicsConfig& cfg)
{
  double spent = 0.0;
  double rate = cfg.eta_internal;
  const Observation* previous = nullptr;
  for (const auto& o : prefix)
  {
    const bool own = mentions(o.observable, EventKind::Read, battery)
                  || mentions(o.observable, EventKind::Discharge, battery)
                  || mentions(o.observable, EventKind::ChargeRate, battery);
    if (!own)
      continue;
    if (previous)
    {
      if (const auto* d = find(previous->observable, EventKind::Discharge, battery))
        rate = d->scalar() + cfg.eta_internal;
      else if (const auto* c = find(previous->observable, EventKind::ChargeRate, battery))
        rate = cfg.eta_internal - c->scalar();
      spent += rate * seconds_between(previous->time, o.time);
    }
    previous = &o;
  }
  return spent;
}

double battery_level(const TesPrefix& prefix, const std::string& battery, const PhysicsConfig& cfg)
{
  return std::min(cfg.capacity, std::max(cfg.capacity - lev(prefix, battery, cfg), 0.0));
}

double battery_read_value(const TesPrefix& prefix, std::size_t i, const std::string& battery,
                          const PhysicsConfig& cfg)
{
  if (i >= prefix.size())
    throw std::out_of_range("observation index " + std::to_string(i) + " out of range");
  if (!mentions(prefix[i].observable, EventKind::Read, battery))
    throw std::invalid_argument("observation " + std::to_string(i) + " holds no read of " + battery);
  return battery_level(prefix.take(i + 1), battery, cfg);
}

double displacement(const TimeStamp& t0, const TimeStamp& t, double traction, const PhysicsConfig& cfg,
                    const Eigen::Vector2d& at)
{
  if (traction < 0)
    throw std::invalid_argument("traction must be >= 0");
  if (t < t0)
    throw std::invalid_argument("displacement needs t >= t0");
  const double grip = 0.25 * cfg.friction_at(at) * cfg.mass * cfg.gravity;
  const double force = std::min(traction, grip);
  const double dt = seconds_between(t0, t);
  return 0.5 * (force / cfg.mass) * dt * dt;
}

Eigen::Vector2d dis(const TesPrefix& prefix, const std::string& object, const Eigen::Vector2d& l0,
                    const PhysicsConfig& cfg)
{
  Eigen::Vector2d pos = l0;
  const Observation* previous = nullptr;
  for (const auto& o : prefix)
  {
    if (!mentions(o.observable, EventKind::Loc, object) && !mentions(o.observable, EventKind::Move, object))
      continue;
    if (previous)
      if (const auto* m = find(previous->observable, EventKind::Move, object))
      {
        const auto& h = m->heading();
        pos += unit(h.direction) * displacement(previous->time, o.time, h.magnitude, cfg, pos);
        pos = pos.cwiseMax(cfg.field_bounds.min()).cwiseMin(cfg.field_bounds.max());
      }
    previous = &o;
  }
  return pos;
}

Eigen::Vector2d to_vector(const Position& p) { return {p.x, p.y}; }

Position to_position(const Eigen::Vector2d& v) { return {v.x(), v.y()}; }

} // namespace tescps::cps
