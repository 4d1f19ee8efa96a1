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

#pragma once

#include <tescps/algebra.hpp>
#include <tescps/scenario/physics.hpp>

#include <functional>
#include <string>
#include <vector>

namespace tescps::cps {

/// Identifiers of one robot, its private battery and its field object.
struct RigIds
{
  std::string robot = "R";
  std::string battery = "B";
  std::string object = "I";
};

enum class ActionKind { ReadLoc, ReadBat, Move, Charge, ChargeOff };

/// One step of a robot's plan. A move also discharges the battery and moves
/// the field object; a charge also charges the battery and is observed as the
/// object standing at the station.
struct Action
{
  TimeStamp time;
  ActionKind kind = ActionKind::ReadLoc;
  Direction direction = Direction::N;
  /// Move power alpha in watts.
  double power = 0.0;
  /// Charge rate eta_c in watts.
  double rate = 0.0;
};

using Plan = std::vector<Action>;

struct Rig;
/// Plans for a generation request; the three projections of a rig draw the
/// same plan so their generated prefixes agree.
using PlanSource = std::function<Plan(const Rig&, const GenerationRequest&)>;

struct Rig
{
  RigIds ids;
  Eigen::Vector2d start{0, 0};
  PhysicsConfig physics;
  PlanSource plans;
};

/// The given plan cut to `depth` steps; the seed is ignored.
PlanSource scripted_plans(Plan plan);

/// Random walks. Seed 0 uses the integer time grid; other seeds draw rational
/// gaps. Robot `index` is offset by index/7 s so that different robots never
/// act at the same instant.
PlanSource random_plans(std::size_t index);

/// The robot, battery and field prefixes a plan produces. Read values are the
/// ones lev and dis force.
struct Projection
{
  TesPrefix robot;
  TesPrefix battery;
  TesPrefix field;
};

/// Throws std::invalid_argument for unordered times or a charge away from
/// the station.
Projection realize(const Rig& rig, const Plan& plan);

Component robot_component(const Rig& rig);
Component battery_component(const Rig& rig);
Component field_component(const Rig& rig);

Interface robot_interface(const std::string& robot, const PhysicsConfig& cfg);
Interface battery_interface(const std::string& battery, const PhysicsConfig& cfg);
Interface field_interface(const std::string& object, const PhysicsConfig& cfg);

/// read(bat,R);b ~ read(B);b, move(R);(d,a) ~ discharge(B);e with e >= a,
/// charge(R);ON ~ charge(B);e. Symmetric.
ObsRelation rel_RB(const std::string& robot, const std::string& battery);
/// read(loc,R);l ~ loc(I);l, move(R);(d,a) ~ move(I);(d,a/(R w)),
/// charge(R);ON ~ loc(I);station. Symmetric.
ObsRelation rel_FR(const std::string& object, const std::string& robot, const PhysicsConfig& cfg);
/// loc(I1);l ~ loc(I2);l, meant for the exclusive product. Symmetric.
ObsRelation rel_F12(const std::string& object1, const std::string& object2);

/// R x(sync RB) B.
Component robot_battery(const Rig& rig);
/// F x(sync FR) (R x(sync RB) B); the single-robot system.
Component field_robot_battery(const Rig& rig);
/// (F1 x(excl F12) F2) x(sync FR1 u FR2) (R1B1 x(free) R2B2).
Component composite_system(const Rig& rig1, const Rig& rig2);
/// F1R1B1 x(excl F12) F2R2B2.
Component regrouped_system(const Rig& rig1, const Rig& rig2);

/// The scripted golden rig: read_loc at 1 s, move N 20 W at 2 s,
/// read_loc at 3 s, read_bat at 4 s.
Rig golden_rig();

} // namespace tescps::cps
