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

#include <tescps/prefix.hpp>

#include <Eigen/Geometry>

#include <string>
#include <vector>

namespace tescps::cps {

inline constexpr double ws_per_wh = 3600.0;

struct FrictionPatch
{
  Eigen::AlignedBox2d area;
  double mu = 1.0;
};

/// Physical constants of a scenario. Energies are watt-seconds, forces
/// newtons, rates watts. Defaults reproduce the golden run: a 20 W move
/// becomes a 40 N traction and moves a 20 kg robot 1 m in 1 s.
struct PhysicsConfig
{
  double mass = 20.0;
  double gravity = 9.81;
  double wheel_radius = 0.25;
  double omega = 2.0;
  /// Friction outside every patch. Later patches override earlier ones.
  double friction = 1.0;
  std::vector<FrictionPatch> patches;
  double capacity = 2000.0 * ws_per_wh;
  double eta_internal = 0.0;
  Eigen::AlignedBox2d field_bounds{Eigen::Vector2d(0, 0), Eigen::Vector2d(20, 20)};
  Eigen::Vector2d station{5, 5};
  /// Discharge rate requested per watt of move power; must be >= 1.
  double discharge_factor = 1.0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  double friction_at(const Eigen::Vector2d& at) const;
  /// F_t = alpha / (R * omega).
  double traction_for(double power) const { return power / (wheel_radius * omega); }
};

/// Cumulative energy drawn from `battery` over the observations of the prefix
/// that mention it. A discharge or charge rate stays in force until the next
/// observation carrying a rate event; read-only observations do not change it.
double lev(const TesPrefix& prefix, const std::string& battery, const PhysicsConfig& cfg);

/// min(C, max(C - lev, 0)) over the prefix.
double battery_level(const TesPrefix& prefix, const std::string& battery, const PhysicsConfig& cfg);

/// Level forced for the read(B) event in observation i. Throws
/// std::out_of_range for a bad index and std::invalid_argument when the
/// observation holds no read of the battery.
double battery_read_value(const TesPrefix& prefix, std::size_t i, const std::string& battery,
                          const PhysicsConfig& cfg);

/// Distance covered from rest between t0 and t under a constant traction,
/// with the traction capped by the wheel grip 1/4 * mu * m * g at `at`.
/// Throws std::invalid_argument for a negative traction or t < t0.
double displacement(const TimeStamp& t0, const TimeStamp& t, double traction, const PhysicsConfig& cfg,
                    const Eigen::Vector2d& at);

/// Position of `object` at the last observation of the prefix, starting from
/// l0. Every step is clamped to the field bounds.
Eigen::Vector2d dis(const TesPrefix& prefix, const std::string& object, const Eigen::Vector2d& l0,
                    const PhysicsConfig& cfg);

Eigen::Vector2d to_vector(const Position& p);
Position to_position(const Eigen::Vector2d& v);

} // namespace tescps::cps
