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

#include <tescps/scenario/cps.hpp>

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tescps::cps {

/// A scenario file that does not validate. The message names the offending
/// id or key.
class SpecError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { Robot, Battery, Field };

struct ScenarioSpec
{
  PhysicsConfig physics;
  /// One rig per declared robot, in declaration order.
  std::vector<Rig> rigs;
  std::map<std::string, InstanceKind> kinds;
  /// Field instance id -> object id.
  std::map<std::string, std::string> objects;
  /// Validated composition tree; null selects the default system.
  nlohmann::json composition;
  std::string generator = "random";
  std::size_t depth = 10;
  std::uint64_t seed = 0;
  std::optional<std::string> out;

  const Rig& rig_of(const std::string& instance_id) const;
  std::vector<std::string> battery_ids() const;
  std::vector<std::string> object_ids() const;
};

/// Parses and validates a scenario. Throws SpecError.
ScenarioSpec parse_scenario(const nlohmann::json& doc);
ScenarioSpec load_scenario(const std::filesystem::path& path);

/// The composed system: the composition tree when given, otherwise
/// field_robot_battery for one robot and composite_system for two.
Component build_system(const ScenarioSpec& spec);

/// The component an instance id or robot system names.
Component instance_component(const ScenarioSpec& spec, const std::string& id);

} // namespace tescps::cps
