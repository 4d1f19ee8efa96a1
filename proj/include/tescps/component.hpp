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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tescps {

/// Interface of a component. Physical interfaces range over real-valued
/// payloads, so membership is a predicate; a finite enumeration is kept
/// when one exists.
class Interface
{
public:
  using Predicate = std::function<bool(const Event&)>;

  static Interface of(EventSet events);
  static Interface where(Predicate contains, std::string description);
  static Interface everything();

  bool contains(const Event& e) const { return _contains(e); }
  bool contains(const Observable& o) const;

  const std::optional<EventSet>& finite() const { return _finite; }
  const std::string& description() const { return _description; }

  friend Interface unite(const Interface& a, const Interface& b);

private:
  Predicate _contains;
  std::optional<EventSet> _finite;
  std::string _description;
};

struct GenerationRequest
{
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};

using Behavior = std::set<TesPrefix>;
using Acceptor = std::function<Verdict(const TesPrefix&)>;
using Generator = std::function<Behavior(const GenerationRequest&)>;

/// A component (E, L). The behavior L is intensional: `accept` decides
/// prefix membership (Pass = consistent so far, Fail = no extension is in L,
/// Pending = undetermined) and `generate` samples bounded prefixes of L.
struct Component
{
  std::string name;
  Interface interface;
  Acceptor accept;
  Generator generate;
  /// The generator enumerates every prefix of L up to the requested depth,
  /// independently of the seed.
  bool exhaustive = false;
};

/// Strictly increasing rational times. Seed 0 yields the integer grid
/// 1, 2, ..., n; other seeds draw gaps of `min_gap + k/4`, k in [0, 7].
std::vector<TimeStamp> increasing_times(
  std::size_t count, std::uint64_t seed, TimeStamp min_gap = TimeStamp(1, 4));

/// A component with an explicit finite behavior. Its acceptor passes the
/// prefixes of members.
Component make_finite_component(std::string name, Interface interface, Behavior members);

/// A component whose behavior is empty.
Component make_empty_component(std::string name, Interface interface);

using SampledFunction = std::function<double(double initial, const TimeStamp& t)>;

/// Every discrete sampling {f(d0, t_i)} at increasing times, for some d0.
Component make_function_component(
  std::string name, SampledFunction f, std::vector<double> initials);

/// Observables alternate between {0} and {1}; time stamps are unconstrained.
Component make_alternating_component();

} // namespace tescps
