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

#include <tescps/component.hpp>

#include <vector>

namespace tescps {

/// A desk-scale stand-in for TES(E): finitely many events, a finite time
/// grid and a length bound.
struct FiniteUniverse
{
  EventSet events;
  std::vector<TimeStamp> grid;
  std::size_t depth = 0;
  /// Admit the empty observable.
  bool allow_silent = true;
  /// Only prefixes of length exactly `depth` (complete bounded runs).
  bool exact_length = false;

  std::string describe() const;
};

/// Tractability guard for exhaustive enumeration.
struct EnumerationGuard
{
  std::size_t max_events = 4;
  std::size_t max_grid = 4;
  std::size_t max_depth = 4;
};

/// Every well-formed prefix over the universe: observables drawn from the
/// power set of the events, times drawn order-preservingly from the grid.
/// Throws std::invalid_argument when the universe exceeds the guard or is
/// itself malformed.
Behavior enumerate_prefixes(const FiniteUniverse& u, const EnumerationGuard& guard = {});

/// The observables admitted by the universe.
std::vector<Observable> universe_observables(const FiniteUniverse& u);

} // namespace tescps
