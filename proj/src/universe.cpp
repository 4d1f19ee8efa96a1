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

#include <tescps/universe.hpp>

#include <functional>
#include <stdexcept>

namespace tescps {

std::string FiniteUniverse::describe() const
{
  std::string grid_text = "[";
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid_text += (i ? "," : "") + grid[i].str();
  grid_text += "]";
  return "events=" + to_string(events) + " grid=" + grid_text + " depth=" + std::to_string(depth)
       + (allow_silent ? "" : " nonempty") + (exact_length ? " exact" : "");
}

std::vector<Observable> universe_observables(const FiniteUniverse& u)
{
  const std::vector<Event> items(u.events.begin(), u.events.end());
  std::vector<Observable> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask)
  {
    if (mask == 0 && !u.allow_silent)
      continue;
    Observable o;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (std::size_t{1} << i))
        o.insert(items[i]);
    out.push_back(std::move(o));
  }
  return out;
}

Behavior enumerate_prefixes(const FiniteUniverse& u, const EnumerationGuard& guard)
{
  if (u.events.size() > guard.max_events || u.grid.size() > guard.max_grid || u.depth > guard.max_depth)
    throw std::invalid_argument("universe exceeds the enumeration guard (events <= "
                                + std::to_string(guard.max_events) + ", grid <= "
                                + std::to_string(guard.max_grid) + ", depth <= "
                                + std::to_string(guard.max_depth) + "): " + u.describe());
  if (validate_prefix(TesPrefix([&] {
        std::vector<Observation> v;
        for (const auto& t : u.grid)
          v.push_back({{}, t});
        return v;
      }())) != Verdict::Pass)
    throw std::invalid_argument("universe grid must be strictly increasing");
  if (u.depth > u.grid.size())
    throw std::invalid_argument("universe depth exceeds grid size");

  const auto observables = universe_observables(u);
  Behavior out;
  TesPrefix current;

  std::function<void(std::size_t)> extend = [&](std::size_t next_time) {
    if (!u.exact_length || current.size() == u.depth)
      out.insert(current);
    if (current.size() == u.depth)
      return;
    for (std::size_t t = next_time; t < u.grid.size(); ++t)
      for (const auto& o : observables)
      {
        current.push_back({o, u.grid[t]});
        extend(t + 1);
        current.pop_back();
      }
  };
  extend(0);
  return out;
}

} // namespace tescps
