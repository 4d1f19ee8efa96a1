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

#include <tescps/component.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tescps {

Interface Interface::of(EventSet events)
{
  Interface out;
  auto shared = std::make_shared<const EventSet>(events);
  out._contains = [shared](const Event& e) { return shared->count(e) > 0; };
  out._description = to_string(events);
  out._finite = std::move(events);
  return out;
}

Interface Interface::where(Predicate contains, std::string description)
{
  Interface out;
  out._contains = std::move(contains);
  out._description = std::move(description);
  return out;
}

Interface Interface::everything()
{
  return where([](const Event&) { return true; }, "*");
}

bool Interface::contains(const Observable& o) const
{
  return std::all_of(o.begin(), o.end(), [this](const Event& e) { return contains(e); });
}

Interface unite(const Interface& a, const Interface& b)
{
  if (a._finite && b._finite)
  {
    EventSet all = *a._finite;
    all.insert(b._finite->begin(), b._finite->end());
    return Interface::of(std::move(all));
  }
  auto ca = a._contains;
  auto cb = b._contains;
  return Interface::where(
    [ca, cb](const Event& e) { return ca(e) || cb(e); },
    a._description + " u " + b._description);
}

std::vector<TimeStamp> increasing_times(std::size_t count, std::uint64_t seed, TimeStamp min_gap)
{
  std::vector<TimeStamp> out;
  out.reserve(count);
  if (seed == 0)
  {
    for (std::size_t i = 0; i < count; ++i)
      out.emplace_back(static_cast<std::int64_t>(i + 1));
    return out;
  }
  std::mt19937_64 rng(seed);
  TimeStamp t;
  for (std::size_t i = 0; i < count; ++i)
  {
    t = t + min_gap + TimeStamp(static_cast<std::int64_t>(rng() % 8), 4);
    out.push_back(t);
  }
  return out;
}

Component make_finite_component(std::string name, Interface interface, Behavior members)
{
  for (const auto& p : members)
  {
    if (validate_prefix(p) != Verdict::Pass)
      throw std::invalid_argument("finite component member is not well formed: " + to_string(p));
    for (const auto& o : p)
      if (!interface.contains(o.observable))
        throw std::invalid_argument("finite component member leaves the interface: " + to_string(p));
  }

  auto shared = std::make_shared<const Behavior>(std::move(members));
  Component c;
  c.name = std::move(name);
  c.interface = std::move(interface);
  c.exhaustive = true;
  c.accept = [shared](const TesPrefix& p) {
    // Members extending p form a contiguous run starting at lower_bound(p).
    const auto it = shared->lower_bound(p);
    return it != shared->end() && is_prefix_of(p, *it) ? Verdict::Pass : Verdict::Fail;
  };
  c.generate = [shared](const GenerationRequest& req) {
    Behavior out;
    for (const auto& p : *shared)
      if (p.size() <= req.depth)
        out.insert(p);
    return out;
  };
  return c;
}

Component make_empty_component(std::string name, Interface interface)
{
  return make_finite_component(std::move(name), std::move(interface), {});
}

Component make_function_component(std::string name, SampledFunction f, std::vector<double> initials)
{
  if (initials.empty())
    throw std::invalid_argument("function component needs at least one initial value");

  Component c;
  c.name = name;
  c.interface = Interface::where(
    [name](const Event& e) { return e.kind() == EventKind::Sample && e.agent() == name; },
    "sample(" + name + ");*");

  c.accept = [name, f, initials](const TesPrefix& p) {
    if (validate_prefix(p) != Verdict::Pass)
      return Verdict::Fail;
    for (const double d0 : initials)
    {
      const bool all = std::all_of(p.begin(), p.end(), [&](const Observation& o) {
        return o.observable == Observable{Event::sample(name, f(d0, o.time))};
      });
      if (all)
        return Verdict::Pass;
    }
    return Verdict::Fail;
  };

  c.generate = [name, f, initials](const GenerationRequest& req) {
    Behavior out;
    const auto times = increasing_times(req.depth, req.seed);
    for (const double d0 : initials)
    {
      TesPrefix p;
      for (const auto& t : times)
        p.push_back({{Event::sample(name, f(d0, t))}, t});
      out.insert(std::move(p));
    }
    return out;
  };
  return c;
}

Component make_alternating_component()
{
  const auto zero = Event::symbol("0");
  const auto one = Event::symbol("1");

  Component c;
  c.name = "alternating";
  c.interface = Interface::of({zero, one});
  c.accept = [zero, one](const TesPrefix& p) {
    if (validate_prefix(p) != Verdict::Pass)
      return Verdict::Fail;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
      const auto& o = p[i].observable;
      if (o != Observable{zero} && o != Observable{one})
        return Verdict::Fail;
      if (i > 0 && o == p[i - 1].observable)
        return Verdict::Fail;
    }
    return Verdict::Pass;
  };
  c.generate = [zero, one](const GenerationRequest& req) {
    Behavior out;
    const auto times = increasing_times(req.depth, req.seed);
    for (int start = 0; start < 2; ++start)
    {
      TesPrefix p;
      for (std::size_t i = 0; i < times.size(); ++i)
        p.push_back({{(i + start) % 2 == 0 ? zero : one}, times[i]});
      out.insert(std::move(p));
    }
    return out;
  };
  return c;
}

} // namespace tescps
