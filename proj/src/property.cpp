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

#include <tescps/property.hpp>

#include <tescps/trace_io.hpp>

#include <cmath>
#include <stdexcept>

namespace tescps {

using nlohmann::json;

namespace {

constexpr double position_tolerance = 1e-9;
constexpr double energy_tolerance = 1e-9;

bool same_position(const Position& a, const Position& b)
{
  return std::abs(a.x - b.x) <= position_tolerance && std::abs(a.y - b.y) <= position_tolerance;
}

/// First index whose prefix gets Fail; nullopt if none.
std::optional<std::size_t> first_failure(const TraceProperty& p, const TesPrefix& trace)
{
  for (std::size_t k = 1; k <= trace.size(); ++k)
    if (p.verdict(trace.take(k)) == Verdict::Fail)
      return k - 1;
  return std::nullopt;
}

void require_interface(const TraceProperty& p, const TesPrefix& trace)
{
  for (const auto& o : trace)
    for (const auto& e : o.observable)
      if (!p.interface.contains(e))
        throw std::invalid_argument("event " + e.encoding() + " lies outside the interface of property "
                                    + p.name);
}

std::optional<TimeStamp> insertion_time(const TesPrefix& p, std::size_t position)
{
  if (p.empty())
    return TimeStamp(1);
  if (position == p.size())
    return p.back().time + TimeStamp(1);
  const TimeStamp before = position == 0 ? TimeStamp(0) : p[position - 1].time;
  if (!(before < p[position].time))
    return std::nullopt;
  return midpoint(before, p[position].time);
}

json mutation_json(const Mutation& m)
{
  if (const auto* ins = std::get_if<Insertion>(&m))
    return json{{"kind", "insert"}, {"position", ins->position}, {"observation", to_json(ins->observation)}};
  const auto& re = std::get<Retiming>(m);
  json times = json::array();
  for (const auto& t : re.times)
    times.push_back(to_json(t));
  return json{{"kind", "retime"}, {"times", times}};
}

} // namespace

TesPrefix apply_mutation(const TesPrefix& p, const Mutation& m)
{
  if (const auto* ins = std::get_if<Insertion>(&m))
  {
    std::vector<Observation> items(p.begin(), p.end());
    items.insert(items.begin() + static_cast<std::ptrdiff_t>(ins->position), ins->observation);
    return TesPrefix(std::move(items));
  }
  return p.retimed(std::get<Retiming>(m).times);
}

bool replay(const TraceProperty& p, const Witness& w)
{
  const auto trace = w.mutation ? apply_mutation(w.trace, *w.mutation) : w.trace;
  return p.verdict(trace) == Verdict::Fail;
}

bool replay(const Component& c, const Witness& w)
{
  const auto trace = w.mutation ? apply_mutation(w.trace, *w.mutation) : w.trace;
  return c.accept(trace) == Verdict::Fail;
}

json report_json(const CheckResult& r)
{
  json out{{"verdict", std::string(to_string(r.verdict))}, {"samples", r.samples}};
  if (r.witness)
  {
    json w{{"trace", to_json(r.witness->trace)}, {"seed", r.witness->seed}};
    w["mutation"] = r.witness->mutation ? mutation_json(*r.witness->mutation) : json(nullptr);
    if (r.witness->index)
      w["index"] = *r.witness->index;
    out["witness"] = std::move(w);
  }
  return out;
}

CheckResult check_trace(const TraceProperty& p, const TesPrefix& trace)
{
  require_interface(p, trace);
  CheckResult r;
  r.samples = 1;
  r.verdict = p.verdict(trace);
  if (r.verdict == Verdict::Fail)
    r.witness = Witness{trace, 0, first_failure(p, trace), std::nullopt};
  else if (r.verdict == Verdict::Pass && !p.pass_closed)
    r.verdict = Verdict::Pending;
  return r;
}

CheckResult satisfies_trace(const Component& c, const TraceProperty& p, std::size_t depth, std::uint64_t seeds)
{
  if (c.interface.finite() && p.interface.finite() && !is_subset(*c.interface.finite(), *p.interface.finite()))
    throw std::invalid_argument("interface of " + c.name + " is not contained in that of property " + p.name);

  CheckResult r;
  bool all_pass = true;
  const std::uint64_t rounds = c.exhaustive ? std::min<std::uint64_t>(seeds, 1) : seeds;
  for (std::uint64_t seed = 0; seed < rounds; ++seed)
    for (const auto& prefix : c.generate({depth, seed}))
    {
      require_interface(p, prefix);
      ++r.samples;
      const auto v = p.verdict(prefix);
      if (v == Verdict::Fail)
      {
        r.verdict = Verdict::Fail;
        r.witness = Witness{prefix, seed, first_failure(p, prefix), std::nullopt};
        return r;
      }
      all_pass = all_pass && v == Verdict::Pass;
    }
  r.verdict = (all_pass && p.pass_closed && r.samples > 0) ? Verdict::Pass : Verdict::Pending;
  return r;
}

Component componentize(const TraceProperty& p, std::optional<FiniteUniverse> universe)
{
  Component c;
  c.name = "C[" + p.name + "]";
  c.interface = p.interface;
  c.exhaustive = universe.has_value();
  c.accept = [p](const TesPrefix& prefix) {
    if (validate_prefix(prefix) != Verdict::Pass || p.verdict(prefix) == Verdict::Fail)
      return Verdict::Fail;
    for (const auto& o : prefix)
      if (!p.interface.contains(o.observable))
        return Verdict::Fail;
    return Verdict::Pass;
  };
  c.generate = [p, universe](const GenerationRequest& req) {
    if (!universe)
      throw std::invalid_argument("componentized property " + p.name + " needs a finite universe to generate");
    Behavior out;
    for (const auto& prefix : enumerate_prefixes(*universe))
      if (prefix.size() <= req.depth && p.verdict(prefix) != Verdict::Fail)
        out.insert(prefix);
    return out;
  };
  return c;
}

CheckResult check_coordination(const std::vector<Component>& components, const std::vector<Glue>& glue,
                               const TraceProperty& coord, const Component& orch,
                               std::size_t depth, std::uint64_t seeds)
{
  if (glue.size() != components.size())
    throw std::invalid_argument("coordination needs one glue entry per component");
  if (components.empty())
    return satisfies_trace(orch, coord, depth, seeds);

  Component system = components.front();
  for (std::size_t i = 1; i < components.size(); ++i)
    system = product(system, components[i], glue[i - 1].relation, glue[i - 1].plus);
  const auto coordinated = product(system, orch, glue.back().relation, glue.back().plus);
  return satisfies_trace(coordinated, coord, depth, seeds);
}

InsertionSet fixed_insertions(std::vector<Observable> xs)
{
  return [xs = std::move(xs)](const TesPrefix&, const TimeStamp&) { return xs; };
}

CheckResult hyper_insert_check(const Component& c, const InsertionSet& xs, std::size_t depth, std::uint64_t seeds)
{
  CheckResult r;
  const std::uint64_t rounds = c.exhaustive ? std::min<std::uint64_t>(seeds, 1) : seeds;
  for (std::uint64_t seed = 0; seed < rounds; ++seed)
    for (const auto& sigma : c.generate({depth, seed}))
    {
      ++r.samples;
      for (std::size_t i = 0; i <= std::min(depth, sigma.size()); ++i)
      {
        const auto t = insertion_time(sigma, i);
        if (!t)
          continue;
        for (const auto& x : xs(sigma.take(i), *t))
        {
          if (!c.interface.contains(x))
            throw std::invalid_argument("inserted observable " + to_string(x) + " lies outside the interface of "
                                        + c.name);
          const Mutation m = Insertion{i, {x, *t}};
          if (c.accept(apply_mutation(sigma, m)) == Verdict::Fail)
          {
            r.verdict = Verdict::Fail;
            r.witness = Witness{sigma, seed, std::nullopt, m};
            return r;
          }
        }
      }
    }
  return r;
}

CheckResult hyper_shift_check(const Component& c, std::size_t depth, std::size_t time_samples, std::uint64_t seeds)
{
  CheckResult r;
  const std::uint64_t rounds = c.exhaustive ? std::min<std::uint64_t>(seeds, 1) : seeds;
  for (std::uint64_t seed = 0; seed < rounds; ++seed)
    for (const auto& sigma : c.generate({depth, seed}))
    {
      ++r.samples;
      for (std::size_t k = 0; k < time_samples; ++k)
      {
        // Seeds >= 1 draw random gaps; the sample index keeps draws distinct.
        const auto times = increasing_times(sigma.size(), 0x9e3779b97f4a7c15ull * (k + 1) + seed, TimeStamp(1, 8));
        const Mutation m = Retiming{times};
        if (c.accept(apply_mutation(sigma, m)) == Verdict::Fail)
        {
          r.verdict = Verdict::Fail;
          r.witness = Witness{sigma, seed, std::nullopt, m};
          return r;
        }
      }
    }
  return r;
}

TraceProperty p_finite(Interface e)
{
  return {"finite", std::move(e), [](const TesPrefix&) { return Verdict::Pending; }, false, false};
}

TraceProperty p_top(Interface e)
{
  return {"top", std::move(e), [](const TesPrefix&) { return Verdict::Pass; }, true, false};
}

TraceProperty p_energy(std::vector<std::string> batteries)
{
  auto ids = std::make_shared<const std::vector<std::string>>(std::move(batteries));
  auto verdict = [ids](const TesPrefix& p) {
    for (const auto& o : p)
      for (const auto& e : o.observable)
        if (e.kind() == EventKind::Read && std::find(ids->begin(), ids->end(), e.agent()) != ids->end()
            && e.scalar() <= energy_tolerance)
          return Verdict::Fail;
    return Verdict::Pending;
  };
  return {"energy", Interface::everything(), std::move(verdict), false, true};
}

TraceProperty p_no_overlap(std::string object_a, std::string object_b)
{
  auto verdict = [object_a, object_b](const TesPrefix& p) {
    for (const auto& o : p)
      for (const auto& a : o.observable)
      {
        if (a.kind() != EventKind::Loc || a.agent() != object_a)
          continue;
        for (const auto& b : o.observable)
          if (b.kind() == EventKind::Loc && b.agent() == object_b && same_position(a.position(), b.position()))
            return Verdict::Fail;
      }
    return Verdict::Pending;
  };
  return {"no-overlap", Interface::everything(), std::move(verdict), false, true};
}

TraceProperty p_swap(std::string object_a, Position target_a, std::string object_b, Position target_b)
{
  auto has = [](const Observable& o, const std::string& who, const Position& where) {
    return std::any_of(o.begin(), o.end(), [&](const Event& e) {
      return e.kind() == EventKind::Loc && e.agent() == who && same_position(e.position(), where);
    });
  };
  auto verdict = [=](const TesPrefix& p) {
    for (const auto& o : p)
      if (has(o.observable, object_a, target_a) && has(o.observable, object_b, target_b))
        return Verdict::Pass;
    return Verdict::Pending;
  };
  return {"swap", Interface::everything(), std::move(verdict), true, false};
}

} // namespace tescps
