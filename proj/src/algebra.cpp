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

#include <tescps/algebra.hpp>

#include <vector>

namespace tescps {

namespace {

/// Depth-first decomposition of a composite prefix into operand prefixes.
class Decomposition
{
public:
  Decomposition(const Component& c1, const Component& c2, const TesRelation& r,
                const ObsComposition& plus, const TesPrefix& target)
  : _c1(c1), _c2(c2), _r(r), _plus(plus), _target(target)
  {
  }

  Verdict run()
  {
    const auto left = _c1.accept(_left);
    const auto right = _c2.accept(_right);
    if (left != Verdict::Fail && right != Verdict::Fail)
      descend(0, left, right);
    return _best;
  }

private:
  enum class Side { Left, Right, Both };

  void descend(std::size_t k, Verdict left_verdict, Verdict right_verdict)
  {
    if (_best == Verdict::Pass)
      return;
    if (k == _target.size())
    {
      if (left_verdict == Verdict::Pass && right_verdict == Verdict::Pass)
        _best = Verdict::Pass;
      else
        _best = Verdict::Pending;
      return;
    }

    const auto& o = _target[k];
    if (_c1.interface.contains(o.observable))
      attempt(k, {o}, std::nullopt, left_verdict, right_verdict);
    if (_c2.interface.contains(o.observable))
      attempt(k, std::nullopt, {o}, left_verdict, right_verdict);

    const std::vector<Event> events(o.observable.begin(), o.observable.end());
    std::vector<std::vector<Side>> choices(events.size());
    for (std::size_t i = 0; i < events.size(); ++i)
    {
      const bool in1 = _c1.interface.contains(events[i]);
      const bool in2 = _c2.interface.contains(events[i]);
      if (in1)
        choices[i].push_back(Side::Left);
      if (in2)
        choices[i].push_back(Side::Right);
      if (in1 && in2)
        choices[i].push_back(Side::Both);
      if (choices[i].empty())
        return;
    }

    std::vector<std::size_t> pick(events.size(), 0);
    while (true)
    {
      Observable left;
      Observable right;
      for (std::size_t i = 0; i < events.size(); ++i)
      {
        const auto side = choices[i][pick[i]];
        if (side != Side::Right)
          left.insert(events[i]);
        if (side != Side::Left)
          right.insert(events[i]);
      }
      if (_plus.combine(left, right) == o.observable)
        attempt(k, Observation{left, o.time}, Observation{right, o.time}, left_verdict, right_verdict);
      if (_best == Verdict::Pass)
        return;

      std::size_t i = 0;
      while (i < events.size() && ++pick[i] == choices[i].size())
        pick[i++] = 0;
      if (i == events.size())
        break;
    }
  }

  void attempt(std::size_t k, std::optional<Observation> left, std::optional<Observation> right,
               Verdict left_verdict, Verdict right_verdict)
  {
    if (left)
    {
      _left.push_back(*left);
      left_verdict = _c1.accept(_left);
    }
    if (right)
    {
      _right.push_back(*right);
      right_verdict = _c2.accept(_right);
    }
    if (left_verdict != Verdict::Fail && right_verdict != Verdict::Fail
        && _r(_left, _right, _c1.interface, _c2.interface) != Verdict::Fail)
      descend(k + 1, left_verdict, right_verdict);
    if (left)
      _left.pop_back();
    if (right)
      _right.pop_back();
  }

  const Component& _c1;
  const Component& _c2;
  const TesRelation& _r;
  const ObsComposition& _plus;
  const TesPrefix& _target;
  TesPrefix _left;
  TesPrefix _right;
  Verdict _best = Verdict::Fail;
};

} // namespace

Component product(const Component& c1, const Component& c2, TesRelation r, ObsComposition plus)
{
  Component c;
  c.name = "(" + c1.name + " x " + c2.name + ")";
  c.interface = unite(c1.interface, c2.interface);
  c.exhaustive = c1.exhaustive && c2.exhaustive;

  c.accept = [c1, c2, r, plus](const TesPrefix& p) {
    if (validate_prefix(p) != Verdict::Pass)
      return Verdict::Fail;
    return Decomposition(c1, c2, r, plus, p).run();
  };

  c.generate = [c1, c2, r, plus](const GenerationRequest& req) {
    Behavior out;
    const auto left = c1.generate(req);
    if (left.empty())
      return out;
    const auto right = c2.generate(req);
    for (const auto& p1 : left)
      for (const auto& p2 : right)
        if (r(p1, p2, c1.interface, c2.interface) != Verdict::Fail)
          out.insert(lift_composition(plus, p1, p2));
    return out;
  };
  return c;
}

DivisionOutcome division_witness(const Component& dividend, const Component& divisor,
                                 const TesRelation& r, const ObsComposition& plus,
                                 const DivisionOptions& opts, const TesPrefix& p)
{
  if (validate_prefix(p) != Verdict::Pass)
    return {Verdict::Fail, false, std::nullopt};
  for (const auto& o : p)
    if (!dividend.interface.contains(o.observable))
      return {Verdict::Fail, false, std::nullopt};

  const std::uint64_t seeds = divisor.exhaustive ? 1 : opts.seeds;
  for (std::uint64_t seed = 0; seed < seeds; ++seed)
    for (const auto& p2 : divisor.generate({opts.depth, seed}))
    {
      if (r(p, p2, dividend.interface, divisor.interface) == Verdict::Fail)
        continue;
      if (dividend.accept(lift_composition(plus, p, p2)) != Verdict::Fail)
        return {Verdict::Pass, false, p2};
    }

  if (divisor.exhaustive)
    return {Verdict::Fail, false, std::nullopt};
  return {Verdict::Pending, true, std::nullopt};
}

Component divide(const Component& c1, const Component& c2, TesRelation r, ObsComposition plus,
                 DivisionOptions opts)
{
  Component c;
  c.name = "(" + c1.name + " / " + c2.name + ")";
  c.interface = c1.interface;

  c.accept = [c1, c2, r, plus, opts](const TesPrefix& p) {
    return division_witness(c1, c2, r, plus, opts, p).verdict;
  };

  c.generate = [c1, c2, r, plus, opts](const GenerationRequest& req) {
    Behavior candidates;
    if (opts.candidates)
    {
      for (const auto& p : enumerate_prefixes(*opts.candidates))
        if (p.size() <= req.depth)
          candidates.insert(p);
    }
    else
      candidates = c1.generate(req);

    Behavior out;
    for (const auto& p : candidates)
      if (division_witness(c1, c2, r, plus, opts, p).verdict == Verdict::Pass)
        out.insert(p);
    return out;
  };
  return c;
}

} // namespace tescps
