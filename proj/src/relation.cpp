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

#include <tescps/relation.hpp>

#include <stdexcept>
#include <vector>

namespace tescps {

namespace {

constexpr std::size_t max_split_events = 16;

/// All sub-observables of `o`, indexed by bit mask over its sorted events.
std::vector<Observable> subsets(const Observable& o)
{
  if (o.size() > max_split_events)
    throw std::length_error("observable too large to decompose");
  const std::vector<Event> items(o.begin(), o.end());
  const std::size_t count = std::size_t{1} << items.size();
  std::vector<Observable> out(count);
  for (std::size_t mask = 0; mask < count; ++mask)
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (std::size_t{1} << i))
        out[mask].insert(items[i]);
  return out;
}

/// Some O'' with O' ∪ O'' = whole (O'' ⊇ whole \ O') satisfies `ok`.
template <typename Pred>
bool some_remainder(std::size_t whole_mask, std::size_t part_mask,
                    const std::vector<Observable>& subs, Pred ok)
{
  const std::size_t required = whole_mask & ~part_mask;
  // Enumerate supersets of `required` within `whole_mask`.
  const std::size_t free = part_mask;
  for (std::size_t extra = free;; extra = (extra - 1) & free)
  {
    if (ok(subs[required | extra]))
      return true;
    if (extra == 0)
      break;
  }
  return false;
}

} // namespace

ObsRelation::ObsRelation(std::string name, Presentation base, bool symmetric)
: _name(std::move(name)), _base(std::move(base)), _symmetric(symmetric)
{
}

ObsRelation ObsRelation::finite(Pairs pairs, bool symmetric, std::string name)
{
  auto shared = std::make_shared<const Pairs>(std::move(pairs));
  Presentation p;
  p.related = [shared](const Observable& a, const Observable& b) {
    return shared->count({a, b}) > 0;
  };
  p.has_right_partner = [shared](const Observable& a, const Interface& scope) {
    for (const auto& [l, r] : *shared)
      if (l == a && scope.contains(r))
        return true;
    return false;
  };
  p.has_left_partner = [shared](const Observable& b, const Interface& scope) {
    for (const auto& [l, r] : *shared)
      if (r == b && scope.contains(l))
        return true;
    return false;
  };
  return ObsRelation(std::move(name), std::move(p), symmetric);
}

ObsRelation ObsRelation::identity()
{
  Presentation p;
  p.related = [](const Observable& a, const Observable& b) { return !a.empty() && a == b; };
  p.has_right_partner = [](const Observable& a, const Interface& scope) {
    return !a.empty() && scope.contains(a);
  };
  p.has_left_partner = p.has_right_partner;
  return ObsRelation("identity", std::move(p), true);
}

ObsRelation ObsRelation::empty()
{
  return finite({}, true, "empty");
}

bool ObsRelation::related(const Observable& a, const Observable& b) const
{
  return _base.related(a, b) || (_symmetric && _base.related(b, a));
}

bool ObsRelation::has_right_partner(const Observable& a, const Interface& right_scope) const
{
  return _base.has_right_partner(a, right_scope)
      || (_symmetric && _base.has_left_partner(a, right_scope));
}

bool ObsRelation::has_left_partner(const Observable& b, const Interface& left_scope) const
{
  return _base.has_left_partner(b, left_scope)
      || (_symmetric && _base.has_right_partner(b, left_scope));
}

ObsRelation unite(const ObsRelation& a, const ObsRelation& b)
{
  // Fold each side's symmetric closure into the base so the union can stay
  // unflagged without losing pairs.
  ObsRelation::Presentation p;
  p.related = [a, b](const Observable& x, const Observable& y) {
    return a.related(x, y) || b.related(x, y);
  };
  p.has_right_partner = [a, b](const Observable& x, const Interface& s) {
    return a.has_right_partner(x, s) || b.has_right_partner(x, s);
  };
  p.has_left_partner = [a, b](const Observable& y, const Interface& s) {
    return a.has_left_partner(y, s) || b.has_left_partner(y, s);
  };
  return ObsRelation(a.name() + "+" + b.name(), std::move(p), a.symmetric() && b.symmetric());
}

ObsComposition union_composition()
{
  return {"union", [](const Observable& a, const Observable& b) { return unite(a, b); }, true, true};
}

ObsKappa kappa_true()
{
  return {"true", [](const Observation&, const Observation&, const Interface&, const Interface&) { return true; }, true};
}

ObsKappa kappa_equal()
{
  return {"equal",
          [](const Observation& a, const Observation& b, const Interface&, const Interface&) { return a == b; },
          true};
}

ObsKappa kappa_sync(ObsRelation rel)
{
  const bool symmetric = rel.symmetric();
  auto check = [rel = std::move(rel)](const Observation& o1, const Observation& o2,
                                      const Interface& e1, const Interface& e2) {
    if (o1.time < o2.time)
      return !rel.has_right_partner(o1.observable, e2);
    if (o2.time < o1.time)
      return !rel.has_left_partner(o2.observable, e1);

    if (o1.observable.empty() && o2.observable.empty())
      return true;

    const auto subs1 = subsets(o1.observable);
    const auto subs2 = subsets(o2.observable);
    const std::size_t whole1 = subs1.size() - 1;
    const std::size_t whole2 = subs2.size() - 1;

    for (std::size_t m1 = 0; m1 <= whole1; ++m1)
      for (std::size_t m2 = 0; m2 <= whole2; ++m2)
      {
        if (!rel.related(subs1[m1], subs2[m2]))
          continue;
        const bool left_rest = some_remainder(whole1, m1, subs1, [&](const Observable& r) {
          return !rel.has_right_partner(r, e2);
        });
        if (!left_rest)
          continue;
        const bool right_rest = some_remainder(whole2, m2, subs2, [&](const Observable& r) {
          return !rel.has_left_partner(r, e1);
        });
        if (right_rest)
          return true;
      }
    return false;
  };
  return {"sync", std::move(check), symmetric};
}

ObsKappa kappa_excl(ObsRelation rel)
{
  const bool symmetric = rel.symmetric();
  auto check = [rel = std::move(rel)](const Observation& o1, const Observation& o2,
                                      const Interface&, const Interface&) {
    if (o1.time != o2.time)
      return true;
    for (const auto& a : subsets(o1.observable))
      for (const auto& b : subsets(o2.observable))
        if (rel.related(a, b))
          return false;
    return true;
  };
  return {"excl", std::move(check), symmetric};
}

ObsKappa kappa_intersect(ObsKappa k1, ObsKappa k2)
{
  const bool symmetric = k1.symmetric && k2.symmetric;
  std::string name = k1.name + "&" + k2.name;
  auto check = [k1 = std::move(k1), k2 = std::move(k2)](const Observation& a, const Observation& b,
                                                        const Interface& e1, const Interface& e2) {
    return k1(a, b, e1, e2) && k2(a, b, e1, e2);
  };
  return {std::move(name), std::move(check), symmetric};
}

TesRelation free_relation()
{
  return {"free",
          [](const TesPrefix&, const TesPrefix&, const Interface&, const Interface&) { return Verdict::Pending; },
          true};
}

TesRelation lift_relation(ObsKappa k)
{
  const bool symmetric = k.symmetric;
  std::string name = "[" + k.name + "]";
  auto check = [k = std::move(k)](const TesPrefix& a, const TesPrefix& b,
                                  const Interface& e1, const Interface& e2) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size())
    {
      if (!k(a[i], b[j], e1, e2))
        return Verdict::Fail;
      const auto& ta = a[i].time;
      const auto& tb = b[j].time;
      if (ta < tb)
        ++i;
      else if (tb < ta)
        ++j;
      else
      {
        ++i;
        ++j;
      }
    }
    return Verdict::Pending;
  };
  return {std::move(name), std::move(check), symmetric};
}

TesRelation intersect(TesRelation a, TesRelation b)
{
  const bool symmetric = a.symmetric && b.symmetric;
  std::string name = a.name + "&" + b.name;
  auto check = [a = std::move(a), b = std::move(b)](const TesPrefix& p, const TesPrefix& q,
                                                    const Interface& e1, const Interface& e2) {
    if (a(p, q, e1, e2) == Verdict::Fail || b(p, q, e1, e2) == Verdict::Fail)
      return Verdict::Fail;
    return Verdict::Pending;
  };
  return {std::move(name), std::move(check), symmetric};
}

TesRelation sync_relation(ObsRelation rel)
{
  auto r = lift_relation(kappa_sync(rel));
  r.name = "sync(" + rel.name() + ")";
  return r;
}

TesRelation excl_relation(ObsRelation rel)
{
  auto r = lift_relation(kappa_excl(rel));
  r.name = "excl(" + rel.name() + ")";
  return r;
}

TesRelation sync_excl_relation(ObsRelation rel)
{
  auto r = lift_relation(kappa_intersect(kappa_sync(rel), kappa_excl(rel)));
  r.name = "sync&excl(" + rel.name() + ")";
  return r;
}

TesPrefix lift_composition(const ObsComposition& plus, const TesPrefix& a, const TesPrefix& b)
{
  std::vector<Observation> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size())
  {
    if (j == b.size() || (i < a.size() && a[i].time < b[j].time))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j].time < a[i].time)
      out.push_back(b[j++]);
    else
    {
      out.push_back({plus.combine(a[i].observable, b[j].observable), a[i].time});
      ++i;
      ++j;
    }
  }
  return TesPrefix(std::move(out));
}

} // namespace tescps
