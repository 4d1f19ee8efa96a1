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

#include <tescps/oracle.hpp>

#include <map>
#include <random>
#include <stdexcept>

namespace tescps {

using nlohmann::json;

namespace {

std::string show(const TesPrefix& p) { return to_string(p); }

/// Every observation the universe can produce.
std::vector<Observation> universe_observations(const FiniteUniverse& u)
{
  std::vector<Observation> out;
  for (const auto& o : universe_observables(u))
    for (const auto& t : u.grid)
      out.push_back({o, t});
  return out;
}

Behavior restrict_to(const Behavior& all, const Interface& e)
{
  Behavior out;
  for (const auto& p : all)
    if (std::all_of(p.begin(), p.end(), [&](const Observation& o) { return e.contains(o.observable); }))
      out.insert(p);
  return out;
}

Behavior random_subset(const Behavior& all, std::mt19937_64& rng, unsigned one_in, bool nonempty)
{
  Behavior out;
  for (const auto& p : all)
    if (rng() % one_in == 0)
      out.insert(p);
  if (nonempty && out.empty() && !all.empty())
  {
    auto it = all.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng() % all.size()));
    out.insert(*it);
  }
  return out;
}

bool refuted(const TesRelation& r, const TesPrefix& p, const TesPrefix& q, const Interface& e1, const Interface& e2)
{
  return r(p, q, e1, e2) == Verdict::Fail;
}

Observation iota(const Observation& a, const Observation& b, const ObsComposition& plus)
{
  if (a.time < b.time)
    return a;
  if (b.time < a.time)
    return b;
  return {plus.combine(a.observable, b.observable), a.time};
}

std::string show(const Observation& o) { return "(" + to_string(o.observable) + "," + o.time.str() + ")"; }

LawResult fresh(std::string law, std::string relation, const FiniteUniverse& u)
{
  LawResult r;
  r.law = std::move(law);
  r.relation = std::move(relation);
  r.universe = u.describe();
  return r;
}

} // namespace

bool gfp_related(const ExtensionalRelation& r, const TesPrefix& p, const TesPrefix& q,
                 const Interface& e1, const Interface& e2)
{
  if (!r.kappa)
    return true;
  const std::size_t n1 = p.size();
  const std::size_t n2 = q.size();
  // alive[i][j]: the pair of suffixes (p from i, q from j) is still in the
  // candidate relation. Suffix pairs with an exhausted side are unconstrained.
  std::vector<std::vector<bool>> alive(n1 + 1, std::vector<bool>(n2 + 1, true));
  bool changed = true;
  while (changed)
  {
    changed = false;
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j)
      {
        if (!alive[i][j])
          continue;
        bool justified = (*r.kappa)(p[i], q[j], e1, e2);
        if (justified)
        {
          const auto& t1 = p[i].time;
          const auto& t2 = q[j].time;
          if (t1 < t2)
            justified = alive[i + 1][j];
          else if (t2 < t1)
            justified = alive[i][j + 1];
          else
            justified = alive[i + 1][j + 1];
        }
        if (!justified)
        {
          alive[i][j] = false;
          changed = true;
        }
      }
  }
  return alive[0][0];
}

TesPrefix merge_extensional(const ObsComposition& plus, const TesPrefix& p, const TesPrefix& q)
{
  std::map<TimeStamp, std::pair<std::optional<Observable>, std::optional<Observable>>> by_time;
  for (const auto& o : p)
    by_time[o.time].first = o.observable;
  for (const auto& o : q)
    by_time[o.time].second = o.observable;
  TesPrefix out;
  for (const auto& [t, sides] : by_time)
  {
    if (sides.first && sides.second)
      out.push_back({plus.combine(*sides.first, *sides.second), t});
    else
      out.push_back({sides.first ? *sides.first : *sides.second, t});
  }
  return out;
}

Behavior product_extensional(const Behavior& l1, const Interface& e1, const Behavior& l2, const Interface& e2,
                             const ExtensionalRelation& r, const ObsComposition& plus)
{
  Behavior out;
  for (const auto& p : l1)
    for (const auto& q : l2)
      if (gfp_related(r, p, q, e1, e2))
        out.insert(merge_extensional(plus, p, q));
  return out;
}

std::string_view to_string(LawStatus s)
{
  switch (s)
  {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::SideConditionViolated: return "side-condition-violated";
  }
  return "?";
}

FiniteUniverse named_universe(const std::string& name)
{
  FiniteUniverse u;
  u.events = {Event::symbol("a"), Event::symbol("b")};
  if (name == "tiny")
  {
    u.grid = {TimeStamp(1), TimeStamp(2)};
    u.depth = 2;
  }
  else if (name == "small")
  {
    u.grid = {TimeStamp(1), TimeStamp(2), TimeStamp(3)};
    u.depth = 3;
  }
  else
    throw std::invalid_argument("unknown universe '" + name + "' (valid: tiny, small)");
  return u;
}

const std::vector<std::string>& law_names()
{
  static const std::vector<std::string> names{
    "commutativity", "commutativity-mutant", "associativity", "idempotence",
    "division", "satisfaction", "refutation", "oracle-equivalence"};
  return names;
}

ObsRelation default_obs_relation(const FiniteUniverse& u)
{
  if (u.events.empty())
    return ObsRelation::empty();
  const auto first = *u.events.begin();
  const auto second = u.events.size() > 1 ? *std::next(u.events.begin()) : first;
  return ObsRelation::finite({{{first}, {second}}}, true, "{(" + first.encoding() + "," + second.encoding() + ")}");
}

std::vector<ExtensionalRelation> shipped_relations(const FiniteUniverse& u)
{
  const auto rel = default_obs_relation(u);
  return {
    {"free", std::nullopt},
    {"sync", kappa_sync(rel)},
    {"excl", kappa_excl(rel)},
    {"sync&excl", kappa_intersect(kappa_sync(rel), kappa_excl(rel))},
  };
}

ExtensionalRelation asymmetric_mutant()
{
  ObsKappa k{"left-not-later",
             [](const Observation& a, const Observation& b, const Interface&, const Interface&) {
               return !(b.time < a.time);
             },
             false};
  return {"mutant", k};
}

TesRelation to_tes_relation(const ExtensionalRelation& r)
{
  if (!r.kappa)
    return free_relation();
  auto out = lift_relation(*r.kappa);
  out.name = r.name;
  return out;
}

LawResult check_commutativity(const FiniteUniverse& u, const ExtensionalRelation& r)
{
  LawResult res = fresh("commutativity", r.name, u);
  const auto all = enumerate_prefixes(u);
  const auto e = Interface::of(u.events);
  const auto rel = to_tes_relation(r);
  const auto plus = union_composition();
  for (const auto& p : all)
    for (const auto& q : all)
    {
      ++res.checked;
      const bool pq = refuted(rel, p, q, e, e);
      const bool qp = refuted(rel, q, p, e, e);
      if (pq != qp || (!pq && lift_composition(plus, p, q) != lift_composition(plus, q, p)))
      {
        res.status = LawStatus::Fail;
        res.counterexample = "p=" + show(p) + " q=" + show(q) + (pq != qp ? " refuted only one way" : " composed only one way");
        return res;
      }
    }
  return res;
}

LawResult check_associativity(const FiniteUniverse& u, const ExtensionalRelation& r)
{
  LawResult res = fresh("associativity", r.name, u);
  const auto e = Interface::of(u.events);
  const auto plus = union_composition();

  if (r.kappa)
  {
    const auto obs = universe_observations(u);
    const auto& k = *r.kappa;
    for (const auto& o1 : obs)
      for (const auto& o2 : obs)
        for (const auto& o3 : obs)
        {
          const bool lhs = k(o1, o2, e, e) && k(iota(o1, o2, plus), o3, e, e);
          const bool rhs = k(o2, o3, e, e) && k(o1, iota(o2, o3, plus), e, e);
          if (lhs != rhs)
          {
            res.status = LawStatus::SideConditionViolated;
            res.counterexample = "o1=" + show(o1) + " o2=" + show(o2) + " o3=" + show(o3);
            return res;
          }
        }
  }

  const auto all = enumerate_prefixes(u);
  const auto rel = to_tes_relation(r);
  for (const auto& s1 : all)
    for (const auto& s2 : all)
    {
      const bool r12 = !refuted(rel, s1, s2, e, e);
      const auto m12 = lift_composition(plus, s1, s2);
      for (const auto& s3 : all)
      {
        ++res.checked;
        const bool left = r12 && !refuted(rel, m12, s3, e, e);
        const bool right = !refuted(rel, s2, s3, e, e) && !refuted(rel, s1, lift_composition(plus, s2, s3), e, e);
        if (left != right)
        {
          res.status = LawStatus::Fail;
          res.counterexample = "s1=" + show(s1) + " s2=" + show(s2) + " s3=" + show(s3);
          return res;
        }
      }
    }
  return res;
}

LawResult check_idempotence(const FiniteUniverse& u, const ExtensionalRelation& r)
{
  LawResult res = fresh("idempotence", r.name, u);
  const auto e = Interface::of(u.events);
  const auto plus = union_composition();

  const auto obs = universe_observations(u);
  for (const auto& o1 : obs)
    for (const auto& o2 : obs)
      if ((!r.kappa || (*r.kappa)(o1, o2, e, e)) && o1 != o2)
      {
        res.status = LawStatus::SideConditionViolated;
        res.counterexample = "relates distinct o1=" + show(o1) + " o2=" + show(o2);
        return res;
      }

  const auto all = enumerate_prefixes(u);
  const auto rel = to_tes_relation(r);
  for (const auto& s : all)
    for (const auto& t : all)
    {
      ++res.checked;
      const bool related = !refuted(rel, s, t, e, e);
      if (s == t && (!related || lift_composition(plus, s, s) != s))
      {
        res.status = LawStatus::Fail;
        res.counterexample = "s=" + show(s) + " does not compose with itself into itself";
        return res;
      }
      if (related && s != t)
      {
        const auto m = lift_composition(plus, s, t);
        if (m != s && m != t)
        {
          res.status = LawStatus::Fail;
          res.counterexample = "s=" + show(s) + " t=" + show(t) + " compose outside {s,t}";
          return res;
        }
      }
    }
  return res;
}

LawResult check_division(const FiniteUniverse& u, const ExtensionalRelation& r, std::uint64_t seed, std::size_t rounds)
{
  LawResult res = fresh("division", r.name, u);
  const auto plus = union_composition();
  const auto e1 = Interface::of(u.events);
  const auto e2 = Interface::of({*u.events.rbegin()});
  const auto e12 = unite(e1, e2);
  const auto all = enumerate_prefixes(u);
  const auto all1 = restrict_to(all, e1);
  const auto all2 = restrict_to(all, e2);
  const auto rel = to_tes_relation(r);

  std::mt19937_64 rng(seed);
  for (std::size_t round = 0; round < rounds; ++round)
  {
    const auto l1 = random_subset(all1, rng, 4, true);
    const auto l2 = random_subset(all2, rng, 3, true);
    const auto lprod = product_extensional(l1, e1, l2, e2, r, plus);

    const auto c1 = make_finite_component("L1", e1, l1);
    const auto c2 = make_finite_component("L2", e2, l2);
    DivisionOptions opts;
    opts.depth = u.depth;
    const auto quotient = divide(product(c1, c2, rel, plus), c2, rel, plus, opts);

    auto in_l3 = [&](const TesPrefix& s) {
      for (const auto& s2 : l2)
        if (gfp_related(r, s, s2, e12, e2) && lprod.count(merge_extensional(plus, s, s2)))
          return true;
      return false;
    };

    for (const auto& s1 : l1)
    {
      bool premise = false;
      for (const auto& s2 : l2)
        if (gfp_related(r, s1, s2, e12, e2) && gfp_related(r, s1, s2, e1, e2))
        {
          premise = true;
          break;
        }
      // Under ⊤ the corollary demands L1 ⊆ L3 outright.
      if (!premise && r.kappa)
        continue;
      ++res.checked;
      if (!in_l3(s1))
      {
        res.status = LawStatus::Fail;
        res.counterexample = "extensional: " + show(s1) + " missing from the quotient";
        return res;
      }
      if (quotient.accept(s1) == Verdict::Fail)
      {
        res.status = LawStatus::Fail;
        res.counterexample = "intensional: " + show(s1) + " rejected by the quotient";
        return res;
      }
    }
  }
  return res;
}

LawResult check_satisfaction(const FiniteUniverse& base, std::uint64_t seed, std::size_t rounds)
{
  FiniteUniverse u = base;
  u.allow_silent = false;
  u.exact_length = true;
  LawResult res = fresh("satisfaction", "sync(identity)", u);

  const auto e = Interface::of(u.events);
  const auto plus = union_composition();
  const auto all = enumerate_prefixes(u);
  const ExtensionalRelation ext{"sync(identity)", kappa_sync(ObsRelation::identity())};
  const auto rel = sync_relation(ObsRelation::identity());

  std::size_t holds = 0;
  std::size_t fails = 0;
  std::mt19937_64 rng(seed);
  for (std::size_t round = 0; round < rounds; ++round)
  {
    const auto l = random_subset(all, rng, 3, true);
    auto s = random_subset(all, rng, 2, false);
    if (round % 2 == 0)
      s.insert(l.begin(), l.end());

    auto shared = std::make_shared<const Behavior>(s);
    TraceProperty prop{"P", e,
                       [shared](const TesPrefix& p) {
                         const auto it = shared->lower_bound(p);
                         return it != shared->end() && is_prefix_of(p, *it) ? Verdict::Pass : Verdict::Fail;
                       },
                       false, true};

    const bool satisfies = std::includes(s.begin(), s.end(), l.begin(), l.end());
    const auto c = make_finite_component("C", e, l);
    const auto cp = componentize(prop, u);
    const auto gen_int = product(c, cp, rel, plus).generate({u.depth, 0});
    const auto gen_ext = product_extensional(l, e, cp.generate({u.depth, 0}), e, ext, plus);

    ++res.checked;
    (satisfies ? holds : fails) += 1;
    if (satisfies != (gen_int == l) || satisfies != (gen_ext == l))
    {
      res.status = LawStatus::Fail;
      res.counterexample = "round " + std::to_string(round) + ": C |= P is " + (satisfies ? "true" : "false")
                         + " but the product " + ((gen_int == l) ? "equals" : "differs from") + " C";
      return res;
    }
  }
  if (holds == 0 || fails == 0)
  {
    res.status = LawStatus::Fail;
    res.counterexample = "sampling did not exercise both directions";
  }
  return res;
}

LawResult check_refutation_soundness(const FiniteUniverse& u, const ExtensionalRelation& r)
{
  LawResult res = fresh("refutation", r.name, u);
  const auto e = Interface::of(u.events);
  const auto all = enumerate_prefixes(u);
  const auto rel = to_tes_relation(r);
  const auto observables = universe_observables(u);
  auto times = u.grid;
  times.push_back(u.grid.back() + TimeStamp(1));

  auto extensions = [&](const TesPrefix& p) {
    std::vector<TesPrefix> out;
    for (const auto& t : times)
    {
      if (!p.empty() && !(p.back().time < t))
        continue;
      for (const auto& o : observables)
      {
        auto ext = p;
        ext.push_back({o, t});
        out.push_back(std::move(ext));
      }
    }
    return out;
  };

  for (const auto& p : all)
    for (const auto& q : all)
    {
      if (!refuted(rel, p, q, e, e))
        continue;
      for (const auto& pe : extensions(p))
      {
        ++res.checked;
        if (!refuted(rel, pe, q, e, e))
        {
          res.status = LawStatus::Fail;
          res.counterexample = "p=" + show(p) + " q=" + show(q) + " revived by " + show(pe);
          return res;
        }
      }
      for (const auto& qe : extensions(q))
      {
        ++res.checked;
        if (!refuted(rel, p, qe, e, e))
        {
          res.status = LawStatus::Fail;
          res.counterexample = "p=" + show(p) + " q=" + show(q) + " revived by " + show(qe);
          return res;
        }
      }
    }
  return res;
}

LawResult check_oracle_equivalence(const FiniteUniverse& u, const ExtensionalRelation& r, std::uint64_t seed,
                                   std::size_t rounds)
{
  LawResult res = fresh("oracle-equivalence", r.name, u);
  const auto e = Interface::of(u.events);
  const auto plus = union_composition();
  const auto all = enumerate_prefixes(u);
  const auto rel = to_tes_relation(r);

  std::mt19937_64 rng(seed);
  for (std::size_t round = 0; round < rounds; ++round)
  {
    const auto l1 = random_subset(all, rng, 3, true);
    const auto l2 = random_subset(all, rng, 3, true);
    const auto composite = product(make_finite_component("L1", e, l1), make_finite_component("L2", e, l2), rel, plus);
    const auto gen = composite.generate({u.depth, 0});
    const auto ext = product_extensional(l1, e, l2, e, r, plus);
    ++res.checked;
    if (gen != ext)
    {
      res.status = LawStatus::Fail;
      res.counterexample = "round " + std::to_string(round) + ": generated " + std::to_string(gen.size())
                         + " prefixes, extensional " + std::to_string(ext.size());
      return res;
    }
    for (const auto& p : ext)
    {
      ++res.checked;
      if (composite.accept(p) == Verdict::Fail)
      {
        res.status = LawStatus::Fail;
        res.counterexample = "acceptor rejects extensional member " + show(p);
        return res;
      }
    }
  }
  return res;
}

std::vector<LawResult> lemma_suite(const FiniteUniverse& u, const std::string& law, std::uint64_t seed)
{
  const auto& names = law_names();
  if (law != "all" && std::find(names.begin(), names.end(), law) == names.end())
    throw std::invalid_argument("unknown law '" + law + "'");
  enumerate_prefixes(u); // guard check up front

  auto wanted = [&](const std::string& name) { return law == "all" || law == name; };
  const auto relations = shipped_relations(u);
  std::vector<LawResult> out;

  if (wanted("commutativity"))
    for (const auto& r : relations)
      out.push_back(check_commutativity(u, r));
  if (wanted("commutativity-mutant"))
  {
    auto caught = check_commutativity(u, asymmetric_mutant());
    caught.law = "commutativity-mutant";
    caught.status = caught.status == LawStatus::Fail ? LawStatus::Pass : LawStatus::Fail;
    if (caught.status == LawStatus::Fail)
      caught.counterexample = "the asymmetric mutant was not detected";
    out.push_back(std::move(caught));
  }
  if (wanted("associativity"))
  {
    for (const auto& r : relations)
      out.push_back(check_associativity(u, r));
    out.push_back(check_associativity(u, {"equal", kappa_equal()}));
  }
  if (wanted("idempotence"))
  {
    out.push_back(check_idempotence(u, {"equal", kappa_equal()}));
    out.push_back(check_idempotence(u, {"free", std::nullopt}));
  }
  if (wanted("division"))
    for (const auto& r : relations)
      out.push_back(check_division(u, r, seed, 8));
  if (wanted("satisfaction"))
    out.push_back(check_satisfaction(u, seed, 16));
  if (wanted("refutation"))
    for (const auto& r : relations)
      out.push_back(check_refutation_soundness(u, r));
  if (wanted("oracle-equivalence"))
    for (const auto& r : relations)
      out.push_back(check_oracle_equivalence(u, r, seed, 3));
  return out;
}

json to_json(const LawResult& r)
{
  json out{{"law", r.law},
           {"relation", r.relation},
           {"universe", r.universe},
           {"status", std::string(to_string(r.status))},
           {"checked", r.checked}};
  if (r.counterexample)
    out["counterexample"] = *r.counterexample;
  return out;
}

} // namespace tescps
