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

#include <doctest.h>

using namespace tescps;

namespace {

const Event a = Event::symbol("a");
const Event c = Event::symbol("c");

} // namespace

TEST_SUITE("oracle")
{
  TEST_CASE("named universes")
  {
    const auto tiny = named_universe("tiny");
    CHECK(tiny.events.size() == 2);
    CHECK(tiny.grid.size() == 2);
    CHECK(tiny.depth == 2);
    CHECK(named_universe("small").depth == 3);
    CHECK_THROWS_AS(named_universe("huge"), std::invalid_argument);
  }

  TEST_CASE("product_extensional")
  {
    const auto plus = union_composition();
    const Interface ea = Interface::of({a});
    const Interface ec = Interface::of({c});
    const Behavior l1{TesPrefix{}, TesPrefix{{{a}, 1}}, TesPrefix{{{a}, 2}}};
    const ExtensionalRelation top{"free", std::nullopt};
    CHECK(product_extensional(l1, ea, {TesPrefix{}}, ec, top, plus) == l1);

    const Behavior la{TesPrefix{{{a}, 1}}, TesPrefix{{{a}, 2}}};
    const Behavior lc{TesPrefix{{{c}, 1}}, TesPrefix{{{c}, 2}}};
    const ExtensionalRelation sync{"sync", kappa_sync(ObsRelation::finite({{{a}, {c}}}))};
    const Behavior expected{TesPrefix{{{a, c}, 1}}, TesPrefix{{{a, c}, 2}}};
    CHECK(product_extensional(la, ea, lc, ec, sync, plus) == expected);
  }

  TEST_CASE("gfp agrees with the lifted walk on the small universe")
  {
    const auto u = named_universe("small");
    const auto all = enumerate_prefixes(u);
    const Interface e = Interface::of(u.events);
    for (const auto& r : shipped_relations(u))
    {
      const auto lifted = to_tes_relation(r);
      std::size_t refuted = 0;
      for (const auto& p : all)
        for (const auto& q : all)
        {
          const bool gfp = gfp_related(r, p, q, e, e);
          CHECK((lifted(p, q, e, e) != Verdict::Fail) == gfp);
          refuted += !gfp;
        }
      if (r.kappa)
        CHECK(refuted > 0);
      else
        CHECK(refuted == 0);
    }
  }

  TEST_CASE("merge_extensional agrees with the ordered merge")
  {
    const auto u = named_universe("small");
    const auto all = enumerate_prefixes(u);
    const auto plus = union_composition();
    for (const auto& p : all)
      for (const auto& q : all)
        CHECK(merge_extensional(plus, p, q) == lift_composition(plus, p, q));
  }

  TEST_CASE("lemma suite on tiny")
  {
    const auto results = lemma_suite(named_universe("tiny"));
    CHECK(results.size() >= law_names().size());
    for (const auto& r : results)
      CHECK_MESSAGE(r.status != LawStatus::Fail, r.law << "/" << r.relation << ": " << r.counterexample.value_or(""));
  }

  TEST_CASE("the commutativity harness catches the asymmetric mutant")
  {
    const auto r = check_commutativity(named_universe("tiny"), asymmetric_mutant());
    CHECK(r.status == LawStatus::Fail);
    CHECK(r.counterexample);
  }

  TEST_CASE("associativity side condition is reported distinctly")
  {
    const auto u = named_universe("tiny");
    for (const auto& r : shipped_relations(u))
    {
      const auto res = check_associativity(u, r);
      CHECK(res.status != LawStatus::Fail);
      if (r.name == "sync")
        CHECK(res.status == LawStatus::SideConditionViolated);
    }
    CHECK(check_associativity(u, {"equal", kappa_equal()}).status == LawStatus::Pass);
    CHECK(check_idempotence(u, {"equal", kappa_equal()}).status == LawStatus::Pass);
  }

  TEST_CASE("lemma report json")
  {
    const auto r = check_commutativity(named_universe("tiny"), asymmetric_mutant());
    const auto j = to_json(r);
    CHECK(j["law"] == "commutativity");
    CHECK(j.contains("counterexample"));
    CHECK_THROWS_AS(lemma_suite(named_universe("tiny"), "nope"), std::invalid_argument);
  }
}
