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
#include <tescps/property.hpp>

#include <doctest.h>

using namespace tescps;

namespace {

const Event a = Event::symbol("a");
const Event b = Event::symbol("b");

FiniteUniverse nonsilent()
{
  FiniteUniverse u{{a, b}, {1, 2}, 2};
  u.allow_silent = false;
  return u;
}

/// No observation holds both a and b.
TraceProperty apart()
{
  TraceProperty p;
  p.name = "apart";
  p.interface = Interface::of({a, b});
  p.verdict = [](const TesPrefix& s) {
    for (const auto& o : s)
      if (o.observable.count(a) && o.observable.count(b))
        return Verdict::Fail;
    return Verdict::Pending;
  };
  return p;
}

Component everything_over(const FiniteUniverse& u)
{
  return make_finite_component("C", Interface::of(u.events), enumerate_prefixes(u));
}

} // namespace

TEST_SUITE("property")
{
  TEST_CASE("P_finite is pending at every depth")
  {
    const auto c = make_alternating_component();
    for (std::size_t depth = 0; depth < 6; ++depth)
      CHECK(satisfies_trace(c, p_finite(Interface::everything()), depth, 3).verdict == Verdict::Pending);
  }

  TEST_CASE("P_no-overlap")
  {
    const auto p = p_no_overlap("I1", "I2");
    const TesPrefix clash{{{Event::loc("I1", {0, 0}), Event::loc("I2", {1, 0})}, 1},
                          {{Event::loc("I1", {3, 3}), Event::loc("I2", {3, 3})}, 2}};
    const auto r = check_trace(p, clash);
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(r.witness);
    CHECK(r.witness->index == 1u);
    CHECK(replay(p, *r.witness));
    CHECK(check_trace(p, clash.take(1)).verdict != Verdict::Fail);

    const TesPrefix apart_locs{{{Event::loc("I1", {0, 0}), Event::loc("I2", {5, 0})}, 1}};
    const auto cp = componentize(p);
    CHECK(cp.accept(apart_locs) != Verdict::Fail);
    CHECK(cp.accept(clash) == Verdict::Fail);
  }

  TEST_CASE("P_energy and P_swap")
  {
    const auto energy = p_energy({"B"});
    CHECK(check_trace(energy, TesPrefix{{{Event::read("B", 10)}, 1}}).verdict != Verdict::Fail);
    CHECK(check_trace(energy, TesPrefix{{{Event::read("B", 0)}, 1}}).verdict == Verdict::Fail);

    const auto swap = p_swap("I1", {5, 0}, "I2", {0, 0});
    CHECK(check_trace(swap, TesPrefix{{{Event::loc("I1", {5, 0})}, 1}}).verdict == Verdict::Pending);
    CHECK(check_trace(swap, TesPrefix{{{Event::loc("I1", {5, 0}), Event::loc("I2", {0, 0})}, 1}}).verdict ==
          Verdict::Pass);
  }

  TEST_CASE("componentize")
  {
    const auto u = FiniteUniverse{{a, b}, {1, 2}, 2};
    const auto top = componentize(p_top(Interface::of({a, b})), u);
    const auto all = enumerate_prefixes(u);
    for (const auto& s : all)
      CHECK(top.accept(s) != Verdict::Fail);
    CHECK(top.generate({2, 0}) == all);
    CHECK_THROWS_AS(componentize(p_top(Interface::of({a, b}))).generate({2, 0}), std::invalid_argument);
  }

  TEST_CASE("satisfies_trace interface mismatch")
  {
    TraceProperty narrow = apart();
    narrow.interface = Interface::of({a});
    const auto c = everything_over(nonsilent());
    CHECK_THROWS_AS(satisfies_trace(c, narrow, 2, 1), std::invalid_argument);
  }

  TEST_CASE("satisfies_trace reports Pass only for pass-closed properties")
  {
    TraceProperty early = apart();
    early.verdict = [](const TesPrefix&) { return Verdict::Pass; };
    const auto c = everything_over(nonsilent());
    CHECK(satisfies_trace(c, early, 2, 1).verdict == Verdict::Pending);
    early.pass_closed = true;
    CHECK(satisfies_trace(c, early, 2, 1).verdict == Verdict::Pass);
  }

  TEST_CASE("check_coordination")
  {
    // Complete runs only: an exhausted operand never refutes a pair.
    auto u = nonsilent();
    u.exact_length = true;
    const auto c = everything_over(u);
    const Glue glue{sync_relation(ObsRelation::identity()), union_composition()};
    const auto coord = apart();

    const auto orchestrated = check_coordination({c}, {glue}, coord, componentize(coord, u), 2, 1);
    CHECK(orchestrated.verdict != Verdict::Fail);

    const auto loose = check_coordination({c}, {glue}, coord, componentize(p_top(coord.interface), u), 2, 1);
    CHECK(loose.verdict == Verdict::Fail);
    REQUIRE(loose.witness);
    CHECK(replay(coord, *loose.witness));

    CHECK(check_coordination({}, {}, coord, componentize(coord, u), 2, 1).verdict != Verdict::Fail);
    CHECK(check_coordination({}, {}, coord, c, 2, 1).verdict == Verdict::Fail);
  }

  TEST_CASE("hyper_insert_check")
  {
    FiniteUniverse u{{a}, {1, 2, 3}, 3};
    const auto top = componentize(p_top(Interface::of({a})), u);
    CHECK(hyper_insert_check(top, fixed_insertions({Observable{}}), 2, 1).verdict != Verdict::Fail);

    // The alternating component rejects a repeated symbol.
    const auto alt = make_alternating_component();
    const auto r = hyper_insert_check(alt, fixed_insertions({Observable{Event::symbol("0")}}), 3, 1);
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(r.witness);
    REQUIRE(r.witness->mutation);
    CHECK(std::holds_alternative<Insertion>(*r.witness->mutation));
    CHECK(replay(alt, *r.witness));
  }

  TEST_CASE("hyper_shift_check")
  {
    const auto alt = make_alternating_component();
    CHECK(hyper_shift_check(alt, 6, 50, 3).verdict == Verdict::Pending);

    // Every sample f(d0, t) = t depends on time.
    const auto clock = make_function_component("clk", [](double d0, const TimeStamp& t) { return d0 + t.to_double(); }, {0});
    const auto r = hyper_shift_check(clock, 3, 5, 1);
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(r.witness);
    CHECK(replay(clock, *r.witness));
  }

  TEST_CASE("report json")
  {
    const auto r = check_trace(p_energy({"B"}), TesPrefix{{{Event::read("B", 0)}, 1}});
    const auto j = report_json(r);
    CHECK(j["verdict"] == "fail");
    CHECK(j["witness"]["trace"].size() == 1);
  }
}
