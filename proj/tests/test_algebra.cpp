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
#include <tescps/oracle.hpp>

#include <doctest.h>

using namespace tescps;

namespace {

const Event a = Event::symbol("a");
const Event b = Event::symbol("b");

Component over(std::string name, const Event& e, std::vector<TimeStamp> grid, std::size_t depth)
{
  FiniteUniverse u{{e}, std::move(grid), depth};
  auto c = make_finite_component(std::move(name), Interface::of({e}), enumerate_prefixes(u));
  c.exhaustive = true;
  return c;
}

std::size_t shared_times(const TesPrefix& p, const TesPrefix& q)
{
  std::size_t n = 0;
  for (const auto& x : p)
    for (const auto& y : q)
      n += x.time == y.time;
  return n;
}

} // namespace

TEST_SUITE("algebra")
{
  TEST_CASE("merge length law")
  {
    FiniteUniverse u{{a, b}, {1, 2, 3}, 3};
    const auto all = enumerate_prefixes(u);
    const auto plus = union_composition();
    for (const auto& p : all)
      for (const auto& q : all)
        CHECK(lift_composition(plus, p, q).size() == p.size() + q.size() - shared_times(p, q));
  }

  TEST_CASE("free product of disjoint components is every merge")
  {
    const auto ca = over("A", a, {1, 2, 3}, 2);
    const auto cb = over("B", b, {1, 2, 3}, 2);
    const auto plus = union_composition();
    const auto prod = product(ca, cb, free_relation(), plus);
    const auto gen = prod.generate({2, 0});

    Behavior expected;
    for (const auto& p : ca.generate({2, 0}))
      for (const auto& q : cb.generate({2, 0}))
        expected.insert(lift_composition(plus, p, q));
    CHECK(gen == expected);
    CHECK(gen == product_extensional(ca.generate({2, 0}), ca.interface, cb.generate({2, 0}), cb.interface,
                                     {"free", std::nullopt}, plus));
    CHECK(prod.interface.contains(a));
    CHECK(prod.interface.contains(b));
    for (const auto& p : gen)
      CHECK(prod.accept(p) != Verdict::Fail);
    CHECK(prod.accept(TesPrefix{{{Event::symbol("z")}, 1}}) == Verdict::Fail);
  }

  TEST_CASE("sync product keeps only simultaneous partners")
  {
    const auto ca = over("A", a, {1, 2}, 2);
    const auto cb = over("B", b, {1, 2}, 2);
    const auto rel = ObsRelation::finite({{{a}, {b}}}, true);
    const auto sync = sync_relation(rel);
    const auto plus = union_composition();
    const auto prod = product(ca, cb, sync, plus);
    const auto gen = prod.generate({2, 0});
    CHECK(gen == product_extensional(ca.generate({2, 0}), ca.interface, cb.generate({2, 0}), cb.interface,
                                     {"sync", kappa_sync(rel)}, plus));
    CHECK(gen.count(TesPrefix{{{a, b}, 1}}) == 1);
    CHECK(sync(TesPrefix{{{a}, 1}}, TesPrefix{{{b}, 2}}, ca.interface, cb.interface) == Verdict::Fail);
    CHECK(gen.count(TesPrefix{{{a}, 1}, {{b}, 2}}) == 0);
    CHECK(prod.accept(TesPrefix{{{a, b}, 1}}) != Verdict::Fail);
    CHECK(prod.accept(TesPrefix{{{a}, 1}, {{b}, 2}}) == Verdict::Fail);
  }

  TEST_CASE("product with the empty component is empty")
  {
    const auto ca = over("A", a, {1, 2}, 2);
    const auto none = make_empty_component("none", Interface::of({b}));
    const auto prod = product(ca, none, free_relation(), union_composition());
    CHECK(prod.generate({2, 0}).empty());
    CHECK(prod.accept(TesPrefix{{{a}, 1}}) == Verdict::Fail);
  }

  TEST_CASE("division")
  {
    const auto ca = over("A", a, {1, 2}, 2);
    const auto cb = over("B", b, {1, 2}, 2);
    const auto plus = union_composition();
    const auto whole = product(ca, cb, free_relation(), plus);
    DivisionOptions opts;
    opts.depth = 2;
    const auto quotient = divide(whole, cb, free_relation(), plus, opts);
    // L1 ⊆ L3 under ⊤.
    for (const auto& p : ca.generate({2, 0}))
      CHECK(quotient.accept(p) != Verdict::Fail);

    auto none = make_empty_component("none", Interface::of({b}));
    const auto by_empty = divide(whole, none, free_relation(), plus, opts);
    for (const auto& p : ca.generate({2, 0}))
      CHECK(by_empty.accept(p) != Verdict::Pass);
    CHECK(by_empty.accept(TesPrefix{{{a}, 1}}) == Verdict::Fail);

    // Non-exhaustive divisor: an unsuccessful search is Pending, flagged as budget-exhausted.
    none.exhaustive = false;
    const auto out = division_witness(whole, none, free_relation(), plus, opts, TesPrefix{{{a}, 1}});
    CHECK(out.verdict == Verdict::Pending);
    CHECK(out.budget_exhausted);
  }
}
