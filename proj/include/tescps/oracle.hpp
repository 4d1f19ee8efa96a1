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

#include <tescps/property.hpp>
#include <tescps/universe.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tescps {

/// Relation for the extensional semantics: a composability relation on
/// observations, or ⊤ when `kappa` is empty.
struct ExtensionalRelation
{
  std::string name;
  std::optional<ObsKappa> kappa;
};

/// Membership of (p, q) in the greatest fixed point of Φκ restricted to the
/// finite pair space: starts from every index pair and deletes pairs the step
/// functional cannot justify until nothing changes. False means refuted.
bool gfp_related(const ExtensionalRelation& r, const TesPrefix& p, const TesPrefix& q,
                 const Interface& e1, const Interface& e2);

/// Merge by grouping every observation by its time stamp.
TesPrefix merge_extensional(const ObsComposition& plus, const TesPrefix& p, const TesPrefix& q);

/// { p1 ⊕ p2 | p1 ∈ L1, p2 ∈ L2, (p1, p2) not refuted }.
Behavior product_extensional(const Behavior& l1, const Interface& e1, const Behavior& l2, const Interface& e2,
                             const ExtensionalRelation& r, const ObsComposition& plus);

enum class LawStatus { Pass, Fail, SideConditionViolated };

std::string_view to_string(LawStatus s);

struct LawResult
{
  std::string law;
  std::string relation;
  std::string universe;
  LawStatus status = LawStatus::Pass;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};

/// Named universes: "tiny" ({a,b}, grid {1,2}, depth 2) and
/// "small" ({a,b}, grid {1,2,3}, depth 3).
FiniteUniverse named_universe(const std::string& name);

const std::vector<std::string>& law_names();

/// Runs one law (or "all") exhaustively over the universe.
/// Throws std::invalid_argument for unknown law names.
std::vector<LawResult> lemma_suite(const FiniteUniverse& u, const std::string& law = "all", std::uint64_t seed = 1);

// Individual laws, exposed for tests.
LawResult check_commutativity(const FiniteUniverse& u, const ExtensionalRelation& r);
LawResult check_associativity(const FiniteUniverse& u, const ExtensionalRelation& r);
LawResult check_idempotence(const FiniteUniverse& u, const ExtensionalRelation& r);
LawResult check_division(const FiniteUniverse& u, const ExtensionalRelation& r, std::uint64_t seed, std::size_t rounds);
LawResult check_satisfaction(const FiniteUniverse& u, std::uint64_t seed, std::size_t rounds);
LawResult check_refutation_soundness(const FiniteUniverse& u, const ExtensionalRelation& r);
LawResult check_oracle_equivalence(const FiniteUniverse& u, const ExtensionalRelation& r, std::uint64_t seed,
                                   std::size_t rounds);

/// ⊤, ⋈⊓, ∦⊓ and ⋈⊓ ∩ ∦⊓ over the universe's default ⊓ (symmetric).
std::vector<ExtensionalRelation> shipped_relations(const FiniteUniverse& u);
/// The default symmetric ⊓: {({e0},{e1})}, or {({e0},{e0})} for one event.
ObsRelation default_obs_relation(const FiniteUniverse& u);
/// An asymmetric κ used to check that the commutativity harness catches defects.
ExtensionalRelation asymmetric_mutant();

/// The intensional prefix relation matching an extensional one.
TesRelation to_tes_relation(const ExtensionalRelation& r);

nlohmann::json to_json(const LawResult& r);

} // namespace tescps
