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

#include <tescps/component.hpp>

#include <functional>
#include <set>
#include <string>
#include <utility>

namespace tescps {

/// A relation on observables (the ⊓ of synchronous / exclusive products).
///
/// Scenario relations are parametrised by physical values and cannot be
/// listed, so a relation is presented by three queries: pair membership and
/// the two "has some partner inside this interface" tests that the
/// synchronous composability relation needs. When `symmetric` is set every
/// query also consults the swapped pair.
class ObsRelation
{
public:
  using PairTest = std::function<bool(const Observable&, const Observable&)>;
  using PartnerTest = std::function<bool(const Observable&, const Interface&)>;

  struct Presentation
  {
    PairTest related;
    /// ∃ B ⊆ scope. related(A, B)
    PartnerTest has_right_partner;
    /// ∃ A ⊆ scope. related(A, B)
    PartnerTest has_left_partner;
  };

  using Pairs = std::set<std::pair<Observable, Observable>>;

  ObsRelation(std::string name, Presentation base, bool symmetric);

  static ObsRelation finite(Pairs pairs, bool symmetric = false, std::string name = "finite");
  /// (O, O) for every nonempty O.
  static ObsRelation identity();
  static ObsRelation empty();

  bool related(const Observable& a, const Observable& b) const;
  bool has_right_partner(const Observable& a, const Interface& right_scope) const;
  bool has_left_partner(const Observable& b, const Interface& left_scope) const;

  bool symmetric() const { return _symmetric; }
  const std::string& name() const { return _name; }

  friend ObsRelation unite(const ObsRelation& a, const ObsRelation& b);

private:
  std::string _name;
  Presentation _base;
  bool _symmetric;
};

/// Composability relation on observations, κ(E1, E2).
struct ObsKappa
{
  using Check = std::function<bool(
    const Observation&, const Observation&, const Interface&, const Interface&)>;

  std::string name;
  Check check;
  bool symmetric = false;

  bool operator()(const Observation& a, const Observation& b, const Interface& e1, const Interface& e2) const
  {
    return check(a, b, e1, e2);
  }
};

/// Composition function on observables.
struct ObsComposition
{
  std::string name;
  std::function<Observable(const Observable&, const Observable&)> combine;
  bool commutative = false;
  bool idempotent = false;
};

ObsComposition union_composition();

/// Relates every pair of observations.
ObsKappa kappa_true();
/// Relates exactly equal observations (same observable, same time).
ObsKappa kappa_equal();
ObsKappa kappa_sync(ObsRelation rel);
ObsKappa kappa_excl(ObsRelation rel);
ObsKappa kappa_intersect(ObsKappa k1, ObsKappa k2);

/// A composability relation on prefixes. Only refutation is decidable on
/// finite data: the check answers Fail or Pending, and Fail is closed under
/// extension of either operand.
struct TesRelation
{
  using Check = std::function<Verdict(
    const TesPrefix&, const TesPrefix&, const Interface&, const Interface&)>;

  std::string name;
  Check check;
  bool symmetric = false;

  Verdict operator()(const TesPrefix& a, const TesPrefix& b, const Interface& e1, const Interface& e2) const
  {
    return check(a, b, e1, e2);
  }
};

/// ⊤: no constraint.
TesRelation free_relation();

/// [κ]: walks the head pairs the way the step functional does, advancing the
/// earlier side (both on a tie). Fail on the first violated pair, Pending once
/// either operand is exhausted.
TesRelation lift_relation(ObsKappa k);

/// Pointwise intersection of two prefix relations.
TesRelation intersect(TesRelation a, TesRelation b);

/// ⋈⊓, ∦⊓ and their intersection.
TesRelation sync_relation(ObsRelation rel);
TesRelation excl_relation(ObsRelation rel);
TesRelation sync_excl_relation(ObsRelation rel);

/// [+]: timestamp-ordered merge composing observations that share a time.
TesPrefix lift_composition(const ObsComposition& plus, const TesPrefix& a, const TesPrefix& b);

} // namespace tescps
