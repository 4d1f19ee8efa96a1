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

#include <tescps/universe.hpp>
#include <tescps/relation.hpp>

#include <optional>

namespace tescps {

/// c1 ×(r, [plus]) c2.
///
/// The generator composes every pair of generated prefixes the relation does
/// not refute. The acceptor searches for a decomposition of the prefix into a
/// left and a right prefix, splitting each observation over the two
/// interfaces or attributing it to one side, pruning as soon as either
/// operand or the relation fails.
Component product(const Component& c1, const Component& c2, TesRelation r, ObsComposition plus);

/// Search bounds for division witnesses.
struct DivisionOptions
{
  std::size_t depth = 3;
  std::uint64_t seeds = 1;
  /// Candidate quotient prefixes for the generator. Without a universe the
  /// dividend's own generated prefixes are filtered.
  std::optional<FiniteUniverse> candidates;
};

struct DivisionOutcome
{
  Verdict verdict = Verdict::Pending;
  /// No witness was found but the divisor's search space was not exhausted.
  bool budget_exhausted = false;
  std::optional<TesPrefix> witness;
};

/// The witness search behind the division acceptor.
DivisionOutcome division_witness(const Component& dividend, const Component& divisor,
                                 const TesRelation& r, const ObsComposition& plus,
                                 const DivisionOptions& opts, const TesPrefix& p);

/// c1 /(r, [plus]) c2. A prefix passes when some divisor prefix composes with
/// it into the dividend. Fail is only reported when the divisor's generator is
/// exhaustive; otherwise an unsuccessful search is Pending.
Component divide(const Component& c1, const Component& c2, TesRelation r, ObsComposition plus,
                 DivisionOptions opts = {});

} // namespace tescps
