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

#include <tescps/algebra.hpp>

#include <json.hpp>

#include <optional>
#include <variant>

namespace tescps {

/// A trace property P ⊆ TES(E) judged on finite prefixes. Pass means every
/// completion is in P when `pass_closed`; Fail means no completion is when
/// `fail_closed`.
struct TraceProperty
{
  std::string name;
  Interface interface;
  std::function<Verdict(const TesPrefix&)> verdict;
  bool pass_closed = false;
  bool fail_closed = true;
};

struct Insertion
{
  std::size_t position = 0;
  Observation observation;
};

struct Retiming
{
  std::vector<TimeStamp> times;
};

using Mutation = std::variant<Insertion, Retiming>;

TesPrefix apply_mutation(const TesPrefix& p, const Mutation& m);

/// A replayable counterexample.
struct Witness
{
  TesPrefix trace;
  std::uint64_t seed = 0;
  /// First observation at which a trace property turns Fail.
  std::optional<std::size_t> index;
  std::optional<Mutation> mutation;
};

struct CheckResult
{
  Verdict verdict = Verdict::Pending;
  std::optional<Witness> witness;
  std::size_t samples = 0;
};

/// Replays a witness: the property (or, for mutations, the acceptor on the
/// mutated trace) must give Fail again.
bool replay(const TraceProperty& p, const Witness& w);
bool replay(const Component& c, const Witness& w);

/// {"verdict": ..., "witness": {"trace": [...], "mutation": ..., ...}}
nlohmann::json report_json(const CheckResult& r);

/// C ⊨ P on generated prefixes. Fail carries the lowest-seed, first-generated
/// violating prefix. Throws std::invalid_argument when a generated event lies
/// outside the property's interface.
CheckResult satisfies_trace(const Component& c, const TraceProperty& p, std::size_t depth, std::uint64_t seeds);

/// Verdict of a property on one recorded prefix, with the Fail index.
CheckResult check_trace(const TraceProperty& p, const TesPrefix& trace);

/// The component (E_P, P). Generation needs a finite universe; without one the
/// generator throws std::invalid_argument.
Component componentize(const TraceProperty& p, std::optional<FiniteUniverse> universe = std::nullopt);

struct Glue
{
  TesRelation relation;
  ObsComposition plus;
};

/// Checks ((C1 ×g0 C2) ... ×g(n-2) Cn) ×g(n-1) Orch ⊨ Coord. `glue` holds one
/// entry per component; with no components Orch is checked alone.
CheckResult check_coordination(const std::vector<Component>& components, const std::vector<Glue>& glue,
                               const TraceProperty& coord, const Component& orch,
                               std::size_t depth, std::uint64_t seeds);

/// Candidate observables to insert before position `position` at time `t` of
/// the prefix `before` (the first `position` observations).
using InsertionSet = std::function<std::vector<Observable>(const TesPrefix& before, const TimeStamp& t)>;

InsertionSet fixed_insertions(std::vector<Observable> xs);

/// Sampled refutation of closure under insertion. Never returns Pass.
CheckResult hyper_insert_check(const Component& c, const InsertionSet& xs, std::size_t depth, std::uint64_t seeds);

/// Sampled refutation of obliviousness to time. Never returns Pass.
CheckResult hyper_shift_check(const Component& c, std::size_t depth, std::size_t time_samples,
                              std::uint64_t seeds = 1);

/// Liveness of termination: Pending on every finite prefix.
TraceProperty p_finite(Interface e);
/// All TESs over the interface.
TraceProperty p_top(Interface e);
/// No read(B) event reports 0.
TraceProperty p_energy(std::vector<std::string> batteries);
/// loc(a) and loc(b) never share a position inside one observation.
TraceProperty p_no_overlap(std::string object_a, std::string object_b);
/// Some observation contains loc(a)=target_a and loc(b)=target_b.
TraceProperty p_swap(std::string object_a, Position target_a, std::string object_b, Position target_b);

} // namespace tescps
