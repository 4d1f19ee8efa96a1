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

#include <tescps/event.hpp>
#include <tescps/time_stamp.hpp>

#include <compare>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace tescps {

/// Three-valued finite-prefix verdict. Fail is irrevocable.
enum class Verdict { Pass, Fail, Pending };

std::string_view to_string(Verdict v);

struct Observation
{
  Observable observable;
  TimeStamp time;

  friend bool operator==(const Observation&, const Observation&) = default;
  friend std::strong_ordering operator<=>(const Observation& a, const Observation& b)
  {
    if (auto c = a.time <=> b.time; c != 0)
      return c;
    return a.observable <=> b.observable;
  }
};

/// Finite prefix of a timed-event stream.
class TesPrefix
{
public:
  TesPrefix() = default;
  TesPrefix(std::initializer_list<Observation> items) : _items(items) {}
  explicit TesPrefix(std::vector<Observation> items) : _items(std::move(items)) {}

  std::size_t size() const { return _items.size(); }
  bool empty() const { return _items.empty(); }

  const Observation& operator[](std::size_t i) const { return _items[i]; }
  const Observation& back() const { return _items.back(); }

  auto begin() const { return _items.begin(); }
  auto end() const { return _items.end(); }

  std::span<const Observation> items() const { return _items; }

  void push_back(Observation o) { _items.push_back(std::move(o)); }
  void pop_back() { _items.pop_back(); }

  /// The first n observations.
  TesPrefix take(std::size_t n) const;
  /// Derivative: drops the head.
  TesPrefix tail() const;

  /// Same observables with times replaced.
  TesPrefix retimed(std::span<const TimeStamp> times) const;

  /// Every event occurring anywhere in the prefix.
  EventSet events() const;

  friend bool operator==(const TesPrefix&, const TesPrefix&) = default;
  friend std::strong_ordering operator<=>(const TesPrefix& a, const TesPrefix& b)
  {
    return std::lexicographical_compare_three_way(
      a._items.begin(), a._items.end(), b._items.begin(), b._items.end());
  }

private:
  std::vector<Observation> _items;
};

/// Pass iff time stamps strictly increase.
Verdict validate_prefix(std::span<const Observation> items);
inline Verdict validate_prefix(const TesPrefix& p) { return validate_prefix(p.items()); }

bool is_prefix_of(const TesPrefix& shorter, const TesPrefix& longer);

std::string to_string(const TesPrefix& p);

} // namespace tescps
