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

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace tescps {

enum class EventKind
{
  ReadLoc,      ///< read(loc,R);(x,y)
  ReadBat,      ///< read(bat,R);b
  Read,         ///< read(B);l
  Move,         ///< move(X);(d,m)
  ChargeSwitch, ///< charge(R);ON|OFF
  ChargeRate,   ///< charge(B);eta
  Discharge,    ///< discharge(B);eta
  Loc,          ///< loc(I);(x,y)
  Sample,       ///< sample(f);v
  Symbol        ///< bare name
};

enum class Direction { N, E, S, W };
enum class Switch { On, Off };

struct Position
{
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct Heading
{
  Direction direction = Direction::N;
  double magnitude = 0.0;
  friend bool operator==(const Heading&, const Heading&) = default;
};

using Payload = std::variant<std::monostate, double, Position, Heading, Switch>;

/// An uninterpreted observable atom. Identity is the canonical encoding:
/// two events are equal iff they encode to the same text.
class Event
{
public:
  Event(EventKind kind, std::string agent, Payload payload);

  static Event read_loc(std::string robot, Position p);
  static Event read_bat(std::string robot, double energy);
  static Event read(std::string battery, double energy);
  static Event move(std::string agent, Direction d, double magnitude);
  static Event charge_switch(std::string robot, Switch s);
  static Event charge_rate(std::string battery, double rate);
  static Event discharge(std::string battery, double rate);
  static Event loc(std::string object, Position p);
  static Event sample(std::string name, double value);
  static Event symbol(std::string name);

  EventKind kind() const { return _kind; }
  const std::string& agent() const { return _agent; }
  const Payload& payload() const { return _payload; }

  double scalar() const;
  const Position& position() const;
  const Heading& heading() const;
  Switch switch_state() const;

  const std::string& encoding() const { return _key; }

  friend bool operator==(const Event& a, const Event& b) { return a._key == b._key; }
  friend std::strong_ordering operator<=>(const Event& a, const Event& b)
  {
    return a._key <=> b._key;
  }

private:
  EventKind _kind;
  std::string _agent;
  Payload _payload;
  std::string _key;
};

/// Injective textual form, e.g. "move(R1);(N,20)".
std::string canonical_encode(const Event& e);

/// Inverse of canonical_encode; throws std::invalid_argument on malformed text.
Event canonical_decode(std::string_view text);

/// The payload alternative a kind carries (index into Payload).
std::size_t payload_index_for(EventKind kind);

std::string_view to_string(Direction d);
Direction direction_from(std::string_view text);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double v);

using Observable = std::set<Event>;
using EventSet = std::set<Event>;

std::string to_string(const Observable& o);

bool is_subset(const Observable& sub, const Observable& super);
Observable unite(const Observable& a, const Observable& b);

} // namespace tescps
