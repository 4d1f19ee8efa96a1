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

#include <tescps/event.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tescps {

namespace {

bool valid_agent(std::string_view a)
{
  if (a.empty())
    return false;
  return std::all_of(a.begin(), a.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  });
}

double normalized(double v)
{
  if (!std::isfinite(v))
    throw std::invalid_argument("event payload must be finite");
  return v == 0.0 ? 0.0 : v;
}

Payload normalized(Payload p)
{
  if (auto* d = std::get_if<double>(&p))
    *d = normalized(*d);
  else if (auto* pos = std::get_if<Position>(&p))
    *pos = Position{normalized(pos->x), normalized(pos->y)};
  else if (auto* h = std::get_if<Heading>(&p))
    h->magnitude = normalized(h->magnitude);
  return p;
}

std::string_view head_of(EventKind kind)
{
  switch (kind)
  {
    case EventKind::ReadLoc: return "read(loc,";
    case EventKind::ReadBat: return "read(bat,";
    case EventKind::Read: return "read(";
    case EventKind::Move: return "move(";
    case EventKind::ChargeSwitch:
    case EventKind::ChargeRate: return "charge(";
    case EventKind::Discharge: return "discharge(";
    case EventKind::Loc: return "loc(";
    case EventKind::Sample: return "sample(";
    case EventKind::Symbol: return "";
  }
  return "";
}

std::string encode_payload(const Payload& p)
{
  struct Visitor
  {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const Position& v) const
    {
      return "(" + format_number(v.x) + "," + format_number(v.y) + ")";
    }
    std::string operator()(const Heading& v) const
    {
      return "(" + std::string(to_string(v.direction)) + "," + format_number(v.magnitude) + ")";
    }
    std::string operator()(Switch s) const { return s == Switch::On ? "ON" : "OFF"; }
  };
  return std::visit(Visitor{}, p);
}

[[noreturn]] void malformed(std::string_view text, std::string_view why)
{
  throw std::invalid_argument(
    "malformed event '" + std::string(text) + "': " + std::string(why));
}

double parse_number(std::string_view text, std::string_view whole)
{
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    malformed(whole, "bad number '" + std::string(text) + "'");
  return v;
}

std::pair<std::string_view, std::string_view> split_pair(std::string_view text, std::string_view whole)
{
  if (text.size() < 5 || text.front() != '(' || text.back() != ')')
    malformed(whole, "expected a parenthesised pair");
  const auto inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
    malformed(whole, "expected exactly two components");
  return {inner.substr(0, comma), inner.substr(comma + 1)};
}

} // namespace

std::size_t payload_index_for(EventKind kind)
{
  switch (kind)
  {
    case EventKind::ReadLoc:
    case EventKind::Loc: return 2;
    case EventKind::Move: return 3;
    case EventKind::ChargeSwitch: return 4;
    case EventKind::Symbol: return 0;
    default: return 1;
  }
}

Event::Event(EventKind kind, std::string agent, Payload payload)
: _kind(kind), _agent(std::move(agent)), _payload(normalized(std::move(payload)))
{
  if (!valid_agent(_agent))
    throw std::invalid_argument("invalid agent identifier '" + _agent + "'");
  if (_payload.index() != payload_index_for(kind))
    throw std::invalid_argument("payload type does not match kind for agent '" + _agent + "'");
  _key = canonical_encode(*this);
}

Event Event::read_loc(std::string r, Position p) { return {EventKind::ReadLoc, std::move(r), p}; }
Event Event::read_bat(std::string r, double b) { return {EventKind::ReadBat, std::move(r), b}; }
Event Event::read(std::string b, double l) { return {EventKind::Read, std::move(b), l}; }
Event Event::move(std::string a, Direction d, double m) { return {EventKind::Move, std::move(a), Heading{d, m}}; }
Event Event::charge_switch(std::string r, Switch s) { return {EventKind::ChargeSwitch, std::move(r), s}; }
Event Event::charge_rate(std::string b, double rate) { return {EventKind::ChargeRate, std::move(b), rate}; }
Event Event::discharge(std::string b, double rate) { return {EventKind::Discharge, std::move(b), rate}; }
Event Event::loc(std::string i, Position p) { return {EventKind::Loc, std::move(i), p}; }
Event Event::sample(std::string n, double v) { return {EventKind::Sample, std::move(n), v}; }
Event Event::symbol(std::string n) { return {EventKind::Symbol, std::move(n), std::monostate{}}; }

double Event::scalar() const
{
  if (const auto* v = std::get_if<double>(&_payload))
    return *v;
  throw std::logic_error("event " + _key + " has no scalar payload");
}

const Position& Event::position() const
{
  if (const auto* v = std::get_if<Position>(&_payload))
    return *v;
  throw std::logic_error("event " + _key + " has no position payload");
}

const Heading& Event::heading() const
{
  if (const auto* v = std::get_if<Heading>(&_payload))
    return *v;
  throw std::logic_error("event " + _key + " has no heading payload");
}

Switch Event::switch_state() const
{
  if (const auto* v = std::get_if<Switch>(&_payload))
    return *v;
  throw std::logic_error("event " + _key + " has no switch payload");
}

std::string canonical_encode(const Event& e)
{
  if (e.kind() == EventKind::Symbol)
    return e.agent();
  return std::string(head_of(e.kind())) + e.agent() + ");" + encode_payload(e.payload());
}

Event canonical_decode(std::string_view text)
{
  const auto open = text.find('(');
  if (open == std::string_view::npos)
  {
    if (!valid_agent(text))
      malformed(text, "not a symbol");
    return Event::symbol(std::string(text));
  }

  const auto semi = text.find(");");
  if (semi == std::string_view::npos || semi < open)
    malformed(text, "missing ');' separator");

  const auto name = text.substr(0, open);
  auto agent = text.substr(open + 1, semi - open - 1);
  const auto payload = text.substr(semi + 2);

  EventKind kind;
  if (name == "read")
  {
    if (agent.starts_with("loc,"))
    {
      kind = EventKind::ReadLoc;
      agent.remove_prefix(4);
    }
    else if (agent.starts_with("bat,"))
    {
      kind = EventKind::ReadBat;
      agent.remove_prefix(4);
    }
    else
      kind = EventKind::Read;
  }
  else if (name == "move")
    kind = EventKind::Move;
  else if (name == "charge")
    kind = (payload == "ON" || payload == "OFF") ? EventKind::ChargeSwitch : EventKind::ChargeRate;
  else if (name == "discharge")
    kind = EventKind::Discharge;
  else if (name == "loc")
    kind = EventKind::Loc;
  else if (name == "sample")
    kind = EventKind::Sample;
  else
    malformed(text, "unknown event kind '" + std::string(name) + "'");

  if (!valid_agent(agent))
    malformed(text, "invalid agent");

  Payload value;
  switch (payload_index_for(kind))
  {
    case 1:
      value = parse_number(payload, text);
      break;
    case 2:
    {
      const auto [x, y] = split_pair(payload, text);
      value = Position{parse_number(x, text), parse_number(y, text)};
      break;
    }
    case 3:
    {
      const auto [d, m] = split_pair(payload, text);
      value = Heading{direction_from(d), parse_number(m, text)};
      break;
    }
    case 4:
      value = payload == "ON" ? Switch::On : Switch::Off;
      break;
    default:
      break;
  }

  Event e(kind, std::string(agent), value);
  if (e.encoding() != text)
    malformed(text, "not in canonical form (expected '" + e.encoding() + "')");
  return e;
}

std::string_view to_string(Direction d)
{
  switch (d)
  {
    case Direction::N: return "N";
    case Direction::E: return "E";
    case Direction::S: return "S";
    case Direction::W: return "W";
  }
  return "?";
}

Direction direction_from(std::string_view text)
{
  if (text == "N") return Direction::N;
  if (text == "E") return Direction::E;
  if (text == "S") return Direction::S;
  if (text == "W") return Direction::W;
  throw std::invalid_argument("unknown direction '" + std::string(text) + "'");
}

std::string format_number(double v)
{
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string to_string(const Observable& o)
{
  std::string out = "{";
  bool first = true;
  for (const auto& e : o)
  {
    if (!first)
      out += ", ";
    out += e.encoding();
    first = false;
  }
  return out + "}";
}

bool is_subset(const Observable& sub, const Observable& super)
{
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Observable unite(const Observable& a, const Observable& b)
{
  Observable out = a;
  out.insert(b.begin(), b.end());
  return out;
}

} // namespace tescps
