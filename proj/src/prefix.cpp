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

#include <tescps/prefix.hpp>

#include <algorithm>
#include <stdexcept>

namespace tescps {

std::string_view to_string(Verdict v)
{
  switch (v)
  {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Pending: return "pending";
  }
  return "?";
}

TesPrefix TesPrefix::take(std::size_t n) const
{
  n = std::min(n, _items.size());
  return TesPrefix(std::vector<Observation>(_items.begin(), _items.begin() + static_cast<std::ptrdiff_t>(n)));
}

TesPrefix TesPrefix::tail() const
{
  if (_items.empty())
    return {};
  return TesPrefix(std::vector<Observation>(_items.begin() + 1, _items.end()));
}

TesPrefix TesPrefix::retimed(std::span<const TimeStamp> times) const
{
  if (times.size() != _items.size())
    throw std::invalid_argument("retiming needs one time stamp per observation");
  std::vector<Observation> out;
  out.reserve(_items.size());
  for (std::size_t i = 0; i < _items.size(); ++i)
    out.push_back({_items[i].observable, times[i]});
  return TesPrefix(std::move(out));
}

EventSet TesPrefix::events() const
{
  EventSet out;
  for (const auto& o : _items)
    out.insert(o.observable.begin(), o.observable.end());
  return out;
}

Verdict validate_prefix(std::span<const Observation> items)
{
  for (std::size_t i = 1; i < items.size(); ++i)
    if (!(items[i - 1].time < items[i].time))
      return Verdict::Fail;
  return Verdict::Pass;
}

bool is_prefix_of(const TesPrefix& shorter, const TesPrefix& longer)
{
  if (shorter.size() > longer.size())
    return false;
  return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

std::string to_string(const TesPrefix& p)
{
  std::string out = "<";
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    if (i)
      out += ", ";
    out += "(" + to_string(p[i].observable) + "," + p[i].time.str() + ")";
  }
  return out + ">";
}

} // namespace tescps
