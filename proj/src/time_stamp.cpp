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

#include <tescps/time_stamp.hpp>

#include <charconv>
#include <stdexcept>

namespace tescps {

namespace {

TimeStamp::value_type checked(TimeStamp::value_type v)
{
  if (v < 0)
    throw std::invalid_argument("time stamp must be nonnegative");
  return v;
}

std::int64_t parse_int(std::string_view text)
{
  std::int64_t out = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw std::invalid_argument("malformed time stamp: '" + std::string(text) + "'");
  return out;
}

} // namespace

TimeStamp::TimeStamp(std::int64_t whole)
: _value(checked(value_type(whole)))
{
}

TimeStamp::TimeStamp(std::int64_t num, std::int64_t den)
{
  if (den == 0)
    throw std::invalid_argument("time stamp denominator must be nonzero");
  _value = checked(value_type(num, den));
}

TimeStamp::TimeStamp(value_type value)
: _value(checked(value))
{
}

double TimeStamp::to_double() const
{
  return boost::rational_cast<double>(_value);
}

std::string TimeStamp::str() const
{
  if (den() == 1)
    return std::to_string(num());
  return std::to_string(num()) + "/" + std::to_string(den());
}

TimeStamp TimeStamp::parse(std::string_view text)
{
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return TimeStamp(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

  if (const auto dot = text.find('.'); dot != std::string_view::npos)
  {
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15)
      throw std::invalid_argument("malformed time stamp: '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
      den *= 10;
    const auto whole = dot == 0 ? 0 : parse_int(text.substr(0, dot));
    const auto part = parse_int(frac);
    if (whole < 0 || text.front() == '-')
      throw std::invalid_argument("time stamp must be nonnegative");
    return TimeStamp(whole * den + part, den);
  }

  return TimeStamp(parse_int(text));
}

TimeStamp operator+(const TimeStamp& a, const TimeStamp& b)
{
  return TimeStamp(a._value + b._value);
}

TimeStamp operator-(const TimeStamp& a, const TimeStamp& b)
{
  return TimeStamp(a._value - b._value);
}

TimeStamp midpoint(const TimeStamp& a, const TimeStamp& b)
{
  return TimeStamp((a._value + b._value) / 2);
}

std::strong_ordering operator<=>(const TimeStamp& a, const TimeStamp& b)
{
  if (a._value < b._value)
    return std::strong_ordering::less;
  if (b._value < a._value)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double seconds_between(const TimeStamp& a, const TimeStamp& b)
{
  return boost::rational_cast<double>(b.value() - a.value());
}

} // namespace tescps
