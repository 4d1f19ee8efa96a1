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

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tescps {

/// Exact nonnegative rational time stamp, always held in reduced form.
class TimeStamp
{
public:
  using value_type = boost::rational<std::int64_t>;

  TimeStamp() = default;
  TimeStamp(std::int64_t whole);
  TimeStamp(std::int64_t num, std::int64_t den);
  explicit TimeStamp(value_type value);

  std::int64_t num() const { return _value.numerator(); }
  std::int64_t den() const { return _value.denominator(); }
  const value_type& value() const { return _value; }

  double to_double() const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  /// Accepts "n", "n/d" and finite decimals such as "2.5".
  static TimeStamp parse(std::string_view text);

  friend TimeStamp operator+(const TimeStamp& a, const TimeStamp& b);
  friend TimeStamp operator-(const TimeStamp& a, const TimeStamp& b);
  friend TimeStamp midpoint(const TimeStamp& a, const TimeStamp& b);

  friend bool operator==(const TimeStamp& a, const TimeStamp& b)
  {
    return a._value == b._value;
  }
  friend std::strong_ordering operator<=>(const TimeStamp& a, const TimeStamp& b);

private:
  value_type _value{0};
};

/// Elapsed seconds b - a as a double; used by the physics folds.
double seconds_between(const TimeStamp& a, const TimeStamp& b);

} // namespace tescps
