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

#include <tescps/trace_io.hpp>

#include <fstream>
#include <istream>
#include <ostream>

namespace tescps {

using nlohmann::json;

json to_json(const TimeStamp& t)
{
  return json{{"num", t.num()}, {"den", t.den()}};
}

TimeStamp time_from_json(const json& j)
{
  if (j.is_number_integer())
    return TimeStamp(j.get<std::int64_t>());
  if (j.is_string())
    return TimeStamp::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("time stamp must be {\"num\": int, \"den\": int}");
  const auto& num = j.at("num");
  const auto& den = j.at("den");
  if (!num.is_number_integer() || !den.is_number_integer())
    throw std::invalid_argument("time stamp num/den must be integers");
  const auto d = den.get<std::int64_t>();
  if (d <= 0)
    throw std::invalid_argument("time stamp denominator must be positive");
  return TimeStamp(num.get<std::int64_t>(), d);
}

json to_json(const Observation& o)
{
  json events = json::array();
  for (const auto& e : o.observable)
    events.push_back(e.encoding());
  return json{{"t", to_json(o.time)}, {"obs", events}};
}

Observation observation_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("t") || !j.contains("obs"))
    throw std::invalid_argument("observation needs \"t\" and \"obs\"");
  Observation o{{}, time_from_json(j.at("t"))};
  const auto& events = j.at("obs");
  if (!events.is_array())
    throw std::invalid_argument("\"obs\" must be an array");
  for (const auto& e : events)
  {
    if (!e.is_string())
      throw std::invalid_argument("events must be canonical strings");
    if (!o.observable.insert(canonical_decode(e.get<std::string>())).second)
      throw std::invalid_argument("duplicate event in observation");
  }
  return o;
}

json to_json(const TesPrefix& p)
{
  json out = json::array();
  for (const auto& o : p)
    out.push_back(to_json(o));
  return out;
}

void write_trace(std::ostream& out, const TesPrefix& p)
{
  for (const auto& o : p)
    out << to_json(o).dump() << '\n';
}

TesPrefix read_trace(std::istream& in)
{
  TesPrefix p;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line))
  {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    Observation o;
    try
    {
      o = observation_from_json(json::parse(line));
    }
    catch (const std::exception& e)
    {
      throw TraceFormatError(number, e.what());
    }
    if (!p.empty() && !(p.back().time < o.time))
      throw TraceFormatError(number, "time stamp " + o.time.str() + " does not exceed " + p.back().time.str());
    p.push_back(std::move(o));
  }
  return p;
}

void write_trace_file(const std::filesystem::path& path, const TesPrefix& p)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_trace(out, p);
}

TesPrefix read_trace_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  return read_trace(in);
}

} // namespace tescps
