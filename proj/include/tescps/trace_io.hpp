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

#include <tescps/prefix.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

namespace tescps {

/// Raised for unreadable trace files; carries the 1-based line number.
class TraceFormatError : public std::runtime_error
{
public:
  TraceFormatError(std::size_t line, const std::string& what)
  : std::runtime_error("line " + std::to_string(line) + ": " + what), _line(line)
  {
  }
  std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

nlohmann::json to_json(const TimeStamp& t);
TimeStamp time_from_json(const nlohmann::json& j);

/// {"t": {"num": n, "den": d}, "obs": ["<canonical event>", ...]}
nlohmann::json to_json(const Observation& o);
Observation observation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TesPrefix& p);

/// One observation per line. Readers reject non-increasing time stamps.
void write_trace(std::ostream& out, const TesPrefix& p);
TesPrefix read_trace(std::istream& in);

void write_trace_file(const std::filesystem::path& path, const TesPrefix& p);
TesPrefix read_trace_file(const std::filesystem::path& path);

} // namespace tescps
