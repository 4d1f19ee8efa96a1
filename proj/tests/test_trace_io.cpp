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

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace tescps;

TEST_SUITE("trace-io")
{
  TEST_CASE("observation json shape")
  {
    const Observation o{{Event::move("R1", Direction::N, 20), Event::discharge("B1", 20)}, TimeStamp(5, 2)};
    const auto j = to_json(o);
    CHECK(j["t"]["num"] == 5);
    CHECK(j["t"]["den"] == 2);
    CHECK(j["obs"].size() == 2);
    CHECK(observation_from_json(j) == o);
  }

  TEST_CASE("round trip through a stream")
  {
    const TesPrefix p{{{Event::read_loc("R", {0, 0})}, 1},
                      {{}, TimeStamp(4, 3)},
                      {{Event::read("B", 7199960), Event::read_bat("R", 7199960)}, 4}};
    std::stringstream s;
    write_trace(s, p);
    CHECK(read_trace(s) == p);
  }

  TEST_CASE("round trip through a file")
  {
    const auto path = std::filesystem::temp_directory_path() / "tescps_trace_io_test.jsonl";
    const TesPrefix p{{{Event::loc("I", {1.5, 2})}, 3}};
    write_trace_file(path, p);
    CHECK(read_trace_file(path) == p);
    std::filesystem::remove(path);
  }

  TEST_CASE("readers reject bad input with the line number")
  {
    std::stringstream unordered;
    unordered << R"({"t":{"num":2,"den":1},"obs":[]})" << "\n" << R"({"t":{"num":1,"den":1},"obs":[]})" << "\n";
    try
    {
      read_trace(unordered);
      FAIL("expected TraceFormatError");
    }
    catch (const TraceFormatError& e)
    {
      CHECK(e.line() == 2);
    }

    std::stringstream garbage("not json\n");
    CHECK_THROWS_AS(read_trace(garbage), TraceFormatError);

    std::stringstream zero_den(R"({"t":{"num":1,"den":0},"obs":[]})");
    CHECK_THROWS_AS(read_trace(zero_den), TraceFormatError);

    std::stringstream dup(R"({"t":{"num":1,"den":1},"obs":["a","a"]})");
    CHECK_THROWS_AS(read_trace(dup), TraceFormatError);

    CHECK_THROWS(read_trace_file("/nonexistent/trace.jsonl"));
  }
}
