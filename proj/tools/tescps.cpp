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

#include <tescps/oracle.hpp>
#include <tescps/property.hpp>
#include <tescps/scenario/spec.hpp>
#include <tescps/trace_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace tescps;
using nlohmann::json;

namespace {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level()
{
  const char* env = std::getenv("TES_LOG");
  const std::string v = env ? env : "error";
  if (v == "debug")
    return LogLevel::Debug;
  if (v == "info")
    return LogLevel::Info;
  return LogLevel::Error;
}

void log(LogLevel level, const std::string& msg)
{
  static const LogLevel threshold = log_level();
  static const char* names[] = {"error", "info", "debug"};
  if (level <= threshold)
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

/// Bad command-line input or an unusable file: exit status 2.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;
constexpr int exit_violation = 3;

json units()
{
  return {{"energy", "Ws (1 Wh = 3600 Ws)"}, {"power", "W"}, {"force", "N"}, {"position", "m"}, {"time", "s"}};
}

TraceProperty property_named(const std::string& name, const cps::ScenarioSpec& spec)
{
  if (name == "energy")
    return p_energy(spec.battery_ids());
  if (name == "finite")
    return p_finite(Interface::everything());
  if (spec.rigs.size() < 2)
    throw UsageError("property '" + name + "' needs a scenario with two robots");
  const auto& a = spec.rigs[0];
  const auto& b = spec.rigs[1];
  if (name == "no-overlap")
    return p_no_overlap(a.ids.object, b.ids.object);
  return p_swap(a.ids.object, cps::to_position(b.start), b.ids.object, cps::to_position(a.start));
}

/// X_read: a read of each battery at the level lev forces at the insertion
/// time, paired with the owning robot's read when the system observes it.
InsertionSet battery_reads(const cps::ScenarioSpec& spec, const Interface& system)
{
  return [&spec, system](const TesPrefix& before, const TimeStamp& t) {
    std::vector<Observable> out;
    for (const auto& rig : spec.rigs)
    {
      if (!system.contains(Event::read(rig.ids.battery, 0)))
        continue;
      auto probe = before;
      probe.push_back({{Event::read(rig.ids.battery, 0)}, t});
      const double level = cps::battery_level(probe, rig.ids.battery, rig.physics);
      Observable x{Event::read(rig.ids.battery, level)};
      const auto robot_read = Event::read_bat(rig.ids.robot, level);
      if (system.contains(robot_read))
        x.insert(robot_read);
      out.push_back(std::move(x));
    }
    return out;
  };
}

/// Restricts a component's generator to one recorded trace.
Component replaying(Component c, TesPrefix trace)
{
  c.generate = [trace = std::move(trace)](const GenerationRequest&) { return Behavior{trace}; };
  c.exhaustive = true;
  return c;
}

TesPrefix load_trace(const std::string& path)
{
  try
  {
    return read_trace_file(path);
  }
  catch (const TraceFormatError& e)
  {
    throw UsageError(path + ": " + e.what());
  }
  catch (const std::runtime_error& e)
  {
    throw UsageError(e.what());
  }
}

struct SimulateArgs
{
  std::string spec;
  std::optional<std::size_t> depth;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

int run_simulate(const SimulateArgs& args)
{
  const auto spec = cps::load_scenario(args.spec);
  const std::size_t depth = args.depth.value_or(spec.depth);
  const std::uint64_t seed = args.seed.value_or(spec.seed);
  const auto system = cps::build_system(spec);
  log(LogLevel::Info, "simulating " + system.name + " depth=" + std::to_string(depth) + " seed=" + std::to_string(seed));

  const auto behavior = system.generate({depth, seed});
  if (behavior.empty())
    throw std::runtime_error("no composable behavior for seed " + std::to_string(seed));
  log(LogLevel::Debug, std::to_string(behavior.size()) + " composite prefix(es) generated");

  const auto out = args.out ? args.out : spec.out;
  json summary{{"system", system.name}, {"depth", depth}, {"seed", seed}, {"prefixes", behavior.size()}};
  json files = json::array();
  std::size_t k = 0;
  for (const auto& p : behavior)
  {
    if (!out || *out == "-")
    {
      write_trace(std::cout, p);
      ++k;
      continue;
    }
    const std::string path = k == 0 ? *out : *out + "." + std::to_string(k);
    write_trace_file(path, p);
    files.push_back({{"path", path}, {"observations", p.size()}});
    ++k;
  }
  if (out && *out != "-")
  {
    json levels = json::object();
    const auto& first = *behavior.begin();
    for (const auto& rig : spec.rigs)
      levels[rig.ids.battery] = cps::battery_level(first, rig.ids.battery, rig.physics) / cps::ws_per_wh;
    summary["traces"] = files;
    summary["final_battery_level_wh"] = levels;
    std::cout << summary.dump(2) << "\n";
  }
  return exit_ok;
}

struct CheckArgs
{
  std::string spec;
  std::optional<std::string> property;
  std::optional<std::string> hyper;
  std::optional<std::string> trace;
  std::optional<std::size_t> depth;
  std::uint64_t seeds = 1;
  std::size_t samples = 100;
};

int run_check(const CheckArgs& args)
{
  const auto spec = cps::load_scenario(args.spec);
  const std::size_t depth = args.depth.value_or(spec.depth);
  auto system = cps::build_system(spec);

  CheckResult result;
  json report;
  if (args.property)
  {
    const auto prop = property_named(*args.property, spec);
    if (args.trace)
    {
      const auto trace = load_trace(*args.trace);
      log(LogLevel::Info, "checking " + prop.name + " on " + std::to_string(trace.size()) + " recorded observations");
      result = check_trace(prop, trace);
    }
    else
    {
      log(LogLevel::Info, "checking " + system.name + " against " + prop.name);
      result = satisfies_trace(system, prop, depth, args.seeds);
    }
    report = report_json(result);
    report["property"] = prop.name;
  }
  else
  {
    if (args.trace)
      system = replaying(system, load_trace(*args.trace));
    if (*args.hyper == "shift")
      result = hyper_shift_check(system, depth, args.samples, args.seeds);
    else
      result = hyper_insert_check(system, battery_reads(spec, system.interface), depth, args.seeds);
    report = report_json(result);
    report["hyper"] = *args.hyper;
    if (result.witness)
      report["witness"]["replays"] = replay(system, *result.witness);
  }
  report["mode"] = args.trace ? "trace" : "component";
  report["units"] = units();
  std::cout << report.dump(2) << "\n";
  return result.verdict == Verdict::Fail ? exit_violation : exit_ok;
}

int run_lemmas(const std::string& universe, const std::string& law, std::uint64_t seed)
{
  const auto& names = law_names();
  if (law != "all" && std::find(names.begin(), names.end(), law) == names.end())
  {
    std::string valid = "all";
    for (const auto& n : names)
      valid += ", " + n;
    throw UsageError("unknown law '" + law + "' (valid: " + valid + ")");
  }
  FiniteUniverse u;
  try
  {
    u = named_universe(universe);
    enumerate_prefixes(u);
  }
  catch (const std::invalid_argument& e)
  {
    throw UsageError(e.what());
  }

  bool ok = true;
  json results = json::array();
  for (const auto& r : lemma_suite(u, law, seed))
  {
    log(LogLevel::Info, r.law + "/" + r.relation + ": " + std::string(to_string(r.status)));
    ok = ok && r.status != LawStatus::Fail;
    results.push_back(to_json(r));
  }
  std::cout << json{{"universe", universe}, {"law", law}, {"results", results}}.dump(2) << "\n";
  return ok ? exit_ok : exit_violation;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Timed-event-stream components: simulation, property checks and algebraic lemma suites"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Generate a composite trace from a scenario");
  simulate->add_option("spec", sim.spec, "Scenario JSON file")->required();
  simulate->add_option("--depth", sim.depth, "Plan steps per robot");
  simulate->add_option("--seed", sim.seed, "Generator seed (0 = integer time grid)");
  simulate->add_option("--out", sim.out, "Output JSONL trace ('-' for stdout)");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Check a trace property or a hyperproperty");
  check->add_option("spec", chk.spec, "Scenario JSON file")->required();
  auto* prop = check->add_option("--property", chk.property, "Trace property")
                 ->check(CLI::IsMember({"energy", "no-overlap", "swap", "finite"}));
  auto* hyper = check->add_option("--hyper", chk.hyper, "Hyperproperty")->check(CLI::IsMember({"insert", "shift"}));
  prop->excludes(hyper);
  check->add_option("--trace", chk.trace, "Recorded JSONL trace to check instead of sampling");
  check->add_option("--depth", chk.depth, "Plan steps per robot");
  check->add_option("--seeds", chk.seeds, "Number of generator seeds")->check(CLI::PositiveNumber);
  check->add_option("--samples", chk.samples, "Retimings per prefix for --hyper shift");

  std::string universe = "tiny";
  std::string law = "all";
  std::uint64_t lemma_seed = 1;
  auto* lemmas = app.add_subcommand("lemmas", "Run the algebraic law suite on a finite universe");
  lemmas->add_option("--universe", universe, "Finite universe")->check(CLI::IsMember({"tiny", "small"}));
  lemmas->add_option("--law", law, "Law name or 'all'");
  lemmas->add_option("--seed", lemma_seed, "Seed for the sampled laws");

  try
  {
    app.parse(argc, argv);
    if (check->parsed() && !chk.property && !chk.hyper)
      throw CLI::ValidationError("check", "exactly one of --property or --hyper is required");
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return exit_usage;
  }

  try
  {
    if (simulate->parsed())
      return run_simulate(sim);
    if (check->parsed())
      return run_check(chk);
    return run_lemmas(universe, law, lemma_seed);
  }
  catch (const cps::SpecError& e)
  {
    log(LogLevel::Error, std::string("invalid scenario: ") + e.what());
    return exit_usage;
  }
  catch (const UsageError& e)
  {
    log(LogLevel::Error, e.what());
    return exit_usage;
  }
  catch (const std::exception& e)
  {
    log(LogLevel::Error, e.what());
    return exit_runtime;
  }
}
