#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evoc/engine/config.hpp"
#include "evoc/engine/engine.hpp"
#include "evoc/engine/report.hpp"
#include "evoc/errors.hpp"
#include "evoc/inductive/monitor.hpp"
#include "evoc/inductive/observe.hpp"
#include "evoc/tm/codec.hpp"
#include "evoc/tm/enumerate.hpp"
#include "evoc/tm/executor.hpp"
#include "evoc/tm/parser.hpp"
#include "evoc/util/csv.hpp"
#include "evoc/version.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kError = 1;           // usage, parse, validation
constexpr int kBudgetExhausted = 2; // ran out of fuel/generations without a settled result

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw evoc::ConfigError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw evoc::ConfigError("cannot write file '" + path.string() + "'");
  out << content;
}

struct TmRunArgs {
  std::string machine_file;
  std::string input;
  std::uint64_t fuel = 10000;
};

int cmd_tm_run(const TmRunArgs& a) {
  const evoc::tm::MachineDescription m = evoc::tm::parse_machine(read_file(a.machine_file));
  const evoc::tm::RunResult r = evoc::tm::run(m, a.input, a.fuel);
  const bool halted = r.kind == evoc::tm::RunResult::Kind::halted;
  std::cout << "result: " << (halted ? "halted" : "fuel-exhausted") << "\n"
            << "output: " << r.output << "\n"
            << "steps: " << r.steps << "\n";
  return halted ? kOk : kBudgetExhausted;
}

struct EnumerateArgs {
  int states = 2;
  int symbols = 2;
  std::uint64_t fuel = 200;
  std::string out;
};

int cmd_tm_enumerate(const EnumerateArgs& a) {
  const evoc::tm::FamilySpec spec{a.states, a.symbols};
  const std::uint64_t n = evoc::tm::family_size(spec);
  if (n > evoc::tm::kEnumerationCap) {
    throw evoc::ConfigError("family has " + std::to_string(n) + " machines, above the cap of " +
                            std::to_string(evoc::tm::kEnumerationCap));
  }
  std::ostringstream csv;
  evoc::write_csv_row(csv, {"code", "halted", "steps"});
  evoc::tm::enumerate_family(spec, [&](std::uint64_t, const evoc::tm::MachineDescription& m) {
    const evoc::tm::RunResult r = evoc::tm::run(m, "", a.fuel);
    const bool halted = r.kind == evoc::tm::RunResult::Kind::halted;
    evoc::write_csv_row(csv, {evoc::tm::encode_machine(m).text, halted ? "1" : "0",
                              std::to_string(r.steps)});
  });
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    write_file(a.out, csv.str());
  }
  return kOk;
}

struct MonitorArgs {
  std::string machine_file;
  std::string input;
  std::uint64_t fuel = 10000;
  std::uint64_t window = 100;
  std::string trace_out;
};

int cmd_monitor(const MonitorArgs& a) {
  const evoc::tm::MachineDescription target = evoc::tm::parse_machine(read_file(a.machine_file));
  const evoc::tm::CodeWord code = evoc::tm::encode_machine(target);
  const evoc::inductive::InductiveMachine monitor = evoc::inductive::make_sos_monitor(code, a.input);
  evoc::inductive::Observation obs;
  try {
    obs = evoc::inductive::run_observed(monitor, "", a.fuel, a.window);
  } catch (const std::invalid_argument& e) {
    throw evoc::ConfigError(e.what());
  }

  std::uint64_t steps = 0;
  switch (obs.kind) {
    case evoc::inductive::Observation::Kind::stabilized: steps = obs.observed_until; break;
    case evoc::inductive::Observation::Kind::halted: steps = obs.halt_step; break;
    case evoc::inductive::Observation::Kind::provisional: steps = obs.budget; break;
  }
  Json j;
  j["tag"] = evoc::inductive::observation_kind_name(obs.kind);
  j["word"] = obs.word;
  j["steps"] = steps;
  j["last_change"] = obs.trace.empty() ? 0 : obs.trace.back().step;
  std::cout << j.dump(2) << "\n";

  if (!a.trace_out.empty()) {
    std::ostringstream t;
    evoc::inductive::dump_trace(t, obs.trace);
    write_file(a.trace_out, t.str());
  }
  return obs.kind == evoc::inductive::Observation::Kind::provisional ? kBudgetExhausted : kOk;
}

struct EvolveArgs {
  std::string config_file;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out = ".";
  std::size_t replicates = 1;
  std::size_t jobs = 1;
};

evoc::engine::ExperimentConfig load_evolve_config(const EvolveArgs& a) {
  evoc::engine::ExperimentConfig cfg = evoc::engine::load_config_file(a.config_file);
  if (a.seed_given) cfg.seed = a.seed;
  return cfg;
}

void write_run_outputs(const fs::path& dir, const evoc::engine::ExperimentConfig& cfg,
                       const evoc::engine::AnytimeReport& report) {
  std::ostringstream csv;
  evoc::engine::write_metrics_csv(csv, report.metrics);
  write_file(dir / "metrics.csv", csv.str());
  write_file(dir / "report.json", evoc::engine::report_json(cfg, report));
}

int cmd_evolve_run(const EvolveArgs& a) {
  const evoc::engine::ExperimentConfig cfg = load_evolve_config(a);
  evoc::engine::RunOutput out = evoc::engine::run_anytime(cfg);
  write_run_outputs(a.out, cfg, out.report);
  std::cout << "final: generation=" << out.report.final.generation
            << " fitness=" << evoc::format_double(out.report.final.fitness)
            << " stabilized=" << (out.report.stabilized ? "true" : "false") << "\n";
  return out.report.stabilized ? kOk : kBudgetExhausted;
}

int cmd_evolve_sweep(const EvolveArgs& a) {
  const evoc::engine::ExperimentConfig base = load_evolve_config(a);
  if (a.replicates < 1) throw evoc::ConfigError("--replicates must be at least 1");

  struct Slot {
    std::uint64_t seed = 0;
    evoc::engine::BestEntry final;
    bool stabilized = false;
    std::string error;
  };
  std::vector<Slot> slots(a.replicates);

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= a.replicates) return;
      evoc::engine::ExperimentConfig cfg = base;
      cfg.seed = base.seed + i;
      slots[i].seed = cfg.seed;
      try {
        evoc::engine::RunOutput out = evoc::engine::run_anytime(cfg);
        char name[32];
        std::snprintf(name, sizeof name, "rep-%03zu", i);
        write_run_outputs(fs::path(a.out) / name, cfg, out.report);
        slots[i].final = out.report.final;
        slots[i].stabilized = out.report.stabilized;
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(a.jobs, a.replicates));
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  for (const Slot& s : slots) {
    if (!s.error.empty()) throw evoc::ConfigError(s.error);
  }

  Json summary;
  summary["schema_version"] = 1;
  summary["code_version"] = evoc::kVersion;
  summary["replicates"] = a.replicates;
  Json runs = Json::array();
  double fitness_sum = 0.0;
  std::size_t stabilized_count = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    runs.push_back(Json{{"replicate", i},
                        {"seed", s.seed},
                        {"final", Json{{"generation", s.final.generation},
                                       {"fitness", s.final.fitness},
                                       {"word", s.final.word}}},
                        {"stabilized", s.stabilized}});
    fitness_sum += s.final.fitness;
    if (s.stabilized) ++stabilized_count;
  }
  summary["runs"] = std::move(runs);
  summary["mean_final_fitness"] = fitness_sum / static_cast<double>(slots.size());
  summary["stabilized_count"] = stabilized_count;
  write_file(fs::path(a.out) / "summary.json", summary.dump(2) + "\n");
  std::cout << "replicates: " << a.replicates << "\n"
            << "mean_final_fitness: "
            << evoc::format_double(fitness_sum / static_cast<double>(slots.size())) << "\n"
            << "stabilized: " << stabilized_count << "/" << a.replicates << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inductive machine runner and stress-driven evolutionary adaptation engine"};
  app.set_version_flag("--version", std::string("evoc ") + evoc::kVersion);
  app.require_subcommand(1);

  CLI::App* tm = app.add_subcommand("tm", "deterministic multi-tape machines");
  tm->require_subcommand(1);
  TmRunArgs tm_run_args;
  CLI::App* tm_run = tm->add_subcommand("run", "run a machine on an input word");
  tm_run->add_option("machine", tm_run_args.machine_file, "machine source file")->required();
  tm_run->add_option("--input", tm_run_args.input, "input word (default empty)");
  tm_run->add_option("--fuel", tm_run_args.fuel, "step budget");

  EnumerateArgs enum_args;
  CLI::App* tm_enum = tm->add_subcommand("enumerate", "run a bounded machine family on blank input");
  tm_enum->add_option("--states", enum_args.states, "state count")->check(CLI::Range(1, 6));
  tm_enum->add_option("--symbols", enum_args.symbols, "alphabet size")->check(CLI::Range(1, 10));
  tm_enum->add_option("--fuel", enum_args.fuel, "step budget per machine");
  tm_enum->add_option("--out", enum_args.out, "CSV output file (default stdout)");

  CLI::App* inductive = app.add_subcommand("inductive", "non-halting computations");
  inductive->require_subcommand(1);
  MonitorArgs mon_args;
  CLI::App* monitor = inductive->add_subcommand("monitor", "halting monitor over a target machine");
  monitor->add_option("machine", mon_args.machine_file, "target machine source file")->required();
  monitor->add_option("--input", mon_args.input, "target input word (default empty)");
  monitor->add_option("--fuel", mon_args.fuel, "observation step budget");
  monitor->add_option("--window", mon_args.window, "stabilization window");
  monitor->add_option("--trace-out", mon_args.trace_out, "write the output-word trace here");

  CLI::App* evolve = app.add_subcommand("evolve", "anytime evolutionary adaptation");
  evolve->require_subcommand(1);
  EvolveArgs run_args;
  CLI::App* evolve_run = evolve->add_subcommand("run", "one experiment run");
  evolve_run->add_option("--config", run_args.config_file, "experiment config (json)")->required();
  CLI::Option* run_seed =
      evolve_run->add_option("--seed", run_args.seed, "override the config seed");
  evolve_run->add_option("--out", run_args.out, "output directory (default .)");

  EvolveArgs sweep_args;
  CLI::App* evolve_sweep = evolve->add_subcommand("sweep", "replicate runs over consecutive seeds");
  evolve_sweep->add_option("--config", sweep_args.config_file, "experiment config (json)")
      ->required();
  CLI::Option* sweep_seed =
      evolve_sweep->add_option("--seed", sweep_args.seed, "base seed override");
  evolve_sweep->add_option("--out", sweep_args.out, "output directory (default .)");
  evolve_sweep->add_option("--replicates", sweep_args.replicates, "number of runs");
  evolve_sweep->add_option("--jobs", sweep_args.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (tm_run->parsed()) return cmd_tm_run(tm_run_args);
    if (tm_enum->parsed()) return cmd_tm_enumerate(enum_args);
    if (monitor->parsed()) return cmd_monitor(mon_args);
    if (evolve_run->parsed()) {
      run_args.seed_given = run_seed->count() > 0;
      return cmd_evolve_run(run_args);
    }
    if (evolve_sweep->parsed()) {
      sweep_args.seed_given = sweep_seed->count() > 0;
      return cmd_evolve_sweep(sweep_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
