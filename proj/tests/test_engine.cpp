#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "evoc/engine/config.hpp"
#include "evoc/engine/engine.hpp"
#include "evoc/epu/serialize.hpp"
#include "evoc/errors.hpp"

using namespace evoc;
using namespace evoc::engine;

namespace {

ExperimentConfig small_onemax(std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.seed = seed;
  cfg.mode = Mode::c_ina;
  cfg.population = 100;
  cfg.budget = 300;
  cfg.window = 100;
  cfg.environment.benchmark = Benchmark::onemax;
  cfg.environment.loci = 32;
  cfg.rates.base_rate = 1.0 / 64.0;
  return cfg;
}

ExperimentConfig oscillation(std::uint64_t seed, std::uint64_t switch_every,
                             std::size_t switches, std::size_t loci = 32,
                             std::size_t differing = 32) {
  ExperimentConfig cfg;
  cfg.seed = seed;
  cfg.mode = Mode::c_ina;
  cfg.population = 100;
  cfg.window = 10;
  cfg.environment.benchmark = Benchmark::oscillation;
  cfg.environment.loci = loci;
  cfg.environment.differing = differing;
  cfg.environment.switch_every = switch_every;
  cfg.environment.switches = switches;
  cfg.rates.base_rate = 1.0 / 64.0;
  cfg.budget = switch_every * (switches + 1);
  return cfg;
}

std::string population_fingerprint(const EngineState& s) {
  std::string out;
  for (const Individual& ind : s.population) {
    out += epu::serialize_genome(ind.genome);
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("the stress signal is a linear alarm on mean fitness") {
  CHECK(stress_signal(0.95 * 64, 64, 0.95) == 0.0);
  CHECK(stress_signal(64, 64, 0.95) == 0.0);      // above target clamps
  CHECK(stress_signal(0.0, 64, 0.95) == 1.0);
  CHECK(stress_signal(0.95 * 32, 64, 0.95) == doctest::Approx(0.5));
  CHECK(stress_signal(30.4, 64, 0.95) == doctest::Approx(0.5));
}

TEST_CASE("config validation pins its ranges") {
  ExperimentConfig ok = small_onemax(1);
  CHECK_NOTHROW(validate_config(ok));

  auto expect_reject = [](auto mutate) {
    ExperimentConfig bad = small_onemax(1);
    mutate(bad);
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
  };
  expect_reject([](ExperimentConfig& c) { c.population = 1; });
  expect_reject([](ExperimentConfig& c) { c.window = 0; });
  expect_reject([](ExperimentConfig& c) { c.selection.elitism = c.population; });
  expect_reject([](ExperimentConfig& c) { c.selection.tournament = 0; });
  expect_reject([](ExperimentConfig& c) { c.selection.tournament = c.population + 1; });
  expect_reject([](ExperimentConfig& c) { c.genome.alphabet = "0"; });
  expect_reject([](ExperimentConfig& c) { c.genome.alphabet = "00"; });
  expect_reject([](ExperimentConfig& c) { c.genome.mutator_fraction = 1.5; });
  expect_reject([](ExperimentConfig& c) { c.rates.mutator_strength = 0.5; });
  expect_reject([](ExperimentConfig& c) {
    c.environment.benchmark = Benchmark::ktrap;
    c.environment.loci = 2;
  });
  expect_reject([](ExperimentConfig& c) { c.environment.switches = 3; });  // not oscillation
  expect_reject([](ExperimentConfig& c) {
    c.environment.benchmark = Benchmark::oscillation;
    c.environment.switches = 1;
    c.environment.differing = c.environment.loci + 1;
  });
  expect_reject([](ExperimentConfig& c) { c.stress.target_fraction = 0.0; });
  expect_reject([](ExperimentConfig& c) { c.sos.ner_threshold = 0.7; });  // above tls
  expect_reject([](ExperimentConfig& c) { c.genome.init = "sideways"; });
}

TEST_CASE("the json loader is strict about keys and types") {
  CHECK_NOTHROW((void)load_config_text("{}"));
  CHECK_NOTHROW((void)load_config_text(R"({"seed": 4, "rates": {"base_rate": 0.01}})"));

  try {
    (void)load_config_text(R"({"seed": 1, "bogus": 2})");
    FAIL("unknown key accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  CHECK_THROWS_AS((void)load_config_text(R"({"seed": -3})"), ConfigError);
  CHECK_THROWS_AS((void)load_config_text(R"({"seed": 1.5})"), ConfigError);
  CHECK_THROWS_AS((void)load_config_text(R"({"population": "many"})"), ConfigError);
  CHECK_THROWS_AS((void)load_config_text("[1,2]"), ConfigError);
  CHECK_THROWS_AS((void)load_config_text("{"), ConfigError);
}

TEST_CASE("with every source of variation off, only founder genomes circulate") {
  ExperimentConfig cfg = small_onemax(5);
  cfg.mode = Mode::c_ima;
  cfg.rates.base_rate = 0.0;
  cfg.budget = 20;

  EngineState s(cfg);
  std::set<std::string> founders;
  for (const Individual& ind : s.population) founders.insert(ind.genome.flattened());

  for (int g = 0; g < 20; ++g) {
    c_ima_step(s);
    CHECK(s.last_metrics.realized_mutation_rate == 0.0);
    for (const Individual& ind : s.population)
      CHECK(founders.count(ind.genome.flattened()) == 1);
  }
}

TEST_CASE("zero-initialized founders all start on the first symbol") {
  ExperimentConfig cfg = small_onemax(99);
  cfg.genome.init = "zeros";
  EngineState s(cfg);
  for (const Individual& ind : s.population) {
    CHECK(ind.genome.flattened() == std::string(32, '0'));
    CHECK(ind.fitness == 0.0);
  }
}

TEST_CASE("forked states evolve identically") {
  EngineState a(small_onemax(6));
  EngineState b = a;  // copy mid-flight
  for (int g = 0; g < 10; ++g) {
    engine_step(a);
    engine_step(b);
  }
  CHECK(population_fingerprint(a) == population_fingerprint(b));
  CHECK(a.best_trace == b.best_trace);
}

TEST_CASE("a repressed stress layer changes nothing") {
  // Neutral fitness keeps stress at zero, so the full engine must follow the
  // imitative core bit for bit: same populations, same metrics, no stray rng
  // draws from the gated operators.
  ExperimentConfig cfg = small_onemax(7);
  cfg.environment.benchmark = Benchmark::neutral;
  cfg.budget = 40;

  cfg.mode = Mode::c_ima;
  EngineState imitative(cfg);
  cfg.mode = Mode::c_ina;
  EngineState full(cfg);

  for (int g = 0; g < 40; ++g) {
    c_ima_step(imitative);
    c_ina_step(full);
    REQUIRE(full.stress == 0.0);
    REQUIRE(full.phase == Phase::inducible);
  }
  CHECK(population_fingerprint(imitative) == population_fingerprint(full));
  CHECK(imitative.best_trace == full.best_trace);
}

TEST_CASE("onemax runs reach the optimum") {
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RunOutput out = run_anytime(small_onemax(seed));
    if (out.report.final.fitness == 32.0) ++solved;
  }
  CHECK(solved >= 9);
}

TEST_CASE("an environment switch spikes stress and opens the mutagenic tiers") {
  const ExperimentConfig cfg = oscillation(8, 50, 1);
  const RunOutput out = run_anytime(cfg);
  const auto& rows = out.report.metrics;
  REQUIRE(rows.size() == cfg.budget + 1);

  const GenMetrics& at_switch = rows[50];
  CHECK(at_switch.stress == 1.0);
  CHECK(at_switch.sos_tiers_active == 2);

  // Mean realized rate in the settled part of the first epoch vs the switch.
  double before = 0.0;
  for (std::size_t g = 30; g < 50; ++g) before += rows[g].realized_mutation_rate;
  before /= 20.0;
  CHECK(at_switch.realized_mutation_rate > 5.0 * before);
  CHECK(at_switch.realized_mutation_rate > 5.0 * cfg.rates.base_rate);
}

TEST_CASE("recombination only fires under stress, and the barrier screens it") {
  const ExperimentConfig cfg = oscillation(9, 50, 1);
  const RunOutput out = run_anytime(cfg);
  const auto& rows = out.report.metrics;

  // Settled epoch tail: stress 0 ⇒ no attempts.
  for (std::size_t g = 40; g < 50; ++g)
    if (rows[g].stress == 0.0) CHECK(rows[g].recombination_events == 0);

  // At the switch itself the population is freshly mutagenized, so pairs sit
  // beyond the divergence barrier and exchanges are vetoed; they show up in
  // the re-adaptation window once the pool is coherent again.
  std::size_t during_recovery = 0;
  for (std::size_t g = 51; g <= 80; ++g) during_recovery += rows[g].recombination_events;
  CHECK(during_recovery > 0);

  // Dropping surveillance opens the barrier-breaking regime: with tls up the
  // gate passes regardless of divergence, so the switch generation itself
  // recombines.
  ExperimentConfig open = cfg;
  open.mrs.enabled = false;
  const RunOutput broken = run_anytime(open);
  CHECK(broken.report.metrics[50].recombination_events > 0);
}

TEST_CASE("improvement tags concentrate on the loci the switch actually flipped") {
  // 64 loci, only the last 16 differ between the two targets. Once the run
  // specializes after a switch, its contingency set should sit mostly in the
  // flipped region.
  // Only the second epoch counts: during the first one the population is
  // still absorbing its random founders, so improvements touch every locus.
  std::size_t in_region = 0;
  std::size_t out_region = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ExperimentConfig cfg = oscillation(seed, 120, 1, 64, 16);
    cfg.budget = 240;
    EngineState s(cfg);
    for (std::uint64_t g = 0; g < cfg.budget; ++g) {
      engine_step(s);
      if (s.generation > 120 && s.phase == Phase::specializing)
        for (std::size_t locus : s.contingency)
          (locus >= 48 ? in_region : out_region)++;
    }
  }
  REQUIRE(in_region + out_region > 0);
  // New-best words also drag along mutagenesis scars from wherever the
  // winning lineage drifted, so the flipped region does not own the tags
  // outright — but it must be far over its uniform 25% share.
  CHECK(3 * in_region > in_region + out_region);
}

TEST_CASE("memory restores a solved variant within one generation of its return") {
  // Epochs: variant 0 until gen 60, variant 1 until 120, variant 0 again.
  const ExperimentConfig cfg = oscillation(10, 60, 2);
  const RunOutput out = run_anytime(cfg);
  const auto& rows = out.report.metrics;

  const double solved_before = rows[59].best_fitness;
  CHECK(rows[120].best_fitness >= solved_before);

  // The straight line from re-switch onward never dips below the recall.
  for (std::size_t g = 120; g < rows.size(); ++g)
    CHECK(rows[g].best_fitness >= solved_before);
}

TEST_CASE("the running answer never degrades within an epoch") {
  const ExperimentConfig cfg = oscillation(11, 50, 3);
  const RunOutput out = run_anytime(cfg);
  const auto& rows = out.report.metrics;
  REQUIRE(rows.size() == cfg.budget + 1);
  for (std::size_t g = 1; g < rows.size(); ++g) {
    if (g % 50 == 0) continue;  // switch generations re-evaluate the world
    CHECK(rows[g].best_fitness >= rows[g - 1].best_fitness);
  }
  CHECK(out.report.generations == cfg.budget);
  CHECK(out.report.final == out.report.best_trace.back());
}

TEST_CASE("stabilization means the answer outlived the window") {
  ExperimentConfig cfg = small_onemax(12);
  cfg.environment.loci = 8;
  cfg.population = 50;
  cfg.budget = 300;
  cfg.window = 100;
  const RunOutput out = run_anytime(cfg);
  CHECK(out.report.stabilized);
  CHECK(out.report.final.fitness == 8.0);

  // A budget shorter than the window can never stabilize.
  cfg.budget = 50;
  CHECK_FALSE(run_anytime(cfg).report.stabilized);

  // Budget 0: the baseline row is the whole story.
  cfg.budget = 0;
  const RunOutput zero = run_anytime(cfg);
  CHECK(zero.report.metrics.size() == 1);
  CHECK(zero.report.generations == 0);
  CHECK_FALSE(zero.report.stabilized);
  REQUIRE(!zero.report.best_trace.empty());
  CHECK(zero.report.best_trace[0].generation == 0);
}

TEST_CASE("runs are a pure function of their config") {
  const ExperimentConfig cfg = oscillation(13, 40, 2);
  const RunOutput a = run_anytime(cfg);
  const RunOutput b = run_anytime(cfg);
  REQUIRE(a.report.metrics.size() == b.report.metrics.size());
  for (std::size_t g = 0; g < a.report.metrics.size(); ++g) {
    CHECK(a.report.metrics[g].best_fitness == b.report.metrics[g].best_fitness);
    CHECK(a.report.metrics[g].diversity == b.report.metrics[g].diversity);
    CHECK(a.report.metrics[g].realized_mutation_rate ==
          b.report.metrics[g].realized_mutation_rate);
  }
  CHECK(a.report.best_trace == b.report.best_trace);
  CHECK(population_fingerprint(a.state) == population_fingerprint(b.state));

  ExperimentConfig other = cfg;
  other.seed = 14;
  CHECK(run_anytime(other).report.best_trace != a.report.best_trace);
}

TEST_CASE("surveillance and mutagenesis bracket the realized rate") {
  // Homeostasis: with repair on and the stress layer silent, the realized
  // rate stays at or below the base rate; with repair off and translesion
  // synthesis forced, it blows far past it.
  ExperimentConfig calm = small_onemax(15);
  calm.environment.benchmark = Benchmark::neutral;
  calm.budget = 30;
  const RunOutput quiet = run_anytime(calm);
  double mean_rate = 0.0;
  for (std::size_t g = 1; g < quiet.report.metrics.size(); ++g)
    mean_rate += quiet.report.metrics[g].realized_mutation_rate;
  mean_rate /= static_cast<double>(quiet.report.metrics.size() - 1);
  CHECK(mean_rate <= calm.rates.base_rate);

  ExperimentConfig stormy = oscillation(15, 30, 1);
  stormy.mrs.enabled = false;
  const RunOutput loud = run_anytime(stormy);
  CHECK(loud.report.metrics[30].realized_mutation_rate > 10.0 * stormy.rates.base_rate);
}

TEST_CASE("the engine rejects invalid configs at construction") {
  ExperimentConfig bad = small_onemax(16);
  bad.population = 0;
  CHECK_THROWS_AS((void)EngineState(bad), ConfigError);
  CHECK_THROWS_AS((void)run_anytime(bad), ConfigError);
}
