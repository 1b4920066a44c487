#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evoc/engine/config.hpp"
#include "evoc/engine/environment.hpp"
#include "evoc/epu/epuon.hpp"
#include "evoc/epu/genome.hpp"
#include "evoc/ops/mrs.hpp"
#include "evoc/ops/sos.hpp"
#include "evoc/ops/tls.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::engine {

// Within-epoch escalation: plain variation, then stress-opened operators,
// then self-directed variation at the loci that recently paid off.
enum class Phase { inducible, proactive, specializing };
const char* phase_name(Phase p);

struct Individual {
  epu::Genome genome;
  double fitness = 0.0;
};

// One change of the running answer: the best word at the generation it took
// over. The last entry is the result designation of an anytime run.
struct BestEntry {
  std::uint64_t generation = 0;
  double fitness = 0.0;
  std::string word;  // flattened coding of the best genome

  friend bool operator==(const BestEntry&, const BestEntry&) = default;
};

struct GenMetrics {
  std::uint64_t generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  double diversity = 0.0;  // mean pairwise divergence over a 32-genome sample
  double stress = 0.0;
  double realized_mutation_rate = 0.0;  // applied edits per locus copied
  std::size_t sos_tiers_active = 0;
  double mutator_frequency = 0.0;
  std::size_t recombination_events = 0;
  Phase phase = Phase::inducible;
};

struct MemoryEntry {
  int variant = 0;
  epu::Genome genome;
  double fitness = 0.0;
};

// Stored adaptive solutions, one slot per solved environment variant,
// viewable as an epuon (nodes = stored epus, linked in storage order).
struct SolutionMemory {
  std::vector<MemoryEntry> entries;

  const MemoryEntry* lookup(int variant) const;
  // Keeps the best genome per variant; evicts the weakest entry over capacity.
  void store(int variant, const epu::Genome& g, double fitness, std::size_t capacity);
  epu::Epuon as_epuon() const;
};

// Full evolving-run state. Copyable, so runs can be forked mid-flight.
// Randomness is split into fixed streams (founding, reproduction, stress
// operators, environment) so the stress machinery draws nothing while
// repressed and the imitative stream stays untouched by it.
struct EngineState {
  explicit EngineState(const ExperimentConfig& config);

  ExperimentConfig cfg;
  Environment env;
  std::vector<Individual> population;
  std::uint64_t generation = 0;
  ops::SosState sos;
  ops::MrsState mrs;
  ops::LesionMap lesions;
  double stress = 0.0;
  Phase phase = Phase::inducible;
  std::vector<BestEntry> best_trace;
  SolutionMemory memory;
  // Per-epoch improvement log: when the best advanced, and which loci of the
  // running word changed. Feeds the contingency tags.
  std::vector<std::uint64_t> improvement_gens;
  std::vector<std::vector<std::size_t>> improvement_loci;
  std::vector<std::size_t> contingency;  // hypermutable loci while specializing
  epu::IdGenerator ids;
  Rng rng_repro;
  Rng rng_extras;
  Rng rng_env;
  GenMetrics last_metrics;  // row for the current generation
};

// Advances one generation through the imitative core alone: tournament
// selection, replication under the base policy (mutator carriers included),
// mismatch-repair filtering, elitism, and memory reinjection.
void c_ima_step(EngineState& s);

// The full engine generation: the imitative core plus the stress-gated layer
// (SOS update, lesion repair, translesion mutagenesis, gated recombination,
// contingency hypermutation, memory storing at switches).
void c_ina_step(EngineState& s);

// Dispatches on cfg.mode.
void engine_step(EngineState& s);

// Linear alarm: 0 at mean fitness >= target_fraction * optimum, 1 at zero
// mean fitness. Environment switches pin it to 1 for that generation.
double stress_signal(double mean_fitness, double optimum, double target_fraction);

struct AnytimeReport {
  std::vector<BestEntry> best_trace;
  BestEntry final;  // == best_trace.back()
  bool stabilized = false;
  std::uint64_t generations = 0;         // reproduction cycles executed == budget
  std::vector<GenMetrics> metrics;       // budget + 1 rows, generation 0 first
};

struct RunOutput {
  AnytimeReport report;
  EngineState state;
};

// Runs exactly cfg.budget generations (never stops early), reporting the last
// reached word. stabilized = the word outlived the final `window` generations.
RunOutput run_anytime(const ExperimentConfig& cfg);

}  // namespace evoc::engine
