#pragma once

#include <cstdint>
#include <string>

namespace evoc::engine {

// Which adaptation subsystem drives a run: the imitative core alone, or the
// full stress-driven engine layered on top of it.
enum class Mode { c_ima, c_ina };

struct GenomeConfig {
  std::string alphabet = "01";
  std::string init = "random";  // founding codings: "random" or "zeros" (all first-symbol)
  double mutator_fraction = 0.0;  // share of the founding population carrying the mutator tag
  std::string species = "base";
};

struct RatesConfig {
  double base_rate = 0.00390625;  // 1/256 per locus per replication
  double mutator_strength = 10.0;
  double replication_fidelity = 1.0;
};

struct SelectionConfig {
  std::size_t tournament = 2;
  std::size_t elitism = 1;
};

struct SosConfig {
  double ner_threshold = 0.2;
  double tls_threshold = 0.6;
  double targeted_multiplier = 10.0;
  double untargeted_multiplier = 50.0;
  double ner_repair = 0.25;  // per-lesion repair probability per generation
};

struct MrsConfig {
  bool enabled = true;
  double p_repair = 0.2;
  double barrier_threshold = 0.10;
};

struct RecombinationConfig {
  bool enabled = true;
  double rate = 0.2;  // attempts per generation = floor(stress * rate * population)
  std::size_t crossovers = 1;
  double hotspot_weight = 4.0;
};

struct HypermutationConfig {
  bool enabled = true;
  double rate = 0.05;  // per contingency locus per offspring
};

struct MemoryConfig {
  bool enabled = true;
  std::size_t capacity = 16;
};

enum class Benchmark { onemax, oscillation, ktrap, neutral };

struct EnvironmentConfig {
  Benchmark benchmark = Benchmark::onemax;
  std::size_t loci = 64;
  std::size_t differing = 64;        // oscillation: loci flipped between the two targets
  std::uint64_t switch_every = 200;  // oscillation only
  std::size_t switches = 0;
  double lesion_rate = 0.1;  // per-locus lesion probability at a switch
};

struct StressConfig {
  double target_fraction = 0.95;  // mean fitness at this share of the optimum reads as no stress
};

struct PhaseConfig {
  std::uint64_t improvement_window = 50;
  std::size_t improvements_to_specialize = 2;
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::uint64_t budget = 500;
  std::uint64_t window = 100;
  std::size_t population = 200;
  Mode mode = Mode::c_ina;
  GenomeConfig genome;
  RatesConfig rates;
  SelectionConfig selection;
  SosConfig sos;
  MrsConfig mrs;
  RecombinationConfig recombination;
  HypermutationConfig hypermutation;
  MemoryConfig memory;
  EnvironmentConfig environment;
  StressConfig stress;
  PhaseConfig phase;
};

// Parses a JSON config document. Every key is optional (defaults above);
// unknown keys and out-of-range values are rejected with their key path.
ExperimentConfig load_config_text(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

// Range checks shared by the loader and programmatic construction.
void validate_config(const ExperimentConfig& c);

const char* mode_name(Mode m);
const char* benchmark_name(Benchmark b);

}  // namespace evoc::engine
