#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evoc/engine/config.hpp"
#include "evoc/epu/genome.hpp"

namespace evoc::engine {

// A fitness landscape plus its switch schedule. Deterministic: fitness depends
// only on (genome, variant). String benchmarks score one point per position of
// the target matched by the flattened coding (missing positions score nothing,
// surplus positions are ignored), so indel-shortened genomes pay for what they
// lost and length otherwise stays selectively neutral.
class Environment {
 public:
  Environment(EnvironmentConfig cfg);

  // Variant living at this generation. Non-switching benchmarks are always 0;
  // oscillation alternates 0/1 every switch_every generations, stopping after
  // the configured number of switches.
  int variant_at(std::uint64_t generation) const;
  bool is_switch(std::uint64_t generation) const;

  double fitness(const epu::Genome& g, int variant) const;
  double optimum(int variant) const;

  // Target word of a string benchmark variant (empty for ktrap/neutral).
  const std::string& target(int variant) const;

  const EnvironmentConfig& config() const { return cfg_; }
  // Generations at which the variant changes, strictly increasing.
  const std::vector<std::uint64_t>& schedule() const { return schedule_; }

 private:
  EnvironmentConfig cfg_;
  std::vector<std::uint64_t> schedule_;
  std::string target_a_;
  std::string target_b_;
};

}  // namespace evoc::engine
