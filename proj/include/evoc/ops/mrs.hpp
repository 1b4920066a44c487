#pragma once

#include <cstdint>
#include <vector>

#include "evoc/epu/genome.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::ops {

// Locus-specific repair efficiency override (short-patch pathway).
struct ShortPatchRule {
  std::size_t locus = 0;
  double p_repair = 1.0;
};

// Mismatch-repair surveillance. Vetoes exposed replication errors and, via
// the divergence barrier, blocks recombination between strangers.
struct MrsState {
  bool enabled = true;
  double p_repair = 0.2;
  std::vector<ShortPatchRule> short_patch;
  double barrier_threshold = 0.10;
};

// Throws ValidationError on probabilities or thresholds outside [0, 1].
void validate_mrs(const MrsState& m);

// Removes each exposed proposal with its repair probability (the short-patch
// override when present, the baseline otherwise). Unexposed proposals pass
// untouched and consume no randomness; a disabled state passes everything.
// Returns the number of proposals repaired away.
std::size_t mrs_filter(const MrsState& m, std::vector<epu::ProposedMutation>& proposals, Rng& rng);

}  // namespace evoc::ops
