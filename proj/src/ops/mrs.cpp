#include "evoc/ops/mrs.hpp"

#include <algorithm>

#include "evoc/errors.hpp"

namespace evoc::ops {

void validate_mrs(const MrsState& m) {
  if (m.p_repair < 0.0 || m.p_repair > 1.0) {
    throw ValidationError("mrs p_repair must be in [0, 1]");
  }
  if (m.barrier_threshold < 0.0 || m.barrier_threshold > 1.0) {
    throw ValidationError("mrs barrier_threshold must be in [0, 1]");
  }
  for (const ShortPatchRule& r : m.short_patch) {
    if (r.p_repair < 0.0 || r.p_repair > 1.0) {
      throw ValidationError("mrs short-patch p_repair must be in [0, 1]");
    }
  }
}

std::size_t mrs_filter(const MrsState& m, std::vector<epu::ProposedMutation>& proposals,
                       Rng& rng) {
  if (!m.enabled || proposals.empty()) return 0;
  std::vector<epu::ProposedMutation> kept;
  kept.reserve(proposals.size());
  std::size_t repaired = 0;
  for (const epu::ProposedMutation& p : proposals) {
    if (!p.mrs_exposed) {
      kept.push_back(p);
      continue;
    }
    double prob = m.p_repair;
    for (const ShortPatchRule& r : m.short_patch) {
      if (r.locus == p.locus) {
        prob = r.p_repair;
        break;
      }
    }
    if (chance(rng, prob)) {
      ++repaired;
    } else {
      kept.push_back(p);
    }
  }
  proposals = std::move(kept);
  return repaired;
}

}  // namespace evoc::ops
