#pragma once

#include <cstdint>
#include <vector>

#include "evoc/epu/genome.hpp"
#include "evoc/ops/mrs.hpp"
#include "evoc/ops/sos.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::ops {

// Whether two lineages at the given divergence may recombine: close relatives
// always pass the barrier; strangers pass only when mismatch surveillance is
// down while translesion synthesis is up (the barrier-breaking regime).
bool recombination_gate(const MrsState& mrs, const SosState& sos, double d);

struct RecombinationParams {
  std::size_t crossovers = 1;
  double hotspot_weight = 4.0;  // relative draw weight of a cut before a hotspot locus
};

// Crossover onto a recipient-a skeleton. Cut sites fall between loci of the
// overlap of the two flattened codings, weighted toward the recipient's
// hotspot loci; segments alternate between the parents starting from a random
// side. Donor segments bring their variation profile entries along. Loci past
// the overlap stay the recipient's. The child gets fresh ids.
//
// Throws ValidationError when the alphabets differ or crossovers is zero.
epu::Genome recombine(const epu::Genome& a, const epu::Genome& b,
                      const RecombinationParams& params, Rng& rng, epu::IdGenerator& ids);

}  // namespace evoc::ops
