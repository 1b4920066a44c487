#pragma once

#include <cstdint>
#include <vector>

#include "evoc/epu/genome.hpp"
#include "evoc/ops/sos.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::ops {

// Flattened loci currently carrying unrepaired damage, kept sorted unique.
using LesionMap = std::vector<std::size_t>;

void add_lesion(LesionMap& lesions, std::size_t locus);

// Each undamaged locus independently picks up a lesion with probability
// `rate`. One draw per locus, in locus order.
void seed_lesions(LesionMap& lesions, std::size_t total_loci, double rate, Rng& rng);

// Excision repair: when the ner tier is active, each lesion is removed with
// probability `p_repair` (one draw per lesion, ascending order). Returns the
// number repaired; inactive tier repairs nothing and consumes no randomness.
std::size_t ner_repair(LesionMap& lesions, const SosState& sos, double p_repair, Rng& rng);

// Translesion synthesis: error-prone bypass mutagenesis, only available while
// the tls tier is active (throws ValidationError otherwise).
//
// Targeted mode works lesion loci only, at base_rate scaled by the targeted
// multiplier; drawn edits split 0.8 substitution / 0.1 insertion / 0.1
// deletion and are not exposed to mismatch repair. Untargeted mode sweeps
// every locus at base_rate scaled by the untargeted multiplier; edits split
// 0.3 / 0.35 / 0.35 and stay exposed. Targeted mode with no lesions is an
// error; loci past the end of the genome are skipped.
std::vector<epu::ProposedMutation> tls_proposals(const epu::Genome& g, const LesionMap& lesions,
                                                 const SosState& sos, double base_rate,
                                                 bool targeted, Rng& rng);

// tls_proposals applied to a fresh copy.
epu::Genome tls_mutate(const epu::Genome& g, const LesionMap& lesions, const SosState& sos,
                       double base_rate, bool targeted, Rng& rng, epu::IdGenerator& ids);

}  // namespace evoc::ops
