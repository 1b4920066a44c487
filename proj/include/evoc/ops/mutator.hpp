#pragma once

#include <cstdint>
#include <vector>

#include "evoc/epu/genome.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::ops {

// Folds a mutator allele into the rate policy: carriers replicate with the
// global multiplier raised `strength`-fold. Genomes without the tag pass
// through unchanged. strength below 1 is rejected (the allele elevates, never
// suppresses).
epu::RatePolicy with_mutator(epu::RatePolicy policy, const epu::LineageTags& tags,
                             double strength);

// Localized hypermutation at contingency loci: each listed locus is hit with
// probability `rate`, drawing a substitution to a random different symbol.
// Loci beyond the genome's current length are skipped (indels move goalposts
// between generations). Returns the proposals; duplicates in `loci` are
// collapsed first.
std::vector<epu::ProposedMutation> hypermutation_proposals(const epu::Genome& g,
                                                           std::vector<std::size_t> loci,
                                                           double rate, Rng& rng);

epu::Genome hypermutate(const epu::Genome& g, std::vector<std::size_t> loci, double rate,
                        Rng& rng, epu::IdGenerator& ids);

}  // namespace evoc::ops
