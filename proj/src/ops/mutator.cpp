#include "evoc/ops/mutator.hpp"

#include <algorithm>

#include "evoc/errors.hpp"

namespace evoc::ops {

epu::RatePolicy with_mutator(epu::RatePolicy policy, const epu::LineageTags& tags,
                             double strength) {
  if (strength < 1.0) throw ValidationError("mutator strength must be at least 1");
  if (tags.mutator) policy.global_multiplier *= strength;
  return policy;
}

std::vector<epu::ProposedMutation> hypermutation_proposals(const epu::Genome& g,
                                                           std::vector<std::size_t> loci,
                                                           double rate, Rng& rng) {
  std::sort(loci.begin(), loci.end());
  loci.erase(std::unique(loci.begin(), loci.end()), loci.end());

  const std::size_t total = g.total_loci();
  std::vector<epu::ProposedMutation> out;
  if (g.alphabet.size() < 2) return out;
  for (std::size_t locus : loci) {
    if (locus >= total) continue;
    if (!chance(rng, rate)) continue;
    char cur = g.at(locus);
    char to = g.alphabet[pick_index(rng, g.alphabet.size() - 1)];
    if (to == cur) to = g.alphabet.back();
    out.push_back({locus, epu::MutationKind::substitution, to, true});
  }
  return out;
}

epu::Genome hypermutate(const epu::Genome& g, std::vector<std::size_t> loci, double rate,
                        Rng& rng, epu::IdGenerator& ids) {
  auto proposals = hypermutation_proposals(g, std::move(loci), rate, rng);
  return apply_mutations(g, proposals, ids);
}

}  // namespace evoc::ops
