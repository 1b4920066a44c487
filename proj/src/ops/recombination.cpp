#include "evoc/ops/recombination.hpp"

#include <algorithm>
#include <utility>

#include "evoc/errors.hpp"

namespace evoc::ops {
namespace {

struct FlatView {
  std::string coding;
  std::vector<double> multipliers;
  std::vector<std::uint8_t> hotspots;
};

FlatView flatten(const epu::Genome& g) {
  FlatView v;
  for (const epu::Epu& e : g.epus) {
    v.coding += e.coding;
    v.multipliers.insert(v.multipliers.end(), e.variation.multipliers.begin(),
                         e.variation.multipliers.end());
    v.hotspots.insert(v.hotspots.end(), e.variation.hotspots.begin(),
                      e.variation.hotspots.end());
  }
  return v;
}

// Weighted draws without replacement from the interior cut sites 1..overlap-1.
std::vector<std::size_t> draw_cut_sites(const FlatView& recipient, std::size_t overlap,
                                        std::size_t count, double hotspot_weight, Rng& rng) {
  std::vector<std::size_t> sites;
  std::vector<double> weights;
  for (std::size_t s = 1; s < overlap; ++s) {
    sites.push_back(s);
    weights.push_back(recipient.hotspots[s] != 0 ? hotspot_weight : 1.0);
  }
  std::vector<std::size_t> chosen;
  while (chosen.size() < count && !sites.empty()) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform01(rng) * total;
    std::size_t pick = sites.size() - 1;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      x -= weights[i];
      if (x < 0.0) {
        pick = i;
        break;
      }
    }
    chosen.push_back(sites[pick]);
    sites.erase(sites.begin() + static_cast<std::ptrdiff_t>(pick));
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

bool recombination_gate(const MrsState& mrs, const SosState& sos, double d) {
  if (d <= mrs.barrier_threshold) return true;
  return !mrs.enabled && tier_active(sos, kTlsTier);
}

epu::Genome recombine(const epu::Genome& a, const epu::Genome& b,
                      const RecombinationParams& params, Rng& rng, epu::IdGenerator& ids) {
  if (a.alphabet != b.alphabet) {
    throw ValidationError("recombination between genomes with different alphabets");
  }
  if (params.crossovers == 0) throw ValidationError("recombination needs at least one crossover");
  if (params.hotspot_weight <= 0.0) {
    throw ValidationError("recombination hotspot_weight must be positive");
  }

  epu::Genome child = epu::apply_mutations(a, {}, ids);  // fresh-id copy of the recipient
  const std::size_t overlap = std::min(a.total_loci(), b.total_loci());
  if (overlap < 2) return child;  // no interior cut site, nothing to exchange

  const FlatView fa = flatten(a);
  const FlatView fb = flatten(b);
  const std::size_t count = std::min(params.crossovers, overlap - 1);
  const std::vector<std::size_t> cuts =
      draw_cut_sites(fa, overlap, count, params.hotspot_weight, rng);
  const bool donor_first = chance(rng, 0.5);

  // Segment index at a locus = number of cuts at or before it; the donor owns
  // alternating segments.
  std::size_t locus = 0;
  std::size_t cuts_passed = 0;
  for (epu::Epu& e : child.epus) {
    for (std::size_t off = 0; off < e.coding.size(); ++off, ++locus) {
      if (locus >= overlap) break;
      while (cuts_passed < cuts.size() && cuts[cuts_passed] <= locus) ++cuts_passed;
      const bool from_donor = ((cuts_passed % 2 == 0) == donor_first);
      if (!from_donor) continue;
      e.coding[off] = fb.coding[locus];
      e.variation.multipliers[off] = fb.multipliers[locus];
      e.variation.hotspots[off] = fb.hotspots[locus];
    }
  }
  epu::validate_genome(child);
  return child;
}

}  // namespace evoc::ops
