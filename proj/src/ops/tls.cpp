#include "evoc/ops/tls.hpp"

#include <algorithm>

#include "evoc/errors.hpp"

namespace evoc::ops {
namespace {

// Kind split for one drawn edit: (substitution cut, substitution+insertion cut).
struct KindSplit {
  double sub;
  double sub_ins;
};

constexpr KindSplit kTargetedSplit{0.8, 0.9};
constexpr KindSplit kUntargetedSplit{0.3, 0.65};

char substitution_target(const std::string& alphabet, char cur, Rng& rng) {
  char to = alphabet[pick_index(rng, alphabet.size() - 1)];
  if (to == cur) to = alphabet.back();
  return to;
}

}  // namespace

void add_lesion(LesionMap& lesions, std::size_t locus) {
  auto it = std::lower_bound(lesions.begin(), lesions.end(), locus);
  if (it != lesions.end() && *it == locus) return;
  lesions.insert(it, locus);
}

void seed_lesions(LesionMap& lesions, std::size_t total_loci, double rate, Rng& rng) {
  LesionMap fresh;
  auto damaged = lesions.begin();
  for (std::size_t locus = 0; locus < total_loci; ++locus) {
    while (damaged != lesions.end() && *damaged < locus) ++damaged;
    if (damaged != lesions.end() && *damaged == locus) continue;  // already carries one
    if (chance(rng, rate)) fresh.push_back(locus);
  }
  for (std::size_t locus : fresh) add_lesion(lesions, locus);
}

std::size_t ner_repair(LesionMap& lesions, const SosState& sos, double p_repair, Rng& rng) {
  if (!tier_active(sos, kNerTier) || lesions.empty()) return 0;
  LesionMap kept;
  kept.reserve(lesions.size());
  std::size_t repaired = 0;
  for (std::size_t locus : lesions) {
    if (chance(rng, p_repair)) {
      ++repaired;
    } else {
      kept.push_back(locus);
    }
  }
  lesions = std::move(kept);
  return repaired;
}

std::vector<epu::ProposedMutation> tls_proposals(const epu::Genome& g, const LesionMap& lesions,
                                                 const SosState& sos, double base_rate,
                                                 bool targeted, Rng& rng) {
  if (!tier_active(sos, kTlsTier)) {
    throw ValidationError("tls requested while the tls tier is inactive");
  }
  if (targeted && lesions.empty()) {
    throw ValidationError("targeted tls requested with no lesions");
  }
  const double multiplier = targeted ? sos.targeted_multiplier : sos.untargeted_multiplier;
  const double rate = std::clamp(base_rate * multiplier, 0.0, 1.0);
  const KindSplit split = targeted ? kTargetedSplit : kUntargetedSplit;
  const std::size_t total = g.total_loci();
  const bool exposed = !targeted;

  std::vector<epu::ProposedMutation> out;
  auto consider = [&](std::size_t locus) {
    if (!chance(rng, rate)) return;
    const double u = uniform01(rng);
    if (u < split.sub) {
      if (g.alphabet.size() < 2) return;  // no distinct symbol to switch to
      char to = substitution_target(g.alphabet, g.at(locus), rng);
      out.push_back({locus, epu::MutationKind::substitution, to, exposed});
    } else if (u < split.sub_ins) {
      char to = g.alphabet[pick_index(rng, g.alphabet.size())];
      out.push_back({locus, epu::MutationKind::insertion, to, exposed});
    } else {
      out.push_back({locus, epu::MutationKind::deletion, 0, exposed});
    }
  };

  if (targeted) {
    for (std::size_t locus : lesions) {
      if (locus >= total) continue;  // stale damage past the current length
      consider(locus);
    }
  } else {
    for (std::size_t locus = 0; locus < total; ++locus) consider(locus);
  }
  return out;
}

epu::Genome tls_mutate(const epu::Genome& g, const LesionMap& lesions, const SosState& sos,
                       double base_rate, bool targeted, Rng& rng, epu::IdGenerator& ids) {
  auto proposals = tls_proposals(g, lesions, sos, base_rate, targeted, rng);
  return apply_mutations(g, proposals, ids);
}

}  // namespace evoc::ops
