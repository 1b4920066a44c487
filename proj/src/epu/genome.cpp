#include "evoc/epu/genome.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "evoc/errors.hpp"

namespace evoc::epu {

std::size_t Genome::total_loci() const {
  std::size_t n = 0;
  for (const Epu& e : epus) n += e.coding.size();
  return n;
}

char Genome::at(std::size_t locus) const {
  for (const Epu& e : epus) {
    if (locus < e.coding.size()) return e.coding[locus];
    locus -= e.coding.size();
  }
  throw ValidationError("locus out of range");
}

std::string Genome::flattened() const {
  std::string out;
  out.reserve(total_loci());
  for (const Epu& e : epus) out += e.coding;
  return out;
}

void validate_genome(const Genome& g) {
  if (g.epus.empty()) throw ValidationError("genome must contain at least one epu");
  if (g.alphabet.empty()) throw ValidationError("genome alphabet is empty");
  std::set<std::uint64_t> ids;
  for (const Epu& e : g.epus) {
    validate_epu(e);
    if (!ids.insert(e.id).second) throw ValidationError("duplicate epu id in genome");
    for (char c : e.coding)
      if (g.alphabet.find(c) == std::string::npos)
        throw ValidationError(std::string("coding symbol '") + c +
                              "' is outside the genome alphabet");
  }
}

Genome make_genome(std::vector<Epu> epus, std::string alphabet, LineageTags tags) {
  Genome g;
  g.epus = std::move(epus);
  g.alphabet = std::move(alphabet);
  g.tags = std::move(tags);
  validate_genome(g);
  return g;
}

Genome apply_mutations(const Genome& g, std::span<const ProposedMutation> mutations,
                       IdGenerator& ids) {
  Genome out = g;

  // Fresh identity for the copy, with intra-genome links following along.
  std::map<std::uint64_t, std::uint64_t> remap;
  for (Epu& e : out.epus) {
    std::uint64_t fresh = ids.fresh();
    remap[e.id] = fresh;
    e.id = fresh;
  }
  for (Epu& e : out.epus)
    for (Interaction& link : e.interactions)
      if (auto it = remap.find(link.target); it != remap.end()) link.target = it->second;

  if (mutations.empty()) return out;

  std::vector<ProposedMutation> sorted(mutations.begin(), mutations.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ProposedMutation& a, const ProposedMutation& b) { return a.locus > b.locus; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].locus == sorted[i - 1].locus)
      throw ValidationError("two mutations proposed for the same locus");

  std::size_t total = g.total_loci();
  // Applying in descending locus order keeps source coordinates valid under
  // indels.
  for (const ProposedMutation& m : sorted) {
    if (m.locus >= total) throw ValidationError("mutation locus out of range");
    std::size_t offset = m.locus;
    std::size_t which = 0;
    while (offset >= out.epus[which].coding.size()) {
      offset -= out.epus[which].coding.size();
      ++which;
    }
    Epu& e = out.epus[which];
    switch (m.kind) {
      case MutationKind::substitution:
        e.coding[offset] = m.to;
        break;
      case MutationKind::insertion:
        e.coding.insert(e.coding.begin() + static_cast<std::ptrdiff_t>(offset) + 1, m.to);
        e.variation.multipliers.insert(
            e.variation.multipliers.begin() + static_cast<std::ptrdiff_t>(offset) + 1, 1.0);
        e.variation.hotspots.insert(
            e.variation.hotspots.begin() + static_cast<std::ptrdiff_t>(offset) + 1, 0);
        break;
      case MutationKind::deletion:
        e.coding.erase(e.coding.begin() + static_cast<std::ptrdiff_t>(offset));
        e.variation.multipliers.erase(e.variation.multipliers.begin() +
                                      static_cast<std::ptrdiff_t>(offset));
        e.variation.hotspots.erase(e.variation.hotspots.begin() +
                                   static_cast<std::ptrdiff_t>(offset));
        break;
    }
  }
  // Units emptied by deletions disappear. If everything was deleted the
  // genome keeps a single empty unit so it stays structurally valid.
  if (std::any_of(out.epus.begin(), out.epus.end(),
                  [](const Epu& e) { return e.coding.empty(); })) {
    Epu spare = *std::find_if(out.epus.begin(), out.epus.end(),
                              [](const Epu& e) { return e.coding.empty(); });
    std::erase_if(out.epus, [](const Epu& e) { return e.coding.empty(); });
    if (out.epus.empty()) out.epus.push_back(std::move(spare));
  }
  validate_genome(out);
  return out;
}

double effective_rate(const RatePolicy& policy, const Epu& owner, std::size_t offset) {
  double r = policy.base_rate * policy.global_multiplier * owner.variation.multipliers[offset] +
             (1.0 - owner.replication_fidelity);
  return std::clamp(r, 0.0, 1.0);
}

std::vector<ProposedMutation> replication_proposals(const Genome& g, const RatePolicy& policy,
                                                    Rng& rng) {
  std::vector<ProposedMutation> out;
  if (g.alphabet.size() < 2) return out;  // nothing to substitute to
  std::size_t locus = 0;
  for (const Epu& e : g.epus) {
    for (std::size_t off = 0; off < e.coding.size(); ++off, ++locus) {
      if (!chance(rng, effective_rate(policy, e, off))) continue;
      // Uniform over the other symbols.
      std::size_t alt = pick_index(rng, g.alphabet.size() - 1);
      char cur = e.coding[off];
      char to = g.alphabet[alt];
      if (to == cur) to = g.alphabet.back();
      out.push_back({locus, MutationKind::substitution, to, true});
    }
  }
  return out;
}

Genome replicate(const Genome& g, const RatePolicy& policy, Rng& rng, IdGenerator& ids) {
  auto proposals = replication_proposals(g, policy, rng);
  return apply_mutations(g, proposals, ids);
}

double divergence(const Genome& a, const Genome& b) {
  std::string fa = a.flattened();
  std::string fb = b.flattened();
  std::size_t la = fa.size(), lb = fb.size();
  std::size_t longer = std::max(la, lb);
  if (longer == 0) return 0.0;
  std::size_t common = std::min(la, lb);
  std::size_t mismatches = longer - common;
  for (std::size_t i = 0; i < common; ++i)
    if (fa[i] != fb[i]) ++mismatches;
  return static_cast<double>(mismatches) / static_cast<double>(longer);
}

}  // namespace evoc::epu
