#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "evoc/epu/epu.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::epu {

struct LineageTags {
  bool mutator = false;
  std::string species;

  friend bool operator==(const LineageTags&, const LineageTags&) = default;
};

// Ordered, non-empty sequence of epus plus lineage tags. Loci are addressed
// by flattened index across the concatenated coding sequences.
struct Genome {
  std::vector<Epu> epus;
  LineageTags tags;
  std::string alphabet = "01";

  std::size_t total_loci() const;
  char at(std::size_t locus) const;
  std::string flattened() const;

  friend bool operator==(const Genome&, const Genome&) = default;
};

// Throws ValidationError: empty genome, duplicate epu ids, coding symbols
// outside the genome alphabet, or an invalid epu.
void validate_genome(const Genome& g);

Genome make_genome(std::vector<Epu> epus, std::string alphabet = "01", LineageTags tags = {});

enum class MutationKind : std::uint8_t { substitution, insertion, deletion };

// One proposed edit at a flattened locus of the source genome. Insertions
// place `to` immediately after the locus. `mrs_exposed` marks proposals the
// mismatch-repair surveillance is allowed to veto.
struct ProposedMutation {
  std::size_t locus = 0;
  MutationKind kind = MutationKind::substitution;
  char to = 0;
  bool mrs_exposed = true;

  friend bool operator==(const ProposedMutation&, const ProposedMutation&) = default;
};

// Applies the edits to a fresh copy. All loci refer to the source genome; at
// most one proposal per locus. Copied epus get fresh ids (interaction links
// between epus of the same genome are remapped), variation profiles follow
// the edits: inserted loci get a neutral profile entry, deleted loci drop
// theirs. An epu emptied by deletions is removed (one empty unit is kept if
// nothing else remains). Lineage tags are inherited unchanged.
Genome apply_mutations(const Genome& g, std::span<const ProposedMutation> mutations,
                       IdGenerator& ids);

// Effective per-locus substitution probability is
//   clamp01(base_rate * global_multiplier * locus_multiplier + (1 - fidelity))
// where locus_multiplier comes from the owning epu's variation profile and
// fidelity from the owning epu. The additive term makes an imperfect copier
// leak errors even at rate 0.
struct RatePolicy {
  double base_rate = 0.0;
  double global_multiplier = 1.0;
};

double effective_rate(const RatePolicy& policy, const Epu& owner, std::size_t offset);

// Per-locus independent substitution draws; every proposal is MRS-exposed.
std::vector<ProposedMutation> replication_proposals(const Genome& g, const RatePolicy& policy,
                                                    Rng& rng);

// Copy with replication errors applied and fresh ids; the parent is never
// touched.
Genome replicate(const Genome& g, const RatePolicy& policy, Rng& rng, IdGenerator& ids);

// Pairwise divergence in [0, 1]: Hamming mismatches over the common prefix
// of the flattened codings plus the length difference, normalized by the
// longer length. Zero iff the codings are identical; symmetric.
double divergence(const Genome& a, const Genome& b);

}  // namespace evoc::epu
