#include "evoc/epu/epu.hpp"

#include "evoc/errors.hpp"

namespace evoc::epu {

VariationProfile default_variation(std::size_t loci) {
  VariationProfile v;
  v.multipliers.assign(loci, 1.0);
  v.hotspots.assign(loci, 0);
  return v;
}

Epu make_epu(std::uint64_t id, const EpuDraft& draft) {
  if (!draft.coding) throw ValidationError("epu is missing its coding slot");
  if (!draft.regulator) throw ValidationError("epu is missing its regulator slot");
  if (!draft.replication_fidelity)
    throw ValidationError("epu is missing its replication-fidelity slot");
  if (!draft.interactions) throw ValidationError("epu is missing its interaction slot");
  if (!draft.variation) throw ValidationError("epu is missing its variation slot");

  Epu e;
  e.id = id;
  e.coding = *draft.coding;
  e.regulator = *draft.regulator;
  e.replication_fidelity = *draft.replication_fidelity;
  e.interactions = *draft.interactions;
  e.variation = *draft.variation;
  validate_epu(e);
  return e;
}

Epu make_default_epu(std::uint64_t id, std::string coding) {
  Epu e;
  e.id = id;
  e.variation = default_variation(coding.size());
  e.coding = std::move(coding);
  validate_epu(e);
  return e;
}

void validate_epu(const Epu& e) {
  if (e.replication_fidelity < 0.0 || e.replication_fidelity > 1.0)
    throw ValidationError("replication fidelity must lie in [0, 1]");
  if (e.regulator.threshold < 0.0 || e.regulator.threshold > 1.0)
    throw ValidationError("regulator threshold must lie in [0, 1]");
  if (e.variation.multipliers.size() != e.coding.size() ||
      e.variation.hotspots.size() != e.coding.size())
    throw ValidationError("variation profile length does not match the coding sequence");
  for (double m : e.variation.multipliers)
    if (m < 0.0) throw ValidationError("variation multipliers must be non-negative");
  for (std::uint8_t h : e.variation.hotspots)
    if (h > 1) throw ValidationError("hotspot flags must be 0 or 1");
}

}  // namespace evoc::epu
