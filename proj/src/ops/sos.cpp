#include "evoc/ops/sos.hpp"

#include <algorithm>

#include "evoc/errors.hpp"

namespace evoc::ops {

std::vector<SosTier> default_sos_tiers() {
  return {{kNerTier, 0.2}, {kTlsTier, 0.6}};
}

SosState make_sos(std::vector<SosTier> tiers) {
  double prev = 0.0;
  for (const SosTier& t : tiers) {
    if (t.name.empty()) throw ValidationError("sos tier with empty name");
    if (t.threshold <= 0.0 || t.threshold > 1.0) {
      throw ValidationError("sos tier '" + t.name + "' threshold must be in (0, 1]");
    }
    if (t.threshold <= prev) {
      throw ValidationError("sos tier thresholds must be strictly increasing");
    }
    prev = t.threshold;
  }
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    for (std::size_t j = i + 1; j < tiers.size(); ++j) {
      if (tiers[i].name == tiers[j].name) {
        throw ValidationError("duplicate sos tier name '" + tiers[i].name + "'");
      }
    }
  }
  SosState s;
  s.tiers = std::move(tiers);
  return s;
}

void sos_update(SosState& s, double stress) {
  s.stress = std::clamp(stress, 0.0, 1.0);
  s.lexa_pool = 1.0 - s.stress;
}

bool tier_active(const SosState& s, std::string_view name) {
  for (const SosTier& t : s.tiers) {
    if (t.name == name) return t.threshold <= s.stress;
  }
  return false;
}

std::size_t active_tier_count(const SosState& s) {
  std::size_t n = 0;
  for (const SosTier& t : s.tiers) {
    if (t.threshold <= s.stress) ++n;
  }
  return n;
}

std::vector<std::string> active_tiers(const SosState& s) {
  std::vector<std::string> out;
  for (const SosTier& t : s.tiers) {
    if (t.threshold <= s.stress) out.push_back(t.name);
  }
  return out;
}

}  // namespace evoc::ops
