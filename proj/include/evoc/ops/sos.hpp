#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evoc::ops {

inline constexpr const char* kNerTier = "ner";
inline constexpr const char* kTlsTier = "tls";

// One rung of the stress-response ladder: the tier is expressed once the
// stress signal reaches its threshold.
struct SosTier {
  std::string name;
  double threshold = 0.0;
};

// Graded stress response. The repressor pool drains linearly with stress, so
// tiers with low thresholds come up first and higher tiers join them without
// switching the lower ones off (activation is nested by construction).
struct SosState {
  double stress = 0.0;
  double lexa_pool = 1.0;  // 1 - stress
  std::vector<SosTier> tiers;
  double targeted_multiplier = 10.0;    // error-prone repair at flagged loci
  double untargeted_multiplier = 50.0;  // genome-wide error-prone replication
};

std::vector<SosTier> default_sos_tiers();  // ner at 0.2, tls at 0.6

// Throws ValidationError unless thresholds are in (0, 1], strictly
// increasing, with unique non-empty names.
SosState make_sos(std::vector<SosTier> tiers = default_sos_tiers());

// Clamps stress to [0, 1] and refreshes the repressor pool.
void sos_update(SosState& s, double stress);

bool tier_active(const SosState& s, std::string_view name);
std::size_t active_tier_count(const SosState& s);
std::vector<std::string> active_tiers(const SosState& s);

}  // namespace evoc::ops
