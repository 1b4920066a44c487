#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evoc::epu {

// Monotone source of fresh epu ids; one per run keeps ids reproducible.
class IdGenerator {
 public:
  explicit IdGenerator(std::uint64_t first = 1) : next_(first) {}
  std::uint64_t fresh() { return next_++; }

 private:
  std::uint64_t next_;
};

// Expression control: the epu responds to `signal` once it reaches
// `threshold`.
struct Regulator {
  std::string signal = "stress";
  double threshold = 0.0;

  friend bool operator==(const Regulator&, const Regulator&) = default;
};

struct Interaction {
  std::uint64_t target = 0;  // id of the epu this one links to
  double affinity = 1.0;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

// Per-locus variation control, index-aligned with the coding sequence.
struct VariationProfile {
  std::vector<double> multipliers;    // >= 0, scales the local mutation rate
  std::vector<std::uint8_t> hotspots; // 0/1, biases crossover placement

  friend bool operator==(const VariationProfile&, const VariationProfile&) = default;
};

VariationProfile default_variation(std::size_t loci);

// Evolvability processing unit: the four slots are a coding sequence with
// its regulator, a replication fidelity, interaction links, and a variation
// profile. Construct through make_epu so a unit missing any slot is rejected.
struct Epu {
  std::uint64_t id = 0;
  std::string coding;
  Regulator regulator;
  double replication_fidelity = 1.0;
  std::vector<Interaction> interactions;
  VariationProfile variation;

  friend bool operator==(const Epu&, const Epu&) = default;
};

// All four slots must be supplied explicitly; partial drafts are invalid.
struct EpuDraft {
  std::optional<std::string> coding;
  std::optional<Regulator> regulator;
  std::optional<double> replication_fidelity;
  std::optional<std::vector<Interaction>> interactions;
  std::optional<VariationProfile> variation;
};

// Throws ValidationError on a missing slot, fidelity outside [0,1], negative
// multipliers, or a variation profile whose length differs from the coding.
Epu make_epu(std::uint64_t id, const EpuDraft& draft);

// Complete epu with neutral defaults for everything but the coding.
Epu make_default_epu(std::uint64_t id, std::string coding);

void validate_epu(const Epu& e);

}  // namespace evoc::epu
