#include "evoc/engine/environment.hpp"

#include <algorithm>

#include "evoc/errors.hpp"

namespace evoc::engine {
namespace {

// Deceptive 3-locus trap over loci 0..2: all-ones pays 8, and every step away
// from all-zeros before that pays worse than staying put.
constexpr double kTrapValue[4] = {2.0, 1.0, 0.0, 8.0};

double match_score(const epu::Genome& g, const std::string& target) {
  double score = 0.0;
  std::size_t i = 0;
  for (const epu::Epu& e : g.epus) {
    for (char ch : e.coding) {
      if (i >= target.size()) return score;
      if (ch == target[i]) score += 1.0;
      ++i;
    }
  }
  return score;
}

}  // namespace

Environment::Environment(EnvironmentConfig cfg) : cfg_(cfg) {
  target_a_.assign(cfg_.loci, '0');
  if (cfg_.benchmark == Benchmark::onemax) {
    target_a_.assign(cfg_.loci, '1');
  }
  target_b_ = target_a_;
  if (cfg_.benchmark == Benchmark::oscillation) {
    for (std::size_t i = cfg_.loci - cfg_.differing; i < cfg_.loci; ++i) target_b_[i] = '1';
  }
  for (std::size_t s = 1; s <= cfg_.switches; ++s) {
    schedule_.push_back(static_cast<std::uint64_t>(s) * cfg_.switch_every);
  }
}

int Environment::variant_at(std::uint64_t generation) const {
  std::size_t passed = 0;
  for (std::uint64_t g : schedule_) {
    if (generation >= g) ++passed;
  }
  return static_cast<int>(passed % 2);
}

bool Environment::is_switch(std::uint64_t generation) const {
  return std::find(schedule_.begin(), schedule_.end(), generation) != schedule_.end();
}

double Environment::fitness(const epu::Genome& g, int variant) const {
  switch (cfg_.benchmark) {
    case Benchmark::onemax:
    case Benchmark::oscillation:
      return match_score(g, target(variant));
    case Benchmark::ktrap: {
      int ones = 0;
      std::size_t seen = 0;
      for (const epu::Epu& e : g.epus) {
        for (char ch : e.coding) {
          if (seen >= 3) break;
          if (ch == '1') ++ones;
          ++seen;
        }
        if (seen >= 3) break;
      }
      return kTrapValue[ones];
    }
    case Benchmark::neutral:
      return 1.0;
  }
  return 0.0;
}

double Environment::optimum(int) const {
  switch (cfg_.benchmark) {
    case Benchmark::onemax:
    case Benchmark::oscillation:
      return static_cast<double>(cfg_.loci);
    case Benchmark::ktrap:
      return kTrapValue[3];
    case Benchmark::neutral:
      return 1.0;
  }
  return 0.0;
}

const std::string& Environment::target(int variant) const {
  return variant == 0 ? target_a_ : target_b_;
}

}  // namespace evoc::engine
