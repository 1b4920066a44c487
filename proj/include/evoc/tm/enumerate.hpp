#pragma once

#include <cstdint>
#include <functional>

#include "evoc/tm/machine.hpp"
#include "evoc/util/rng.hpp"

namespace evoc::tm {

// Bounded machine family: 1 tape, states q0..q{S-1} (q0 start, no finals),
// alphabet `01...` with blank `0`. Every (state, symbol) cell independently
// holds either no transition (halt) or one of S*A*3 rules, so the family has
// (3*S*A + 1)^(S*A) members, visited in mixed-radix index order.
struct FamilySpec {
  int states = 2;
  int symbols = 2;
};

// Number of machines in the family. Throws ValidationError when the count
// does not fit in 64 bits.
std::uint64_t family_size(const FamilySpec& spec);

// Enumeration is refused above this row count.
inline constexpr std::uint64_t kEnumerationCap = 2000000;

MachineDescription family_machine(const FamilySpec& spec, std::uint64_t index);

void enumerate_family(const FamilySpec& spec,
                      const std::function<void(std::uint64_t, const MachineDescription&)>& visit);

struct RandomMachineParams {
  int min_states = 2;
  int max_states = 4;
  int symbols = 2;
  int tapes = 1;
  double transition_density = 0.85;
  bool with_final = true;  // dedicates the last state as a final state
};

// Seeded generator used by test corpora. With `tapes` >= 2 the generated
// transitions write back what they read on tape 0, so the machine is safe to
// use where the input tape must stay untouched.
MachineDescription random_machine(Rng& rng, const RandomMachineParams& params);

}  // namespace evoc::tm
