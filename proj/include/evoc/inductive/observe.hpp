#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "evoc/inductive/program.hpp"
#include "evoc/tm/executor.hpp"

namespace evoc::inductive {

struct TraceEntry {
  std::uint64_t step = 0;
  std::string word;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Output-word history: one entry per change, step indices strictly
// increasing, adjacent words distinct. Entry 0 is recorded when the run
// starts with a non-empty output word.
using OutputTrace = std::vector<TraceEntry>;

struct Observation {
  enum class Kind { stabilized, provisional, halted };

  Kind kind = Kind::provisional;
  std::string word;

  std::uint64_t last_change_step = 0;  // stabilized
  std::uint64_t observed_until = 0;    // stabilized
  std::uint64_t halt_step = 0;         // halted
  std::uint64_t budget = 0;            // provisional

  OutputTrace trace;
};

// Watches a run for up to `fuel` steps. A final state yields Halted; a word
// that has not changed during the final `window` steps yields Stabilized
// (this needs at least one recorded word, so a run that never produced an
// output word stays Provisional); anything else is Provisional with the full
// trace. Requires fuel >= window >= 1 (throws std::invalid_argument).
Observation run_observed(const InductiveMachine& machine, std::string_view input,
                         std::uint64_t fuel, std::uint64_t window);

// Classic-machine view of a tape-backed inductive machine with final states:
// identical to tm::run on the underlying description. Throws
// std::invalid_argument for host programs or an empty final-state set.
tm::RunResult reduce_to_recursive(const InductiveMachine& machine, std::string_view input,
                                  std::uint64_t fuel);

// One line per trace entry: "<step>\t<word>".
void dump_trace(std::ostream& out, const OutputTrace& trace);

const char* observation_kind_name(Observation::Kind kind);

}  // namespace evoc::inductive
