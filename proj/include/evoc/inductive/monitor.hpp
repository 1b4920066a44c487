#pragma once

#include <string_view>

#include "evoc/inductive/program.hpp"
#include "evoc/tm/codec.hpp"

namespace evoc::inductive {

// Halting monitor. The returned machine simulates one step of the decoded
// target (running on input `u`) per observation step and maintains a
// one-symbol output word:
//
//   "0"  while the simulated target has not halted,
//   "1"  from the target's halting step onward (never changes back).
//
// The initial word is written at step 0, so a target that halts after h
// steps makes the monitor's word "1" no later than step h: fuel >= h + window
// suffices for run_observed to report Stabilized{"1"} (the completeness
// constant is 1). "Halts" covers both a final state and a missing
// transition. The monitor itself has no final states and ignores its own
// input tape. Throws DecodeError on a malformed code word and
// ValidationError when `u` uses symbols outside the target's alphabet.
InductiveMachine make_sos_monitor(const tm::CodeWord& target, std::string_view u);

}  // namespace evoc::inductive
