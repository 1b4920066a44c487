#pragma once

#include "evoc/inductive/program.hpp"

namespace evoc::inductive {

// Nonlinear composition: `first` preprocesses the composite input and every
// change of its output word restarts `second` on the new word. The two parts
// are interleaved round-robin, one step each per composite step. `second` is
// only started once `first` has produced a non-empty word (so a first stage
// that never writes keeps the composite output empty forever). The composite
// output is `second`'s output word; the composite counts as halted once
// `first` can no longer change (final state or stuck) and `second` has
// entered a final state on the last word.
//
// Requires first's output alphabet to be contained in second's input
// alphabet (throws std::invalid_argument).
InductiveMachine compose(InductiveMachine first, InductiveMachine second);

}  // namespace evoc::inductive
