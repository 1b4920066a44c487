#pragma once

#include <utility>

#include "evoc/tm/executor.hpp"
#include "evoc/tm/machine.hpp"

namespace evoc::inductive {

// Keeps a description and its compiled lookup alive together, so a run can
// outlive the machine value it was started from.
struct OwnedCompiled {
  tm::MachineDescription machine;
  tm::CompiledMachine compiled;

  explicit OwnedCompiled(tm::MachineDescription m)
      : machine(std::move(m)), compiled(machine) {}

  OwnedCompiled(const OwnedCompiled&) = delete;
  OwnedCompiled& operator=(const OwnedCompiled&) = delete;
};

}  // namespace evoc::inductive
