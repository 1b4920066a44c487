#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "evoc/tm/executor.hpp"
#include "evoc/tm/machine.hpp"

namespace evoc::inductive {

enum class StepStatus : std::uint8_t {
  running,  // may still change its output
  halted,   // entered a final state; result is definitive
  stuck,    // no transition applies; output can no longer change
};

// One execution of an inductive machine. The observable surface is the
// output word plus a version counter that bumps exactly when the word
// changes; steps on a halted or stuck run are no-ops.
class InductiveRun {
 public:
  virtual ~InductiveRun() = default;

  virtual StepStatus step() = 0;
  virtual StepStatus status() const = 0;
  virtual const std::string& output_word() const = 0;
  virtual std::uint64_t output_version() const = 0;
};

// Immutable machine value. Tape-backed machines wrap a MachineDescription
// with the convention: tape 0 is the input tape (read-only once there is a
// separate one, i.e. tapes >= 2), the last tape is the observer-readable
// output tape. Host-implemented machines (halting monitors, compositions)
// share the same observable surface but have no underlying description.
class InductiveMachine {
 public:
  class Impl;

  std::unique_ptr<InductiveRun> start(std::string_view input) const;

  const std::string& input_alphabet() const;
  const std::string& output_alphabet() const;
  bool has_final_states() const;

  // Non-null only for tape-backed machines.
  const tm::MachineDescription* underlying() const;

  // Validates the read-only-input convention for multi-tape machines:
  // every transition must write back what it reads on tape 0.
  // Throws ValidationError otherwise.
  static InductiveMachine from_description(tm::MachineDescription m);

  explicit InductiveMachine(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

// Internal extension point shared by the tape, monitor and composite
// implementations.
class InductiveMachine::Impl {
 public:
  virtual ~Impl() = default;
  virtual std::unique_ptr<InductiveRun> start(std::string_view input) const = 0;
  virtual const std::string& input_alphabet() const = 0;
  virtual const std::string& output_alphabet() const = 0;
  virtual bool has_final_states() const = 0;
  virtual const tm::MachineDescription* underlying() const { return nullptr; }
};

}  // namespace evoc::inductive
