#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evoc/tm/machine.hpp"

namespace evoc::tm {

// Bi-infinite tape. Only touched cells are stored; everything else reads as
// the blank symbol. Cells are addressed by signed position, head starts at 0.
class Tape {
 public:
  Tape() = default;
  explicit Tape(std::uint8_t blank) : blank_(blank) {}

  std::uint8_t blank() const { return blank_; }

  std::uint8_t read(std::int64_t pos) const {
    if (pos >= 0)
      return pos < static_cast<std::int64_t>(right_.size())
                 ? right_[static_cast<std::size_t>(pos)]
                 : blank_;
    std::size_t i = static_cast<std::size_t>(-(pos + 1));
    return i < left_.size() ? left_[i] : blank_;
  }

  void write(std::int64_t pos, std::uint8_t sym) {
    if (pos >= 0) {
      auto p = static_cast<std::size_t>(pos);
      if (p >= right_.size()) {
        if (sym == blank_) return;
        right_.resize(p + 1, blank_);
      }
      right_[p] = sym;
    } else {
      std::size_t i = static_cast<std::size_t>(-(pos + 1));
      if (i >= left_.size()) {
        if (sym == blank_) return;
        left_.resize(i + 1, blank_);
      }
      left_[i] = sym;
    }
  }

  std::uint8_t read_head() const { return read(head); }

  // Span [lo, hi] of non-blank cells; nullopt when the tape is all blank.
  std::optional<std::pair<std::int64_t, std::int64_t>> nonblank_span() const;

  // Cell contents from the leftmost to the rightmost non-blank cell, rendered
  // through the given alphabet. Interior blanks are part of the word.
  std::string word(const std::string& alphabet) const;

  // Content equality: same head position and the same symbol in every cell.
  bool same_content(const Tape& other) const;

  std::int64_t head = 0;

 private:
  std::vector<std::uint8_t> right_;  // cells 0, 1, 2, ...
  std::vector<std::uint8_t> left_;   // cells -1, -2, ...
  std::uint8_t blank_ = 0;
};

struct Configuration {
  int state = 0;
  std::uint64_t step_count = 0;
  std::vector<Tape> tapes;

  bool same_content(const Configuration& other) const;
};

struct StepOutcome {
  enum class Kind { continued, halted };
  Kind kind;
  Configuration config;
};

struct RunResult {
  enum class Kind { halted, fuel_exhausted };
  Kind kind = Kind::halted;
  std::string output;        // meaningful when halted
  std::uint64_t steps = 0;   // total steps executed
  bool in_final = false;     // halted by entering a final state
  Configuration config;      // final or resumable configuration
};

// Transition lookup bound to one machine; build once, step many times.
class CompiledMachine {
 public:
  explicit CompiledMachine(const MachineDescription& m);

  const MachineDescription& description() const { return *m_; }

  enum class Status : std::uint8_t { running, in_final, stuck };

  // Final state and missing transition both halt; halting is absorbing.
  Status probe(const Configuration& c) const {
    if (final_mask_[static_cast<std::size_t>(c.state)]) return Status::in_final;
    return transition_at(c) < 0 ? Status::stuck : Status::running;
  }

  // Applies the unique matching transition. Precondition: probe == running.
  void advance(Configuration& c) const;

  int transition_at(const Configuration& c) const;

 private:
  const MachineDescription* m_;
  std::vector<std::int32_t> dense_;
  std::unordered_map<std::uint64_t, std::int32_t> sparse_;
  std::vector<std::uint8_t> final_mask_;
  std::uint64_t combos_ = 1;
  bool use_dense_ = false;

  std::uint64_t key(const Configuration& c) const;
};

// Input is written on tape 0 starting at cell 0; all heads start at cell 0.
// Throws ValidationError when the input uses a symbol outside the alphabet.
Configuration initial_configuration(const MachineDescription& m, std::string_view input);

// Single-step semantics: halted iff the state is final or no transition
// matches; otherwise exactly one transition is applied.
StepOutcome step(const MachineDescription& m, Configuration config);

// Runs for at most `fuel` steps. A halt that coincides with fuel exhaustion
// is still reported as a halt.
RunResult run(const MachineDescription& m, std::string_view input, std::uint64_t fuel);

// Continues a run for at most `fuel` additional steps.
RunResult resume(const MachineDescription& m, Configuration config, std::uint64_t fuel);

RunResult run_compiled(const CompiledMachine& cm, Configuration config, std::uint64_t fuel);

// Contents of the designated output tape (the last tape).
std::string output_word(const MachineDescription& m, const Configuration& c);

}  // namespace evoc::tm
