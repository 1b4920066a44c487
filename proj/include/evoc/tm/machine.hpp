#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evoc::tm {

enum class Move : std::uint8_t { left, right, stay };

char move_letter(Move m);

// One deterministic rule: in state `from`, reading `read[t]` under the head of
// tape t, write `write[t]`, move each head and switch to state `to`.
struct Transition {
  int from = 0;
  std::vector<std::uint8_t> read;
  int to = 0;
  std::vector<std::uint8_t> write;
  std::vector<Move> moves;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Deterministic multi-tape machine. States and symbols are referenced by
// index; `states` holds the printable state names and `alphabet` one
// character per symbol. Tape 0 carries the input, the last tape is the
// designated output tape (for a one-tape machine they coincide).
struct MachineDescription {
  std::vector<std::string> states;
  std::string alphabet;
  std::uint8_t blank = 0;  // index into alphabet
  int tapes = 1;
  int start_state = 0;
  std::vector<int> final_states;        // kept sorted
  std::vector<Transition> transitions;  // kept sorted by (from, read)

  int state_id(std::string_view name) const;
  int symbol_id(char c) const;
  bool is_final(int state) const;

  friend bool operator==(const MachineDescription&, const MachineDescription&) = default;
};

// Checks structural invariants and puts final states / transitions into
// canonical order. A machine rejected here is unusable everywhere else.
// Throws ValidationError; duplicate (state, read tuple) pairs are reported as
// nondeterminism.
void finalize_machine(MachineDescription& m);

}  // namespace evoc::tm
