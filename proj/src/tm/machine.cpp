#include "evoc/tm/machine.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "evoc/errors.hpp"

namespace evoc::tm {

char move_letter(Move m) {
  switch (m) {
    case Move::left: return 'L';
    case Move::right: return 'R';
    case Move::stay: return 'S';
  }
  return '?';
}

int MachineDescription::state_id(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  return -1;
}

int MachineDescription::symbol_id(char c) const {
  auto pos = alphabet.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

bool MachineDescription::is_final(int state) const {
  return std::binary_search(final_states.begin(), final_states.end(), state);
}

void finalize_machine(MachineDescription& m) {
  if (m.states.empty()) throw ValidationError("machine has no states");
  if (m.alphabet.empty()) throw ValidationError("machine has an empty alphabet");
  if (m.alphabet.size() > 200) throw ValidationError("alphabet too large");
  {
    std::set<char> seen(m.alphabet.begin(), m.alphabet.end());
    if (seen.size() != m.alphabet.size())
      throw ValidationError("alphabet contains a repeated symbol");
  }
  {
    std::set<std::string> seen(m.states.begin(), m.states.end());
    if (seen.size() != m.states.size())
      throw ValidationError("state list contains a repeated name");
  }
  if (m.blank >= m.alphabet.size())
    throw ValidationError("blank symbol is not in the alphabet");
  if (m.tapes < 1 || m.tapes > 16)
    throw ValidationError("tape count must be between 1 and 16");
  int n = static_cast<int>(m.states.size());
  if (m.start_state < 0 || m.start_state >= n)
    throw ValidationError("start state out of range");
  for (int f : m.final_states)
    if (f < 0 || f >= n) throw ValidationError("final state out of range");
  std::sort(m.final_states.begin(), m.final_states.end());
  m.final_states.erase(std::unique(m.final_states.begin(), m.final_states.end()),
                       m.final_states.end());

  for (const Transition& t : m.transitions) {
    if (t.from < 0 || t.from >= n || t.to < 0 || t.to >= n)
      throw ValidationError("transition references a state out of range");
    if (t.read.size() != static_cast<std::size_t>(m.tapes) ||
        t.write.size() != static_cast<std::size_t>(m.tapes) ||
        t.moves.size() != static_cast<std::size_t>(m.tapes))
      throw ValidationError("transition arity does not match tape count");
    for (std::uint8_t s : t.read)
      if (s >= m.alphabet.size()) throw ValidationError("read symbol out of range");
    for (std::uint8_t s : t.write)
      if (s >= m.alphabet.size()) throw ValidationError("write symbol out of range");
  }

  std::sort(m.transitions.begin(), m.transitions.end(),
            [](const Transition& a, const Transition& b) {
              return std::tie(a.from, a.read) < std::tie(b.from, b.read);
            });
  for (std::size_t i = 1; i < m.transitions.size(); ++i) {
    if (m.transitions[i].from == m.transitions[i - 1].from &&
        m.transitions[i].read == m.transitions[i - 1].read)
      throw ValidationError("duplicate transition for state '" +
                            m.states[m.transitions[i].from] +
                            "' (machine would be nondeterministic)");
  }
}

}  // namespace evoc::tm
