#include "evoc/tm/enumerate.hpp"

#include <string>

#include "evoc/errors.hpp"

namespace evoc::tm {
namespace {

const char* kDigits = "0123456789";

MachineDescription family_base(const FamilySpec& spec) {
  if (spec.states < 1 || spec.states > 6)
    throw ValidationError("family states must be between 1 and 6");
  if (spec.symbols < 2 || spec.symbols > 6)
    throw ValidationError("family symbols must be between 2 and 6");
  MachineDescription m;
  for (int s = 0; s < spec.states; ++s) m.states.push_back("q" + std::to_string(s));
  m.alphabet.assign(kDigits, static_cast<std::size_t>(spec.symbols));
  m.blank = 0;
  m.tapes = 1;
  m.start_state = 0;
  return m;
}

}  // namespace

std::uint64_t family_size(const FamilySpec& spec) {
  family_base(spec);  // validates
  std::uint64_t options =
      3ULL * static_cast<std::uint64_t>(spec.states) * static_cast<std::uint64_t>(spec.symbols) + 1;
  std::uint64_t cells =
      static_cast<std::uint64_t>(spec.states) * static_cast<std::uint64_t>(spec.symbols);
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < cells; ++i) {
    if (size > ~0ULL / options) throw ValidationError("family size overflows 64 bits");
    size *= options;
  }
  return size;
}

MachineDescription family_machine(const FamilySpec& spec, std::uint64_t index) {
  MachineDescription m = family_base(spec);
  std::uint64_t options =
      3ULL * static_cast<std::uint64_t>(spec.states) * static_cast<std::uint64_t>(spec.symbols) + 1;
  for (int s = 0; s < spec.states; ++s) {
    for (int a = 0; a < spec.symbols; ++a) {
      std::uint64_t v = index % options;
      index /= options;
      if (v == 0) continue;  // halting cell
      --v;
      Transition t;
      t.from = s;
      t.read = {static_cast<std::uint8_t>(a)};
      t.moves = {static_cast<Move>(v % 3)};
      v /= 3;
      t.write = {static_cast<std::uint8_t>(v % static_cast<std::uint64_t>(spec.symbols))};
      v /= static_cast<std::uint64_t>(spec.symbols);
      t.to = static_cast<int>(v);
      m.transitions.push_back(std::move(t));
    }
  }
  finalize_machine(m);
  return m;
}

void enumerate_family(const FamilySpec& spec,
                      const std::function<void(std::uint64_t, const MachineDescription&)>& visit) {
  std::uint64_t n = family_size(spec);
  if (n > kEnumerationCap)
    throw ValidationError("family has " + std::to_string(n) +
                          " machines, above the enumeration cap of " +
                          std::to_string(kEnumerationCap));
  for (std::uint64_t i = 0; i < n; ++i) visit(i, family_machine(spec, i));
}

MachineDescription random_machine(Rng& rng, const RandomMachineParams& p) {
  if (p.min_states < 1 || p.max_states < p.min_states)
    throw ValidationError("bad random machine state bounds");
  if (p.symbols < 2 || p.symbols > 10) throw ValidationError("bad random machine symbol count");
  if (p.tapes < 1 || p.tapes > 4) throw ValidationError("bad random machine tape count");

  MachineDescription m;
  int n_states = p.min_states +
                 static_cast<int>(pick_index(rng, static_cast<std::size_t>(p.max_states - p.min_states + 1)));
  for (int s = 0; s < n_states; ++s) m.states.push_back("q" + std::to_string(s));
  m.alphabet.assign(kDigits, static_cast<std::size_t>(p.symbols));
  m.blank = 0;
  m.tapes = p.tapes;
  m.start_state = 0;
  if (p.with_final && n_states > 1) m.final_states.push_back(n_states - 1);

  // One candidate rule per (state, read tuple) cell keeps the table
  // deterministic by construction. Final states get no outgoing rules.
  std::uint64_t combos = 1;
  for (int t = 0; t < p.tapes; ++t) combos *= static_cast<std::uint64_t>(p.symbols);
  for (int s = 0; s < n_states; ++s) {
    if (m.is_final(s)) continue;
    for (std::uint64_t c = 0; c < combos; ++c) {
      if (!chance(rng, p.transition_density)) continue;
      Transition t;
      t.from = s;
      std::uint64_t v = c;
      for (int tape = 0; tape < p.tapes; ++tape) {
        t.read.push_back(static_cast<std::uint8_t>(v % static_cast<std::uint64_t>(p.symbols)));
        v /= static_cast<std::uint64_t>(p.symbols);
      }
      t.to = static_cast<int>(pick_index(rng, static_cast<std::size_t>(n_states)));
      for (int tape = 0; tape < p.tapes; ++tape) {
        std::uint8_t w = static_cast<std::uint8_t>(pick_index(rng, static_cast<std::size_t>(p.symbols)));
        if (tape == 0 && p.tapes >= 2) w = t.read[0];  // keep the input tape intact
        t.write.push_back(w);
      }
      for (int tape = 0; tape < p.tapes; ++tape)
        t.moves.push_back(static_cast<Move>(pick_index(rng, 3)));
      m.transitions.push_back(std::move(t));
    }
  }
  finalize_machine(m);
  return m;
}

}  // namespace evoc::tm
