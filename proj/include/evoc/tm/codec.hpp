#pragma once

#include <string>

#include "evoc/tm/machine.hpp"

namespace evoc::tm {

// Self-delimiting machine encoding over the eleven characters {0-9, '|'}.
// The text is a flat sequence of decimal fields, each terminated by '|', in a
// fixed order (version, tape count, state names, alphabet, blank, start,
// finals, transitions). Distinct machines encode to distinct words and
// decoding restores the machine exactly, including state names.
struct CodeWord {
  std::string text;

  friend bool operator==(const CodeWord&, const CodeWord&) = default;
};

CodeWord encode_machine(const MachineDescription& m);

// Throws DecodeError on malformed input (bad characters, truncation,
// out-of-range indices, trailing garbage, nondeterministic tables).
MachineDescription decode_machine(const CodeWord& code);

}  // namespace evoc::tm
