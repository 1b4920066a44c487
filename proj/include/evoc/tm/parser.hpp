#pragma once

#include <string_view>

#include "evoc/tm/machine.hpp"

namespace evoc::tm {

// Parses the line-oriented machine format:
//
//   # comment, also allowed at end of line
//   tapes: 1
//   alphabet: 0 1 _
//   blank: _
//   start: q0
//   final: qf
//   states: q0 qf        (optional; when present every reference is checked)
//   q0 (0) -> q0 (0) (R)
//
// Symbols are single printable characters (not whitespace and none of
// `( ) , # -`). State names are [A-Za-z0-9_]+. Header lines must precede the
// first transition; `alphabet`, `blank` and `start` are required. A missing
// transition means the machine halts. Throws ParseError with a 1-based
// line/column position.
MachineDescription parse_machine(std::string_view source);

}  // namespace evoc::tm
