#include "evoc/tm/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evoc/errors.hpp"

namespace evoc::tm {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_symbol_char(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  if (!std::isprint(static_cast<unsigned char>(c))) return false;
  return c != '(' && c != ')' && c != ',' && c != '#' && c != '-';
}

// Cursor over one source line.
struct LineScan {
  std::string_view text;
  int line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(line, static_cast<int>(at) + 1, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail("expected " + what);
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (pos == start) fail("expected a state name");
    return std::string(text.substr(start, pos - start));
  }
  char symbol() {
    skip_ws();
    if (pos >= text.size() || !is_symbol_char(text[pos])) fail("expected a tape symbol");
    return text[pos++];
  }
  void expect_arrow() {
    skip_ws();
    if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>')
      fail("expected '->'");
    pos += 2;
  }
};

struct RawTransition {
  std::string from;
  std::string to;
  std::string reads, writes;
  std::vector<Move> moves;
  int line;
  std::size_t col;
};

std::vector<std::string> split_fields(std::string_view rest) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : rest) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

MachineDescription parse_machine(std::string_view source) {
  std::optional<int> tapes;
  std::optional<std::string> alphabet;
  std::optional<char> blank;
  std::optional<std::string> start;
  std::vector<std::string> finals;
  std::optional<std::vector<std::string>> declared_states;
  std::vector<RawTransition> raw;
  std::set<std::string> seen_headers;

  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= source.size()) {
    std::size_t end = source.find('\n', begin);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;
    if (end == source.size() && line.empty() && begin > source.size()) break;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    LineScan scan{line, line_no};
    if (scan.done()) continue;

    // Header lines look like `word:`; anything else is a transition.
    std::size_t probe = scan.pos;
    std::string first;
    while (probe < line.size() && is_name_char(line[probe])) first += line[probe++];
    std::size_t after = probe;
    while (after < line.size() && std::isspace(static_cast<unsigned char>(line[after]))) ++after;
    bool header = !first.empty() && after < line.size() && line[after] == ':';

    if (header) {
      if (!raw.empty())
        scan.fail("header line after the first transition");
      if (!seen_headers.insert(first).second)
        scan.fail("duplicate '" + first + ":' line");
      std::string_view rest = line.substr(after + 1);
      auto fields = split_fields(rest);
      if (first == "tapes") {
        if (fields.size() != 1 || fields[0].find_first_not_of("0123456789") != std::string::npos)
          scan.fail("tapes: expects one integer", after + 1);
        tapes = std::stoi(fields[0]);
      } else if (first == "alphabet") {
        if (fields.empty()) scan.fail("alphabet: expects at least one symbol", after + 1);
        std::string a;
        for (const auto& f : fields) {
          if (f.size() != 1 || !is_symbol_char(f[0]))
            scan.fail("alphabet symbols must be single characters", after + 1);
          a += f[0];
        }
        alphabet = a;
      } else if (first == "blank") {
        if (fields.size() != 1 || fields[0].size() != 1)
          scan.fail("blank: expects one symbol", after + 1);
        blank = fields[0][0];
      } else if (first == "start") {
        if (fields.size() != 1) scan.fail("start: expects one state name", after + 1);
        start = fields[0];
      } else if (first == "final") {
        finals = fields;  // may be empty
      } else if (first == "states") {
        if (fields.empty()) scan.fail("states: expects at least one name", after + 1);
        declared_states = fields;
      } else {
        scan.fail("unknown header '" + first + ":'");
      }
      continue;
    }

    // Transition: name ( s, s ) -> name ( s, s ) ( M, M )
    RawTransition t;
    t.line = line_no;
    t.col = scan.pos + 1;
    t.from = scan.name();
    scan.expect('(', "'(' before the read symbols");
    t.reads += scan.symbol();
    while (scan.accept(',')) t.reads += scan.symbol();
    scan.expect(')', "')' after the read symbols");
    scan.expect_arrow();
    t.to = scan.name();
    scan.expect('(', "'(' before the write symbols");
    t.writes += scan.symbol();
    while (scan.accept(',')) t.writes += scan.symbol();
    scan.expect(')', "')' after the write symbols");
    scan.expect('(', "'(' before the head moves");
    do {
      scan.skip_ws();
      char c = scan.peek();
      if (c == 'L') t.moves.push_back(Move::left);
      else if (c == 'R') t.moves.push_back(Move::right);
      else if (c == 'S') t.moves.push_back(Move::stay);
      else scan.fail("head move must be L, R or S");
      ++scan.pos;
    } while (scan.accept(','));
    scan.expect(')', "')' after the head moves");
    if (!scan.done()) scan.fail("unexpected trailing text");
    raw.push_back(std::move(t));
  }

  auto missing = [&](const char* what) {
    throw ParseError(line_no, 1, std::string("missing required header '") + what + ":'");
  };
  if (!alphabet) missing("alphabet");
  if (!blank) missing("blank");
  if (!start) missing("start");

  MachineDescription m;
  m.alphabet = *alphabet;
  m.tapes = tapes.value_or(1);
  {
    int b = m.symbol_id(*blank);
    if (b < 0) throw ParseError(1, 1, "blank symbol is not in the alphabet");
    m.blank = static_cast<std::uint8_t>(b);
  }

  // Assemble the state list: declared order when given, otherwise order of
  // first appearance (start, finals, then transition endpoints).
  std::map<std::string, int> ids;
  auto intern = [&](const std::string& name, int line, std::size_t col) -> int {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    if (declared_states)
      throw ParseError(line, static_cast<int>(col),
                       "undefined state '" + name + "' (not in 'states:')");
    int id = static_cast<int>(m.states.size());
    m.states.push_back(name);
    ids.emplace(name, id);
    return id;
  };
  if (declared_states) {
    for (const auto& s : *declared_states) {
      if (ids.count(s)) throw ParseError(1, 1, "state '" + s + "' declared twice");
      ids.emplace(s, static_cast<int>(m.states.size()));
      m.states.push_back(s);
    }
  }
  m.start_state = intern(*start, 1, 1);
  for (const auto& f : finals) m.final_states.push_back(intern(f, 1, 1));

  for (const RawTransition& t : raw) {
    Transition tr;
    tr.from = intern(t.from, t.line, t.col);
    tr.to = intern(t.to, t.line, t.col);
    auto to_ids = [&](const std::string& syms, std::vector<std::uint8_t>& out) {
      for (char c : syms) {
        int id = m.symbol_id(c);
        if (id < 0)
          throw ParseError(t.line, static_cast<int>(t.col),
                           std::string("symbol '") + c + "' is not in the alphabet");
        out.push_back(static_cast<std::uint8_t>(id));
      }
    };
    to_ids(t.reads, tr.read);
    to_ids(t.writes, tr.write);
    tr.moves = t.moves;
    if (tr.read.size() != static_cast<std::size_t>(m.tapes) ||
        tr.write.size() != static_cast<std::size_t>(m.tapes) ||
        tr.moves.size() != static_cast<std::size_t>(m.tapes))
      throw ParseError(t.line, static_cast<int>(t.col),
                       "transition arity does not match 'tapes:'");
    m.transitions.push_back(std::move(tr));
  }

  // Duplicate detection with source positions, before canonical reordering.
  for (std::size_t i = 0; i < m.transitions.size(); ++i)
    for (std::size_t j = i + 1; j < m.transitions.size(); ++j)
      if (m.transitions[i].from == m.transitions[j].from &&
          m.transitions[i].read == m.transitions[j].read)
        throw ParseError(raw[j].line, static_cast<int>(raw[j].col),
                         "duplicate transition for state '" + raw[j].from + "'");

  try {
    finalize_machine(m);
  } catch (const ValidationError& e) {
    throw ParseError(line_no, 1, e.what());
  }
  return m;
}

}  // namespace evoc::tm
