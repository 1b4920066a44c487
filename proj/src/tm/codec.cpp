#include "evoc/tm/codec.hpp"

#include <cstdint>
#include <limits>

#include "evoc/errors.hpp"

namespace evoc::tm {
namespace {

constexpr std::uint64_t kVersion = 1;

void put(std::string& out, std::uint64_t value) {
  out += std::to_string(value);
  out += '|';
}

struct FieldReader {
  std::string_view text;
  std::size_t pos = 0;

  std::uint64_t next(const char* what) {
    if (pos >= text.size()) throw DecodeError(std::string("truncated code word: expected ") + what);
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] != '|') {
      char c = text[pos];
      if (c < '0' || c > '9')
        throw DecodeError(std::string("invalid character in code word: '") + c + "'");
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
        throw DecodeError("numeric field overflow in code word");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) throw DecodeError(std::string("empty field in code word: expected ") + what);
    if (pos >= text.size()) throw DecodeError("code word field is missing its terminator");
    ++pos;  // consume '|'
    return v;
  }

  bool done() const { return pos >= text.size(); }
};

}  // namespace

CodeWord encode_machine(const MachineDescription& m) {
  std::string out;
  put(out, kVersion);
  put(out, static_cast<std::uint64_t>(m.tapes));
  put(out, m.states.size());
  for (const std::string& name : m.states) {
    put(out, name.size());
    for (char c : name) put(out, static_cast<std::uint8_t>(c));
  }
  put(out, m.alphabet.size());
  for (char c : m.alphabet) put(out, static_cast<std::uint8_t>(c));
  put(out, m.blank);
  put(out, static_cast<std::uint64_t>(m.start_state));
  put(out, m.final_states.size());
  for (int f : m.final_states) put(out, static_cast<std::uint64_t>(f));
  put(out, m.transitions.size());
  for (const Transition& t : m.transitions) {
    put(out, static_cast<std::uint64_t>(t.from));
    for (std::uint8_t s : t.read) put(out, s);
    put(out, static_cast<std::uint64_t>(t.to));
    for (std::uint8_t s : t.write) put(out, s);
    for (Move mv : t.moves) put(out, static_cast<std::uint64_t>(mv));
  }
  return CodeWord{std::move(out)};
}

MachineDescription decode_machine(const CodeWord& code) {
  if (code.text.empty()) throw DecodeError("empty code word");
  FieldReader r{code.text};

  if (r.next("version") != kVersion) throw DecodeError("unsupported code word version");
  MachineDescription m;
  std::uint64_t tapes = r.next("tape count");
  if (tapes < 1 || tapes > 16) throw DecodeError("tape count out of range");
  m.tapes = static_cast<int>(tapes);

  std::uint64_t n_states = r.next("state count");
  if (n_states < 1 || n_states > 100000) throw DecodeError("state count out of range");
  for (std::uint64_t i = 0; i < n_states; ++i) {
    std::uint64_t len = r.next("state name length");
    if (len < 1 || len > 256) throw DecodeError("state name length out of range");
    std::string name;
    for (std::uint64_t j = 0; j < len; ++j) {
      std::uint64_t c = r.next("state name character");
      if (c < 32 || c > 126) throw DecodeError("state name character out of range");
      name += static_cast<char>(c);
    }
    m.states.push_back(std::move(name));
  }

  std::uint64_t n_syms = r.next("alphabet size");
  if (n_syms < 1 || n_syms > 200) throw DecodeError("alphabet size out of range");
  for (std::uint64_t i = 0; i < n_syms; ++i) {
    std::uint64_t c = r.next("alphabet character");
    if (c < 33 || c > 126) throw DecodeError("alphabet character out of range");
    m.alphabet += static_cast<char>(c);
  }

  std::uint64_t blank = r.next("blank symbol");
  if (blank >= n_syms) throw DecodeError("blank symbol out of range");
  m.blank = static_cast<std::uint8_t>(blank);

  std::uint64_t start = r.next("start state");
  if (start >= n_states) throw DecodeError("start state out of range");
  m.start_state = static_cast<int>(start);

  std::uint64_t n_final = r.next("final state count");
  if (n_final > n_states) throw DecodeError("final state count out of range");
  for (std::uint64_t i = 0; i < n_final; ++i) {
    std::uint64_t f = r.next("final state");
    if (f >= n_states) throw DecodeError("final state out of range");
    m.final_states.push_back(static_cast<int>(f));
  }

  std::uint64_t n_trans = r.next("transition count");
  if (n_trans > 10000000) throw DecodeError("transition count out of range");
  for (std::uint64_t i = 0; i < n_trans; ++i) {
    Transition t;
    std::uint64_t from = r.next("transition source");
    if (from >= n_states) throw DecodeError("transition source out of range");
    t.from = static_cast<int>(from);
    for (int tape = 0; tape < m.tapes; ++tape) {
      std::uint64_t s = r.next("read symbol");
      if (s >= n_syms) throw DecodeError("read symbol out of range");
      t.read.push_back(static_cast<std::uint8_t>(s));
    }
    std::uint64_t to = r.next("transition target");
    if (to >= n_states) throw DecodeError("transition target out of range");
    t.to = static_cast<int>(to);
    for (int tape = 0; tape < m.tapes; ++tape) {
      std::uint64_t s = r.next("write symbol");
      if (s >= n_syms) throw DecodeError("write symbol out of range");
      t.write.push_back(static_cast<std::uint8_t>(s));
    }
    for (int tape = 0; tape < m.tapes; ++tape) {
      std::uint64_t mv = r.next("head move");
      if (mv > 2) throw DecodeError("head move out of range");
      t.moves.push_back(static_cast<Move>(mv));
    }
    m.transitions.push_back(std::move(t));
  }

  if (!r.done()) throw DecodeError("trailing characters after the last field");

  try {
    finalize_machine(m);
  } catch (const ValidationError& e) {
    throw DecodeError(e.what());
  }
  return m;
}

}  // namespace evoc::tm
