#include "evoc/tm/executor.hpp"

#include <algorithm>

#include "evoc/errors.hpp"

namespace evoc::tm {

std::optional<std::pair<std::int64_t, std::int64_t>> Tape::nonblank_span() const {
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (std::size_t i = left_.size(); i-- > 0;) {
    if (left_[i] != blank_) {
      std::int64_t pos = -static_cast<std::int64_t>(i) - 1;
      if (!any || pos < lo) lo = pos;
      if (!any || pos > hi) hi = pos;
      any = true;
    }
  }
  for (std::size_t i = 0; i < right_.size(); ++i) {
    if (right_[i] != blank_) {
      std::int64_t pos = static_cast<std::int64_t>(i);
      if (!any || pos < lo) lo = pos;
      if (!any || pos > hi) hi = pos;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::string Tape::word(const std::string& alphabet) const {
  auto span = nonblank_span();
  if (!span) return {};
  std::string out;
  out.reserve(static_cast<std::size_t>(span->second - span->first + 1));
  for (std::int64_t pos = span->first; pos <= span->second; ++pos)
    out += alphabet[read(pos)];
  return out;
}

bool Tape::same_content(const Tape& other) const {
  if (head != other.head || blank_ != other.blank_) return false;
  std::int64_t lo = -static_cast<std::int64_t>(std::max(left_.size(), other.left_.size()));
  std::int64_t hi = static_cast<std::int64_t>(std::max(right_.size(), other.right_.size()));
  for (std::int64_t pos = lo; pos < hi; ++pos)
    if (read(pos) != other.read(pos)) return false;
  return true;
}

bool Configuration::same_content(const Configuration& other) const {
  if (state != other.state || tapes.size() != other.tapes.size()) return false;
  for (std::size_t i = 0; i < tapes.size(); ++i)
    if (!tapes[i].same_content(other.tapes[i])) return false;
  return true;
}

CompiledMachine::CompiledMachine(const MachineDescription& m) : m_(&m) {
  std::size_t n_states = m.states.size();
  std::size_t n_syms = m.alphabet.size();
  final_mask_.assign(n_states, 0);
  for (int f : m.final_states) final_mask_[static_cast<std::size_t>(f)] = 1;

  combos_ = 1;
  bool overflow = false;
  for (int t = 0; t < m.tapes; ++t) {
    if (combos_ > (1ULL << 40) / n_syms) {
      overflow = true;
      break;
    }
    combos_ *= n_syms;
  }
  std::uint64_t table = overflow ? ~0ULL : combos_ * n_states;
  use_dense_ = !overflow && table <= (1ULL << 20);
  if (use_dense_) dense_.assign(static_cast<std::size_t>(table), -1);

  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    const Transition& t = m.transitions[i];
    std::uint64_t k = static_cast<std::uint64_t>(t.from);
    for (int tape = m.tapes; tape-- > 0;) k = k * n_syms + t.read[static_cast<std::size_t>(tape)];
    if (use_dense_)
      dense_[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(i);
    else
      sparse_[k] = static_cast<std::int32_t>(i);
  }
}

std::uint64_t CompiledMachine::key(const Configuration& c) const {
  std::uint64_t k = static_cast<std::uint64_t>(c.state);
  std::size_t n_syms = m_->alphabet.size();
  for (std::size_t tape = c.tapes.size(); tape-- > 0;)
    k = k * n_syms + c.tapes[tape].read_head();
  return k;
}

int CompiledMachine::transition_at(const Configuration& c) const {
  std::uint64_t k = key(c);
  if (use_dense_) return dense_[static_cast<std::size_t>(k)];
  auto it = sparse_.find(k);
  return it == sparse_.end() ? -1 : it->second;
}

void CompiledMachine::advance(Configuration& c) const {
  const Transition& t = m_->transitions[static_cast<std::size_t>(transition_at(c))];
  for (std::size_t i = 0; i < c.tapes.size(); ++i) {
    Tape& tape = c.tapes[i];
    tape.write(tape.head, t.write[i]);
    switch (t.moves[i]) {
      case Move::left: --tape.head; break;
      case Move::right: ++tape.head; break;
      case Move::stay: break;
    }
  }
  c.state = t.to;
  ++c.step_count;
}

Configuration initial_configuration(const MachineDescription& m, std::string_view input) {
  Configuration c;
  c.state = m.start_state;
  c.tapes.assign(static_cast<std::size_t>(m.tapes), Tape(m.blank));
  for (std::size_t i = 0; i < input.size(); ++i) {
    int sym = m.symbol_id(input[i]);
    if (sym < 0)
      throw ValidationError(std::string("input symbol '") + input[i] +
                            "' is not in the machine alphabet");
    c.tapes[0].write(static_cast<std::int64_t>(i), static_cast<std::uint8_t>(sym));
  }
  return c;
}

StepOutcome step(const MachineDescription& m, Configuration config) {
  CompiledMachine cm(m);
  if (cm.probe(config) != CompiledMachine::Status::running)
    return {StepOutcome::Kind::halted, std::move(config)};
  cm.advance(config);
  return {StepOutcome::Kind::continued, std::move(config)};
}

RunResult run_compiled(const CompiledMachine& cm, Configuration config, std::uint64_t fuel) {
  const MachineDescription& m = cm.description();
  std::uint64_t executed = 0;
  for (;;) {
    auto st = cm.probe(config);
    if (st != CompiledMachine::Status::running) {
      RunResult r;
      r.kind = RunResult::Kind::halted;
      r.output = output_word(m, config);
      r.steps = config.step_count;
      r.in_final = st == CompiledMachine::Status::in_final;
      r.config = std::move(config);
      return r;
    }
    if (executed == fuel) {
      RunResult r;
      r.kind = RunResult::Kind::fuel_exhausted;
      r.steps = config.step_count;
      r.config = std::move(config);
      return r;
    }
    cm.advance(config);
    ++executed;
  }
}

RunResult run(const MachineDescription& m, std::string_view input, std::uint64_t fuel) {
  CompiledMachine cm(m);
  return run_compiled(cm, initial_configuration(m, input), fuel);
}

RunResult resume(const MachineDescription& m, Configuration config, std::uint64_t fuel) {
  if (config.tapes.size() != static_cast<std::size_t>(m.tapes))
    throw ValidationError("configuration tape count does not match the machine");
  if (config.state < 0 || config.state >= static_cast<int>(m.states.size()))
    throw ValidationError("configuration state out of range");
  CompiledMachine cm(m);
  return run_compiled(cm, std::move(config), fuel);
}

std::string output_word(const MachineDescription& m, const Configuration& c) {
  return c.tapes.back().word(m.alphabet);
}

}  // namespace evoc::tm
