#include "evoc/inductive/observe.hpp"

#include <ostream>
#include <stdexcept>

namespace evoc::inductive {

Observation run_observed(const InductiveMachine& machine, std::string_view input,
                         std::uint64_t fuel, std::uint64_t window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  if (fuel < window) throw std::invalid_argument("fuel must be at least the window");

  auto run = machine.start(input);
  Observation obs;
  if (!run->output_word().empty())
    obs.trace.push_back({0, run->output_word()});
  std::uint64_t last_version = run->output_version();

  auto halted = [&](std::uint64_t at) {
    obs.kind = Observation::Kind::halted;
    obs.word = run->output_word();
    obs.halt_step = at;
    return obs;
  };

  if (run->status() == StepStatus::halted) return halted(0);

  for (std::uint64_t k = 1; k <= fuel; ++k) {
    StepStatus st = run->step();
    if (run->output_version() != last_version) {
      last_version = run->output_version();
      obs.trace.push_back({k, run->output_word()});
    }
    if (st == StepStatus::halted) return halted(k);
  }

  obs.word = run->output_word();
  if (!obs.trace.empty() && fuel - obs.trace.back().step >= window) {
    obs.kind = Observation::Kind::stabilized;
    obs.last_change_step = obs.trace.back().step;
    obs.observed_until = fuel;
  } else {
    obs.kind = Observation::Kind::provisional;
    obs.budget = fuel;
  }
  return obs;
}

tm::RunResult reduce_to_recursive(const InductiveMachine& machine, std::string_view input,
                                  std::uint64_t fuel) {
  const tm::MachineDescription* m = machine.underlying();
  if (!m)
    throw std::invalid_argument("machine is not tape-backed; it has no recursive reduction");
  if (m->final_states.empty())
    throw std::invalid_argument("machine has an empty final-state set");
  return tm::run(*m, input, fuel);
}

void dump_trace(std::ostream& out, const OutputTrace& trace) {
  for (const TraceEntry& e : trace) out << e.step << '\t' << e.word << '\n';
}

const char* observation_kind_name(Observation::Kind kind) {
  switch (kind) {
    case Observation::Kind::stabilized: return "stabilized";
    case Observation::Kind::provisional: return "provisional";
    case Observation::Kind::halted: return "halted";
  }
  return "?";
}

}  // namespace evoc::inductive
