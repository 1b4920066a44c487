#include "evoc/inductive/program.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "evoc/errors.hpp"
#include "owned_compiled.hpp"

namespace evoc::inductive {

InductiveMachine::InductiveMachine(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

std::unique_ptr<InductiveRun> InductiveMachine::start(std::string_view input) const {
  return impl_->start(input);
}
const std::string& InductiveMachine::input_alphabet() const { return impl_->input_alphabet(); }
const std::string& InductiveMachine::output_alphabet() const { return impl_->output_alphabet(); }
bool InductiveMachine::has_final_states() const { return impl_->has_final_states(); }
const tm::MachineDescription* InductiveMachine::underlying() const { return impl_->underlying(); }

namespace {

class TapeRun final : public InductiveRun {
 public:
  TapeRun(std::shared_ptr<const OwnedCompiled> holder, std::string_view input)
      : holder_(std::move(holder)),
        config_(tm::initial_configuration(holder_->machine, input)),
        out_tape_(config_.tapes.size() - 1) {
    word_ = config_.tapes[out_tape_].word(holder_->machine.alphabet);
    refresh_status();
  }

  StepStatus step() override {
    if (status_ != StepStatus::running) return status_;
    const tm::MachineDescription& m = holder_->machine;
    const tm::Tape& out = config_.tapes[out_tape_];
    std::uint8_t before = out.read(out.head);
    int idx = holder_->compiled.transition_at(config_);
    std::uint8_t writes = m.transitions[static_cast<std::size_t>(idx)].write[out_tape_];
    holder_->compiled.advance(config_);
    if (writes != before) {
      std::string now = config_.tapes[out_tape_].word(m.alphabet);
      if (now != word_) {
        word_ = std::move(now);
        ++version_;
      }
    }
    refresh_status();
    return status_;
  }

  StepStatus status() const override { return status_; }
  const std::string& output_word() const override { return word_; }
  std::uint64_t output_version() const override { return version_; }

 private:
  void refresh_status() {
    switch (holder_->compiled.probe(config_)) {
      case tm::CompiledMachine::Status::running: status_ = StepStatus::running; break;
      case tm::CompiledMachine::Status::in_final: status_ = StepStatus::halted; break;
      case tm::CompiledMachine::Status::stuck: status_ = StepStatus::stuck; break;
    }
  }

  std::shared_ptr<const OwnedCompiled> holder_;
  tm::Configuration config_;
  std::size_t out_tape_;
  std::string word_;
  std::uint64_t version_ = 1;
  StepStatus status_ = StepStatus::running;
};

class TapeImpl final : public InductiveMachine::Impl {
 public:
  explicit TapeImpl(tm::MachineDescription m)
      : holder_(std::make_shared<const OwnedCompiled>(std::move(m))) {
    const std::string& a = holder_->machine.alphabet;
    std::set<char> sorted(a.begin(), a.end());
    alphabet_.assign(sorted.begin(), sorted.end());
  }

  std::unique_ptr<InductiveRun> start(std::string_view input) const override {
    return std::make_unique<TapeRun>(holder_, input);
  }
  const std::string& input_alphabet() const override { return alphabet_; }
  const std::string& output_alphabet() const override { return alphabet_; }
  bool has_final_states() const override { return !holder_->machine.final_states.empty(); }
  const tm::MachineDescription* underlying() const override { return &holder_->machine; }

 private:
  std::shared_ptr<const OwnedCompiled> holder_;
  std::string alphabet_;
};

}  // namespace

InductiveMachine InductiveMachine::from_description(tm::MachineDescription m) {
  finalize_machine(m);
  if (m.tapes >= 2) {
    for (const tm::Transition& t : m.transitions)
      if (t.write[0] != t.read[0])
        throw ValidationError(
            "transition writes a different symbol on the input tape; "
            "the input tape must stay read-only");
  }
  return InductiveMachine(std::make_shared<TapeImpl>(std::move(m)));
}

}  // namespace evoc::inductive
