#include "evoc/inductive/monitor.hpp"

#include <memory>

#include "owned_compiled.hpp"

namespace evoc::inductive {
namespace {

class MonitorRun final : public InductiveRun {
 public:
  MonitorRun(std::shared_ptr<const OwnedCompiled> target, std::string_view u)
      : target_(std::move(target)),
        config_(tm::initial_configuration(target_->machine, u)) {
    target_halted_ = target_->compiled.probe(config_) != tm::CompiledMachine::Status::running;
    word_ = target_halted_ ? "1" : "0";
  }

  StepStatus step() override {
    if (!target_halted_) {
      target_->compiled.advance(config_);
      if (target_->compiled.probe(config_) != tm::CompiledMachine::Status::running) {
        target_halted_ = true;
        word_ = "1";
        ++version_;
      }
    }
    return StepStatus::running;
  }

  // The monitor never finishes watching; it is a genuinely non-halting
  // machine whose answer is read off by stabilization.
  StepStatus status() const override { return StepStatus::running; }
  const std::string& output_word() const override { return word_; }
  std::uint64_t output_version() const override { return version_; }

 private:
  std::shared_ptr<const OwnedCompiled> target_;
  tm::Configuration config_;
  bool target_halted_ = false;
  std::string word_;
  std::uint64_t version_ = 1;
};

class MonitorImpl final : public InductiveMachine::Impl {
 public:
  MonitorImpl(tm::MachineDescription target, std::string u)
      : holder_(std::make_shared<const OwnedCompiled>(std::move(target))),
        u_(std::move(u)),
        out_alphabet_("01") {
    // Reject a bad input word once, at construction.
    tm::initial_configuration(holder_->machine, u_);
  }

  std::unique_ptr<InductiveRun> start(std::string_view) const override {
    return std::make_unique<MonitorRun>(holder_, u_);
  }
  const std::string& input_alphabet() const override { return holder_->machine.alphabet; }
  const std::string& output_alphabet() const override { return out_alphabet_; }
  bool has_final_states() const override { return false; }

 private:
  std::shared_ptr<const OwnedCompiled> holder_;
  std::string u_;
  std::string out_alphabet_;
};

}  // namespace

InductiveMachine make_sos_monitor(const tm::CodeWord& target, std::string_view u) {
  tm::MachineDescription m = tm::decode_machine(target);
  return InductiveMachine(std::make_shared<MonitorImpl>(std::move(m), std::string(u)));
}

}  // namespace evoc::inductive
