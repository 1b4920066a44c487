#include "evoc/inductive/compose.hpp"

#include <memory>
#include <stdexcept>

namespace evoc::inductive {
namespace {

class CompositeRun final : public InductiveRun {
 public:
  CompositeRun(const InductiveMachine& first, InductiveMachine second, std::string_view input)
      : second_machine_(std::move(second)), first_(first.start(input)) {
    first_version_ = first_->output_version();
    if (!first_->output_word().empty()) restart_second();
    sync_word();
  }

  StepStatus step() override {
    if (status_ != StepStatus::running) return status_;
    if (first_->status() == StepStatus::running) first_->step();
    if (first_->output_version() != first_version_) restart_second();
    if (second_ && second_->status() == StepStatus::running) second_->step();
    sync_word();
    if (first_->status() != StepStatus::running && second_ &&
        second_->status() == StepStatus::halted)
      status_ = StepStatus::halted;
    return status_;
  }

  StepStatus status() const override { return status_; }
  const std::string& output_word() const override { return word_; }
  std::uint64_t output_version() const override { return version_; }

 private:
  void restart_second() {
    first_version_ = first_->output_version();
    second_ = second_machine_.start(first_->output_word());
  }
  void sync_word() {
    const std::string& now = second_ ? second_->output_word() : empty_;
    if (now != word_) {
      word_ = now;
      ++version_;
    }
  }

  InductiveMachine second_machine_;
  std::unique_ptr<InductiveRun> first_;
  std::unique_ptr<InductiveRun> second_;
  std::uint64_t first_version_ = 0;
  std::string word_;
  std::string empty_;
  std::uint64_t version_ = 1;
  StepStatus status_ = StepStatus::running;
};

class CompositeImpl final : public InductiveMachine::Impl {
 public:
  CompositeImpl(InductiveMachine first, InductiveMachine second)
      : first_(std::move(first)), second_(std::move(second)) {}

  std::unique_ptr<InductiveRun> start(std::string_view input) const override {
    return std::make_unique<CompositeRun>(first_, second_, input);
  }
  const std::string& input_alphabet() const override { return first_.input_alphabet(); }
  const std::string& output_alphabet() const override { return second_.output_alphabet(); }
  // The composite result becomes definitive only through the second stage.
  bool has_final_states() const override { return second_.has_final_states(); }

 private:
  InductiveMachine first_;
  InductiveMachine second_;
};

}  // namespace

InductiveMachine compose(InductiveMachine first, InductiveMachine second) {
  for (char c : first.output_alphabet())
    if (second.input_alphabet().find(c) == std::string::npos)
      throw std::invalid_argument(
          std::string("composition alphabet mismatch: first stage may emit '") + c +
          "' which the second stage does not accept");
  return InductiveMachine(
      std::make_shared<CompositeImpl>(std::move(first), std::move(second)));
}

}  // namespace evoc::inductive
