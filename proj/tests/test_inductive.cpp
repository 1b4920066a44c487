#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "evoc/errors.hpp"
#include "evoc/inductive/compose.hpp"
#include "evoc/inductive/monitor.hpp"
#include "evoc/inductive/observe.hpp"
#include "evoc/inductive/program.hpp"
#include "evoc/tm/codec.hpp"
#include "evoc/tm/enumerate.hpp"
#include "evoc/tm/executor.hpp"
#include "evoc/tm/parser.hpp"
#include "evoc/util/rng.hpp"

using namespace evoc;
using namespace evoc::inductive;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(EVOC_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InductiveMachine fixture(const std::string& name) {
  return InductiveMachine::from_description(tm::parse_machine(read_fixture(name)));
}

void check_trace_invariants(const OutputTrace& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) {
      CHECK(trace[i].step > trace[i - 1].step);
      CHECK(trace[i].word != trace[i - 1].word);
    }
  }
}

}  // namespace

TEST_CASE("a machine that settles on a word stabilizes") {
  const InductiveMachine m = fixture("writer.tm");
  const Observation o = run_observed(m, "", 200, 50);
  CHECK(o.kind == Observation::Kind::stabilized);
  CHECK(o.word == "YES");
  CHECK(o.last_change_step == 3);
  CHECK(o.observed_until == 200);
  REQUIRE(o.trace.size() == 3);
  CHECK(o.trace[0] == TraceEntry{1, "Y"});
  CHECK(o.trace[1] == TraceEntry{2, "YE"});
  CHECK(o.trace[2] == TraceEntry{3, "YES"});
  check_trace_invariants(o.trace);
}

TEST_CASE("a machine that keeps growing its word stays provisional") {
  const InductiveMachine m = fixture("appender.tm");
  const Observation o = run_observed(m, "", 100, 30);
  CHECK(o.kind == Observation::Kind::provisional);
  CHECK(o.budget == 100);
  CHECK(o.word == std::string(100, '1'));  // one new '1' per step
  check_trace_invariants(o.trace);
  CHECK(o.trace.size() == 100);
}

TEST_CASE("halting beats stabilization and reports the halt step") {
  const InductiveMachine m = fixture("increment.tm");
  const Observation o = run_observed(m, "011", 1000, 5);
  CHECK(o.kind == Observation::Kind::halted);
  CHECK(o.word == "100");
  CHECK(o.halt_step == 7);
  // Non-empty initial output word ⇒ the trace starts at step 0.
  REQUIRE(!o.trace.empty());
  CHECK(o.trace.front().step == 0);
  CHECK(o.trace.front().word == "011");
  check_trace_invariants(o.trace);
}

TEST_CASE("a start state that is final halts at observation step zero") {
  const InductiveMachine m = fixture("halt-now.tm");
  const Observation o = run_observed(m, "1", 10, 1);
  CHECK(o.kind == Observation::Kind::halted);
  CHECK(o.halt_step == 0);
  CHECK(o.word == "1");
}

TEST_CASE("an empty output tape never stabilizes") {
  const InductiveMachine m = fixture("loop.tm");
  const Observation o = run_observed(m, "", 500, 100);
  CHECK(o.kind == Observation::Kind::provisional);
  CHECK(o.word.empty());
  CHECK(o.trace.empty());
}

TEST_CASE("observation rejects bad budgets") {
  const InductiveMachine m = fixture("loop.tm");
  CHECK_THROWS_AS((void)run_observed(m, "", 10, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)run_observed(m, "", 5, 6), std::invalid_argument);
  CHECK_NOTHROW((void)run_observed(m, "", 5, 5));
}

TEST_CASE("enlarging the window never changes a stabilized word, only delays it") {
  const InductiveMachine m = fixture("writer.tm");
  std::string word;
  for (std::uint64_t window : {5, 20, 80, 195}) {
    const Observation o = run_observed(m, "", 200, window);
    REQUIRE(o.kind == Observation::Kind::stabilized);
    if (word.empty()) word = o.word;
    CHECK(o.word == word);
    CHECK(o.last_change_step == 3);
  }
}

TEST_CASE("reduce_to_recursive agrees with the plain executor") {
  tm::RandomMachineParams params;
  Rng rng = split_rng(31, 0);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const tm::MachineDescription desc = tm::random_machine(rng, params);
    const InductiveMachine m = InductiveMachine::from_description(desc);
    if (!m.has_final_states()) continue;
    const tm::RunResult direct = tm::run(desc, "01", 128);
    const tm::RunResult reduced = reduce_to_recursive(m, "01", 128);
    CHECK(direct.kind == reduced.kind);
    CHECK(direct.steps == reduced.steps);
    CHECK(direct.output == reduced.output);
    ++compared;
  }
  CHECK(compared > 0);
}

TEST_CASE("multi-tape machines must leave the input tape alone") {
  // copier2 obeys the convention; a mutated copy that flips tape 0 does not.
  const std::string good = read_fixture("copier2.tm");
  CHECK_NOTHROW((void)InductiveMachine::from_description(tm::parse_machine(good)));

  const tm::MachineDescription bad = tm::parse_machine(
      "tapes: 2\nalphabet: 0 1\nblank: 0\nstart: q0\nfinal: qf\n"
      "q0 (1,0) -> q0 (0,1) (R,R)\n");
  CHECK_THROWS_AS((void)InductiveMachine::from_description(bad), ValidationError);
}

TEST_CASE("monitor output flips to 1 exactly when the target halts") {
  const tm::MachineDescription inc = tm::parse_machine(read_fixture("increment.tm"));
  const tm::CodeWord code = tm::encode_machine(inc);

  // Target halts on "011" after 7 steps.
  const InductiveMachine mon = make_sos_monitor(code, "011");
  const Observation o = run_observed(mon, "", 7 + 20, 20);
  CHECK(o.kind == Observation::Kind::stabilized);
  CHECK(o.word == "1");
  CHECK(o.last_change_step == 7);
  REQUIRE(o.trace.size() == 2);
  CHECK(o.trace[0] == TraceEntry{0, "0"});
  CHECK(o.trace[1] == TraceEntry{7, "1"});
}

TEST_CASE("monitor word stays 0 for a non-halting target") {
  const tm::MachineDescription loop = tm::parse_machine(read_fixture("loop.tm"));
  const InductiveMachine mon = make_sos_monitor(tm::encode_machine(loop), "1");
  const Observation o = run_observed(mon, "", 5000, 1000);
  CHECK(o.kind == Observation::Kind::stabilized);
  CHECK(o.word == "0");
  CHECK(o.last_change_step == 0);
}

TEST_CASE("monitor handles a target that halts before its first step") {
  const tm::MachineDescription now = tm::parse_machine(read_fixture("halt-now.tm"));
  const InductiveMachine mon = make_sos_monitor(tm::encode_machine(now), "1");
  const Observation o = run_observed(mon, "", 10, 5);
  CHECK(o.kind == Observation::Kind::stabilized);
  CHECK(o.word == "1");
  CHECK(o.last_change_step == 0);
}

TEST_CASE("monitor itself never halts") {
  const tm::MachineDescription inc = tm::parse_machine(read_fixture("increment.tm"));
  const InductiveMachine mon = make_sos_monitor(tm::encode_machine(inc), "011");
  CHECK_FALSE(mon.has_final_states());
  auto run = mon.start("");
  for (int i = 0; i < 200; ++i) CHECK(run->step() == StepStatus::running);
}

TEST_CASE("monitor validates its inputs") {
  const tm::MachineDescription inc = tm::parse_machine(read_fixture("increment.tm"));
  const tm::CodeWord code = tm::encode_machine(inc);
  CHECK_THROWS_AS((void)make_sos_monitor(tm::CodeWord{"junk"}, ""), DecodeError);
  CHECK_THROWS_AS((void)make_sos_monitor(code, "012"), ValidationError);
}

TEST_CASE("monitor is sound across a whole machine family") {
  // Every member of the 1-state family, on blank input. Direct simulation
  // with a generous budget classifies each machine; the monitor must agree.
  // 1-state machines that survive 300 steps are cycling and never halt.
  std::size_t halting = 0;
  std::size_t looping = 0;
  tm::enumerate_family({1, 2}, [&](std::uint64_t, const tm::MachineDescription& m) {
    const tm::RunResult direct = tm::run(m, "", 300);
    const InductiveMachine mon = make_sos_monitor(tm::encode_machine(m), "");
    if (direct.kind == tm::RunResult::Kind::halted) {
      const Observation o = run_observed(mon, "", direct.steps + 50, 50);
      REQUIRE(o.kind == Observation::Kind::stabilized);
      CHECK(o.word == "1");
      CHECK(o.last_change_step == direct.steps);
      ++halting;
    } else {
      const Observation o = run_observed(mon, "", 2000, 500);
      REQUIRE(o.kind == Observation::Kind::stabilized);
      CHECK(o.word == "0");
      ++looping;
    }
  });
  CHECK(halting + looping == 49);
  CHECK(halting > 0);
  CHECK(looping > 0);
}

TEST_CASE("identity preprocessing does not change halting observations") {
  const InductiveMachine id = fixture("copier2.tm");
  struct Case {
    const char* name;
    const char* input;
  };
  for (const Case& c : {Case{"increment.tm", "011"}, Case{"mapper.tm", "1010"}}) {
    const InductiveMachine target = fixture(c.name);
    const InductiveMachine composite = compose(id, target);

    const Observation direct = run_observed(target, c.input, 400, 40);
    const Observation through = run_observed(composite, c.input, 1600, 160);
    CHECK(direct.kind == through.kind);
    CHECK(direct.word == through.word);
  }
}

TEST_CASE("composition pipelines the first stage's word into the second") {
  // copier2 passes "1010" through; mapper complements it.
  const InductiveMachine pre = fixture("copier2.tm");
  const InductiveMachine post = fixture("mapper.tm");
  const InductiveMachine composite = compose(pre, post);
  const Observation o = run_observed(composite, "1010", 500, 50);
  CHECK(o.word == "0101");
  CHECK(o.kind == Observation::Kind::halted);
}

TEST_CASE("second stage waits for a first word") {
  // loop.tm never writes anything, so the composite output stays empty.
  const InductiveMachine silent = fixture("loop.tm");
  const InductiveMachine post = fixture("mapper.tm");
  const InductiveMachine composite = compose(silent, post);
  const Observation o = run_observed(composite, "", 300, 60);
  CHECK(o.kind == Observation::Kind::provisional);
  CHECK(o.word.empty());
}

TEST_CASE("restarts follow the first stage's changes") {
  // A first stage that writes "1", then "11", then gets stuck. Each change
  // restarts the complementer, so the composite's word must reflect the last
  // restart; once the writer is stuck and the complementer halts, the whole
  // composite counts as halted.
  const tm::MachineDescription bits = tm::parse_machine(
      "tapes: 1\nalphabet: 0 1\nblank: 0\nstart: q0\nstates: q0 q1 q2\n"
      "q0 (0) -> q1 (1) (R)\n"
      "q1 (0) -> q2 (1) (R)\n");
  const InductiveMachine first = InductiveMachine::from_description(bits);
  const InductiveMachine second = fixture("mapper.tm");
  const Observation o = run_observed(compose(first, second), "", 400, 80);
  CHECK(o.kind == Observation::Kind::halted);
  CHECK(o.word == "00");
}

TEST_CASE("composition checks alphabet containment") {
  const InductiveMachine writer = fixture("writer.tm");  // outputs over YES…
  const InductiveMachine post = fixture("mapper.tm");    // reads only 0/1
  CHECK_THROWS_AS((void)compose(writer, post), std::invalid_argument);
}

TEST_CASE("composite halting needs both stages done") {
  // increment halts; mapper halts on its word: composite halts.
  const InductiveMachine pre = fixture("copier2.tm");
  const InductiveMachine post = fixture("mapper.tm");
  const Observation done = run_observed(compose(pre, post), "01", 600, 60);
  CHECK(done.kind == Observation::Kind::halted);

  // appender never settles, so the composite can never halt. Each restart
  // gives the complementer exactly one step before the next one, so only the
  // first complemented bit is ever visible: the word settles on "0" even
  // though no stage halts — stabilization without halting.
  const InductiveMachine busy = fixture("appender.tm");
  const Observation not_done = run_observed(compose(busy, post), "", 600, 100);
  CHECK(not_done.kind == Observation::Kind::stabilized);
  CHECK(not_done.word == "0");
  CHECK(not_done.last_change_step == 1);
}
