#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evoc/errors.hpp"
#include "evoc/tm/codec.hpp"
#include "evoc/tm/enumerate.hpp"
#include "evoc/tm/executor.hpp"
#include "evoc/tm/machine.hpp"
#include "evoc/tm/parser.hpp"
#include "evoc/util/rng.hpp"

using namespace evoc;
using namespace evoc::tm;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(EVOC_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MachineDescription fixture(const std::string& name) {
  return parse_machine(read_fixture(name));
}

}  // namespace

TEST_CASE("increment machine matches the hand-traced oracle") {
  const MachineDescription m = fixture("increment.tm");

  // Traced by hand: 3 steps scanning right, 1 step turning, 2 carry steps,
  // 1 final write.
  RunResult r = run(m, "011", 1000);
  CHECK(r.kind == RunResult::Kind::halted);
  CHECK(r.output == "100");
  CHECK(r.steps == 7);
  CHECK(r.in_final);

  r = run(m, "111", 1000);
  CHECK(r.output == "1000");
  CHECK(r.steps == 8);

  r = run(m, "", 1000);
  CHECK(r.output == "1");
  CHECK(r.steps == 2);

  r = run(m, "0", 1000);
  CHECK(r.output == "1");
}

TEST_CASE("looping machine exhausts fuel") {
  const MachineDescription m = fixture("loop.tm");
  const RunResult r = run(m, "1", 100);
  CHECK(r.kind == RunResult::Kind::fuel_exhausted);
  CHECK(r.steps == 100);
}

TEST_CASE("a start state that is final halts at step zero") {
  const MachineDescription m = fixture("halt-now.tm");
  const RunResult r = run(m, "1", 100);
  CHECK(r.kind == RunResult::Kind::halted);
  CHECK(r.steps == 0);
  CHECK(r.in_final);
  CHECK(r.output == "1");
}

TEST_CASE("halt exactly at fuel exhaustion still counts as a halt") {
  const MachineDescription m = fixture("increment.tm");
  const RunResult r = run(m, "011", 7);
  CHECK(r.kind == RunResult::Kind::halted);
  CHECK(r.output == "100");
}

TEST_CASE("two-tape copier reads input read-only and copies it") {
  const MachineDescription m = fixture("copier2.tm");
  const RunResult r = run(m, "0110", 100);
  CHECK(r.kind == RunResult::Kind::halted);
  CHECK(r.output == "0110");
  CHECK(r.steps == 5);
  // Input tape is untouched.
  CHECK(r.config.tapes[0].word(m.alphabet) == "0110");
}

TEST_CASE("tape words keep interior blanks") {
  Tape t(2);  // blank = symbol id 2 ('_' in "01_")
  t.write(0, 1);
  t.write(2, 1);
  CHECK(t.word("01_") == "1_1");
  t.write(-2, 0);
  CHECK(t.word("01_") == "0_1_1");
  CHECK_FALSE(t.nonblank_span() == std::nullopt);
}

TEST_CASE("input symbols outside the alphabet are rejected") {
  const MachineDescription m = fixture("loop.tm");
  CHECK_THROWS_AS((void)initial_configuration(m, "012"), ValidationError);
}

TEST_CASE("step agrees with run") {
  const MachineDescription m = fixture("increment.tm");
  Configuration c = initial_configuration(m, "011");
  std::uint64_t steps = 0;
  for (;;) {
    StepOutcome o = step(m, c);
    if (o.kind == StepOutcome::Kind::halted) break;
    c = std::move(o.config);
    ++steps;
  }
  CHECK(steps == 7);
  CHECK(output_word(m, c) == "100");
}

TEST_CASE("resumption: split runs agree with straight runs") {
  RandomMachineParams params;
  Rng rng = split_rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const MachineDescription m = random_machine(rng, params);
    const std::string input = (trial % 3 == 0) ? "" : (trial % 3 == 1 ? "01" : "1101");
    const std::uint64_t fuel = 64;
    const std::uint64_t cut = static_cast<std::uint64_t>(trial % 65);

    const RunResult whole = run(m, input, fuel);
    const RunResult head = run(m, input, cut);
    RunResult stitched = head;
    if (head.kind == RunResult::Kind::fuel_exhausted) {
      // resume() reports cumulative steps via the configuration's step count.
      stitched = resume(m, head.config, fuel - cut);
    }
    CHECK(stitched.kind == whole.kind);
    CHECK(stitched.steps == whole.steps);
    CHECK(stitched.output == whole.output);
    CHECK(stitched.config.state == whole.config.state);
  }
}

TEST_CASE("parser reports positions") {
  CHECK_THROWS_AS((void)parse_machine("alphabet: 0 1\nstart: q0\n"), ParseError);

  try {
    (void)parse_machine("tapes: 1\nalphabet: 0 1\nblank: 0\nstart: q0\nbogus: 1\n");
    FAIL("unknown header accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }

  try {
    (void)parse_machine(
        "tapes: 1\nalphabet: 0 1\nblank: 0\nstart: q0\n"
        "q0 (0) -> q0 (1) (R)\n"
        "q0 (0) -> q0 (0) (L)\n");
    FAIL("duplicate transition accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("duplicate transition") != std::string::npos);
  }

  // Declared state list makes unknown references an error.
  CHECK_THROWS_AS((void)parse_machine("tapes: 1\nalphabet: 0 1\nblank: 0\nstart: q0\n"
                                      "states: q0\n"
                                      "q0 (0) -> q9 (0) (R)\n"),
                  ParseError);

  // Arity mismatch against the declared tape count.
  CHECK_THROWS_AS((void)parse_machine("tapes: 2\nalphabet: 0 1\nblank: 0\nstart: q0\n"
                                      "q0 (0) -> q0 (0) (R)\n"),
                  ParseError);
}

TEST_CASE("parser accepts comments, trailing comments, and blank lines") {
  const MachineDescription m = parse_machine(
      "# leading comment\n"
      "tapes: 1\n"
      "alphabet: 0 1   # inline\n"
      "blank: 0\n"
      "\n"
      "start: q0\n"
      "q0 (0) -> q0 (1) (R)  # write forever\n");
  CHECK(m.states.size() == 1);
  CHECK(m.transitions.size() == 1);
}

TEST_CASE("code words survive a roundtrip and separate distinct machines") {
  RandomMachineParams params;
  params.max_states = 5;
  Rng rng = split_rng(23, 0);

  std::set<std::string> sources;  // dedupe identical machines
  std::set<std::string> codes;
  std::size_t kept = 0;
  while (kept < 1000) {
    const MachineDescription m = random_machine(rng, params);
    const CodeWord code = encode_machine(m);
    if (!sources.insert(code.text).second) continue;  // same machine drawn twice
    ++kept;

    const MachineDescription back = decode_machine(code);
    CHECK(back == m);
    codes.insert(code.text);
  }
  CHECK(codes.size() == 1000);
}

TEST_CASE("decoding rejects malformed code words") {
  const MachineDescription m = fixture("increment.tm");
  const CodeWord good = encode_machine(m);

  CHECK_THROWS_AS((void)decode_machine(CodeWord{""}), DecodeError);
  CHECK_THROWS_AS((void)decode_machine(CodeWord{"2|"}), DecodeError);  // wrong version
  CHECK_THROWS_AS((void)decode_machine(CodeWord{good.text + "7|"}), DecodeError);  // trailing
  CHECK_THROWS_AS((void)decode_machine(CodeWord{good.text.substr(0, good.text.size() / 2)}),
                  DecodeError);
  CHECK_THROWS_AS((void)decode_machine(CodeWord{"x" + good.text}), DecodeError);
}

TEST_CASE("machine validation refuses nondeterminism and bad shapes") {
  MachineDescription m;
  m.states = {"a", "b"};
  m.alphabet = "01";
  m.blank = 0;
  m.tapes = 1;
  m.start_state = 0;
  m.transitions = {{0, {0}, 0, {1}, {Move::right}}, {0, {0}, 1, {0}, {Move::left}}};
  CHECK_THROWS_AS((void)finalize_machine(m), ValidationError);

  m.transitions = {{0, {0}, 0, {1}, {Move::right}}};
  m.tapes = 0;
  CHECK_THROWS_AS((void)finalize_machine(m), ValidationError);
  m.tapes = 1;
  m.start_state = 7;
  CHECK_THROWS_AS((void)finalize_machine(m), ValidationError);
}

TEST_CASE("family counts match the closed form") {
  CHECK(family_size({1, 2}) == 49);          // (3*1*2 + 1)^2
  CHECK(family_size({2, 2}) == 28561);       // 13^4
  CHECK(family_size({2, 3}) == 47045881);    // 19^6
}

TEST_CASE("family enumeration is exhaustive and injective") {
  std::set<std::string> codes;
  std::size_t n = 0;
  enumerate_family({1, 2}, [&](std::uint64_t index, const MachineDescription& m) {
    CHECK(index == n);
    codes.insert(encode_machine(m).text);
    ++n;
  });
  CHECK(n == 49);
  CHECK(codes.size() == 49);
}

TEST_CASE("family machine with no rules halts immediately") {
  const MachineDescription m = family_machine({2, 2}, 0);
  CHECK(m.transitions.empty());
  const RunResult r = run(m, "", 10);
  CHECK(r.kind == RunResult::Kind::halted);
  CHECK(r.steps == 0);
}
