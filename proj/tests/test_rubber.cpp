#include <random>
#include <vector>

#include "doctest.h"
#include "rubber/rubber.hpp"
#include "rubber/verify.hpp"

using namespace rubber;

namespace {

ErrorPattern overrides(std::initializer_list<std::pair<int, int>> ov, int n) {
  ErrorPattern p;
  p.length = n;
  p.overrides = ov;
  return p;
}

std::vector<int> sent_sequence(const Session& s) {
  std::vector<int> out;
  for (const StepRecord& rec : s.transcript().steps) out.push_back(rec.sent);
  return out;
}

}  // namespace

TEST_CASE("receiver rubber erases the previous symbol") {
  std::vector<int> stack{1, 2};
  const RubberRule rule{0, 1, RubberAction::DeletePrevious, 0};
  CHECK(receiver_step(stack, rule, 3, 0));
  CHECK(stack == std::vector<int>{1});
}

TEST_CASE("delete on empty stack is a no-op") {
  std::vector<int> stack;
  const RubberRule rule{0, 1, RubberAction::DeletePrevious, 0};
  CHECK(receiver_step(stack, rule, 3, 0));
  CHECK(stack.empty());
}

TEST_CASE("correction rubber increments the exposed symbol") {
  std::vector<int> stack{0, 1, 1, 2};
  const RubberRule rule{2, 2, RubberAction::CorrectPrevious, +1};
  CHECK(receiver_step(stack, rule, 3, 2));
  CHECK(stack == std::vector<int>{0, 1, 2});
}

TEST_CASE("a correction can expose and trigger another run") {
  std::vector<int> stack{1, 2, 1, 2};
  const RubberRule rule{2, 2, RubberAction::CorrectPrevious, +1};
  CHECK(receiver_step(stack, rule, 3, 2));
  CHECK(stack == std::vector<int>{2});
}

TEST_CASE("correction violations are flagged") {
  const RubberRule rule{2, 2, RubberAction::CorrectPrevious, +1};
  std::vector<int> empty_after_run{2};
  CHECK_FALSE(receiver_step(empty_after_run, rule, 3, 2));
  const RubberRule inc{0, 1, RubberAction::CorrectPrevious, +1};
  std::vector<int> overflow{2};
  CHECK_FALSE(receiver_step(overflow, inc, 3, 0));
}

TEST_CASE("method tokens round-trip") {
  for (auto m : {Method::Rubber1, Method::RubberR, Method::ModifiedZ,
                 Method::ModifiedInvZ, Method::Lebedev, Method::Unidirectional,
                 Method::BrokenModified})
    CHECK(parse_method(to_string(m)) == m);
  CHECK_FALSE(parse_method("nope").has_value());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(validate_params({Method::Rubber1, 3, 4, 3, 1, 0}));   // negative length
  CHECK_THROWS(validate_params({Method::ModifiedZ, 3, 8, 1, 1, 0})); // r >= 2
  CHECK_THROWS(validate_params({Method::Lebedev, 2, 8, 1, 1, 1}));   // q=2 check digits
  CHECK_THROWS(validate_params({Method::Lebedev, 3, 8, 1, 1, 9}));   // too many zeros
  CHECK_NOTHROW(validate_params({Method::Lebedev, 2, 8, 1, 1, 0}));
}

TEST_CASE("message capacities") {
  CHECK(message_capacity({Method::Rubber1, 3, 8, 2, 1, 0}) == 16);
  CHECK(message_capacity({Method::ModifiedZ, 2, 9, 2, 2, 0}) == 13);
  CHECK(message_capacity({Method::Lebedev, 3, 8, 1, 1, 1}) == 80);
  // z=0 degenerates to the plain no-zero count
  CHECK(message_capacity({Method::Lebedev, 3, 8, 2, 1, 0}) ==
        message_capacity({Method::Rubber1, 3, 8, 2, 1, 0}));
}

TEST_CASE("error-free 1-rubber run pads with ones") {
  const Coder coder({Method::Rubber1, 3, 6, 1, 1, 0});
  const BigInt msg = skeleton_space(coder.params()).rank(std::vector<int>{1, 2, 1, 2});
  auto s = run_pattern(coder, msg, overrides({}, 6));
  CHECK(sent_sequence(*s) == std::vector<int>{1, 2, 1, 2, 1, 1});
  CHECK(s->stack_view() == std::vector<int>{1, 2, 1, 2, 1, 1});
  CHECK(s->decode() == msg);
  CHECK(s->repair_symbols() == 0);
}

TEST_CASE("1-rubber repairs a standard error with a rubber burst") {
  const Coder coder({Method::Rubber1, 3, 6, 1, 1, 0});
  const BigInt msg = skeleton_space(coder.params()).rank(std::vector<int>{1, 2, 1, 2});
  auto s = run_pattern(coder, msg, overrides({{1, 1}}, 6));
  CHECK(sent_sequence(*s) == std::vector<int>{1, 2, 0, 2, 1, 2});
  CHECK(s->stack_view() == std::vector<int>{1, 2, 1, 2});
  CHECK(s->decode() == msg);
  CHECK(s->transcript().standard == 1);
}

TEST_CASE("modified rubber corrects a z-channel error without retransmission") {
  const Coder coder({Method::ModifiedZ, 3, 6, 1, 2, 0});
  const BigInt msg = skeleton_space(coder.params()).rank(std::vector<int>{0, 1, 2, 0});
  auto s = run_pattern(coder, msg, overrides({{2, 1}}, 6));
  CHECK(sent_sequence(*s) == std::vector<int>{0, 1, 2, 2, 2, 0});
  CHECK(s->stack_view() == std::vector<int>{0, 1, 2, 0});
  CHECK(s->decode() == msg);
  CHECK(s->transcript().towards_rubber == 0);
}

TEST_CASE("steering re-sends a symbol erased by a towards-rubber error") {
  const Coder coder({Method::Rubber1, 3, 6, 1, 1, 0});
  const BigInt msg = skeleton_space(coder.params()).rank(std::vector<int>{1, 2, 1, 2});
  auto s = run_pattern(coder, msg, overrides({{1, 0}}, 6));
  // the zero erases the leading 1, so both are re-sent
  CHECK(sent_sequence(*s) == std::vector<int>{1, 2, 1, 2, 1, 2});
  CHECK(s->decode() == msg);
  CHECK(s->transcript().towards_rubber == 1);
}

TEST_CASE("sender determinism") {
  const Coder coder({Method::RubberR, 3, 9, 1, 2, 0});
  auto a = coder.start(5);
  auto b = coder.start(5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 9; ++i) {
    CHECK(a->next_symbol() == b->next_symbol());
    const int y = static_cast<int>(rng() % 3);
    a->receive(y);
    b->receive(y);
  }
}

TEST_CASE("z and inverse-z transcripts are symbol-wise complements") {
  for (int q : {2, 3}) {
    const CodeParams pz{Method::ModifiedZ, q, 8, 1, 2, 0};
    const CodeParams pi{Method::ModifiedInvZ, q, 8, 1, 2, 0};
    const Coder cz(pz), ci(pi);
    const BigInt total = cz.message_count();
    REQUIRE(ci.message_count() == total);
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
      const BigInt msg = BigInt(rng()) % total;
      // complemented message: complement the skeleton, re-rank in the mirror space
      auto skel = skeleton_space(pz).unrank(msg);
      for (int& v : skel) v = q - 1 - v;
      const BigInt msg_c = skeleton_space(pi).rank(skel);

      auto sz = cz.start(msg);
      auto si = ci.start(msg_c);
      const auto gz = build_graph(cz.channel());
      int budget = pz.t;
      for (int i = 0; i < pz.n; ++i) {
        const int x = sz->next_symbol();
        CHECK(si->next_symbol() == q - 1 - x);
        const auto outs = allowed_outputs(gz, x);
        int y = x;
        if (budget > 0) {
          y = outs[rng() % outs.size()];
          if (y != x) --budget;
        }
        sz->receive(y);
        si->receive(q - 1 - y);
      }
      CHECK(sz->decode() == msg);
      CHECK(si->decode() == msg_c);
    }
  }
}
