#include <cmath>

#include "doctest.h"
#include "rubber/rubber.hpp"
#include "rubber/verify.hpp"

using namespace rubber;

TEST_CASE("small 1-rubber space verifies exhaustively") {
  const Coder coder({Method::Rubber1, 3, 6, 1, 1, 0});
  const auto rep = verify_exhaustive(coder);
  CHECK(rep.success);
  CHECK(rep.messages == 16);
  CHECK_FALSE(rep.counterexample.has_value());
  CHECK(rep.max_stack_shortfall == 0);
}

TEST_CASE("zero budget walks a single branch per message") {
  const Coder coder({Method::Rubber1, 3, 4, 0, 1, 0});
  const auto rep = verify_exhaustive(coder);
  CHECK(rep.success);
  CHECK(rep.leaves == static_cast<std::uint64_t>(rep.messages));
}

TEST_CASE("leaf count matches the analytic branching product on tiny blocks") {
  // L(s,b) = (q-1) L(s-1,b-1) + L(s-1,b): symmetric channel, decode ignored
  CHECK(symmetric_leaf_count(3, 2, 1) == 5);
  CHECK(symmetric_leaf_count(3, 3, 3) == 27);
  const Coder coder({Method::Rubber1, 3, 2, 1, 1, 0});
  const auto rep = verify_exhaustive(coder);  // n=2, t=1: skeleton empty, M=1
  CHECK(rep.messages == 1);
  CHECK(rep.leaves == symmetric_leaf_count(3, 2, 1));
}

TEST_CASE("cap exceeded is reported, not truncated silently") {
  const Coder coder({Method::Rubber1, 3, 8, 2, 1, 0});
  VerifyOptions opts;
  opts.leaf_cap = 10;
  const auto rep = verify_exhaustive(coder, opts);
  CHECK(rep.cap_exceeded);
  CHECK_FALSE(rep.success);
}

TEST_CASE("broken correction rule yields a replayable counterexample") {
  const Coder coder({Method::BrokenModified, 3, 6, 1, 2, 0});
  const auto rep = verify_exhaustive(coder);
  REQUIRE(rep.counterexample.has_value());
  const auto& ce = *rep.counterexample;
  auto s = run_pattern(coder, ce.message, ce.pattern);
  const auto decoded = s->decode();
  CHECK((!decoded || *decoded != ce.message));
}

TEST_CASE("multi-threaded verification agrees with single-threaded") {
  const Coder coder({Method::ModifiedZ, 3, 9, 2, 2, 0});
  VerifyOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = verify_exhaustive(coder, serial);
  const auto b = verify_exhaustive(coder, parallel);
  CHECK(a.success);
  CHECK(b.success);
  CHECK(a.leaves == b.leaves);
}

TEST_CASE("random simulation succeeds within budget and is deterministic") {
  const Coder coder({Method::Rubber1, 3, 20, 3, 1, 0});
  const auto a = simulate_random(coder, 2000, 99);
  CHECK(a.trials == 2000);
  CHECK(a.failures == 0);
  CHECK(a.successes == 2000);
  const auto b = simulate_random(coder, 2000, 99);
  CHECK(a.total_errors == b.total_errors);
  CHECK(a.total_repairs == b.total_repairs);
}

TEST_CASE("zero-trial edge and zero-budget simulation") {
  const Coder coder({Method::Rubber1, 3, 6, 0, 1, 0});
  const auto rep = simulate_random(coder, 50, 1);
  CHECK(rep.failures == 0);
  CHECK(rep.total_errors == 0);
  CHECK(rep.total_repairs == 0);
}

TEST_CASE("rate measurements") {
  CHECK(rate_of(16, 3, 8) == doctest::Approx(std::log2(16.0) / (8 * std::log2(3.0))));
  CHECK(rate_of(1, 3, 8) == 0.0);
  // 1-rubber rate equals (1 - 2t/n) log_q(q-1) exactly
  const Coder coder({Method::Rubber1, 4, 10, 2, 1, 0});
  const double rate = rate_of(coder.message_count(), 4, 10);
  CHECK(rate == doctest::Approx((1.0 - 2.0 * 2 / 10) * std::log2(3.0) / std::log2(4.0))
                    .epsilon(1e-12));
  // huge counts still produce finite rates
  BigInt huge = 1;
  for (int i = 0; i < 2000; ++i) huge *= 7;
  CHECK(rate_of(huge, 8, 2000) == doctest::Approx(std::log2(7.0) / (3.0)).epsilon(1e-9));
}

TEST_CASE("unidirectional verification covers both directions and reports the gap") {
  const Coder coder({Method::Unidirectional, 2, 8, 1, 2, 0});
  const auto rep = verify_exhaustive(coder);
  CHECK(rep.success);
  CHECK(rep.messages == 13);
  REQUIRE(rep.reference_rate.has_value());
  CHECK(*rep.reference_rate >= rep.rate);
}
