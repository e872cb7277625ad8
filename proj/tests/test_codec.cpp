#include <set>
#include <vector>

#include "doctest.h"
#include "rubber/bounds.hpp"
#include "rubber/codec.hpp"

using namespace rubber;

namespace {

// Brute-force oracle: enumerate all q^len words and keep the admissible ones,
// in lexicographic order.
std::vector<std::vector<int>> enumerate(const SkeletonSpace& space) {
  std::vector<std::vector<int>> out;
  std::vector<int> word(space.length(), 0);
  while (true) {
    if (space.contains(word)) out.push_back(word);
    int i = space.length() - 1;
    for (; i >= 0; --i) {
      if (++word[i] < space.q()) break;
      word[i] = 0;
    }
    if (i < 0) break;
  }
  if (space.length() == 0) out.assign(1, {});
  return out;
}

void check_against_oracle(const SkeletonSpace& space) {
  const auto all = enumerate(space);
  REQUIRE(space.count() == BigInt(all.size()));
  // ExactZeros orders by zero-position rank first, which is not sequence-lex;
  // there the oracle only pins the member set and the bijection.
  const bool lex = space.kind() != SkeletonSpace::Kind::ExactZeros;
  std::set<std::vector<int>> members(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto seq = space.unrank(k);
    if (lex) CHECK(seq == all[k]);
    CHECK(members.erase(seq) == 1);
    CHECK(space.rank(seq) == BigInt(k));
  }
  CHECK(members.empty());
}

}  // namespace

TEST_CASE("counts match hand-picked values") {
  CHECK(SkeletonSpace::no_zero(3, 4).count() == 16);
  CHECK(SkeletonSpace::avoid_block(2, 3, 0, 2).count() == 5);
  CHECK(SkeletonSpace::exact_zeros(3, 4, 1).count() == 32);
}

TEST_CASE("unrank examples") {
  CHECK(SkeletonSpace::no_zero(3, 2).unrank(0) == std::vector<int>{1, 1});
  CHECK(SkeletonSpace::no_zero(3, 2).unrank(2) == std::vector<int>{2, 1});
  CHECK(SkeletonSpace::avoid_block(2, 3, 0, 2).unrank(4) == std::vector<int>{1, 1, 1});
}

TEST_CASE("rank examples") {
  const std::vector<int> v{2, 2};
  CHECK(SkeletonSpace::no_zero(3, 2).rank(v) == 3);
  // lex order of admissible binary length-3 words avoiding 00:
  // 010, 011, 101, 110, 111 (brute-force frozen)
  const std::vector<int> w{0, 1, 0};
  CHECK(SkeletonSpace::avoid_block(2, 3, 0, 2).rank(w) == 0);
}

TEST_CASE("avoid-block counts and orderings match brute force") {
  for (int q : {2, 3})
    for (int r : {1, 2, 3})
      for (int len = 0; len <= 12; ++len) {
        const auto space = SkeletonSpace::avoid_block(q, len, 0, r);
        const auto all = enumerate(space);
        CHECK(space.count() == BigInt(all.size()));
        if (len <= 8) {  // full bijection on the smaller spaces
          for (std::size_t k = 0; k < all.size(); ++k) {
            CHECK(space.unrank(k) == all[k]);
            CHECK(space.rank(all[k]) == BigInt(k));
          }
        }
      }
}

TEST_CASE("avoid-block count is independent of the avoided symbol") {
  for (int b = 0; b < 3; ++b)
    CHECK(SkeletonSpace::avoid_block(3, 9, b, 2).count() ==
          SkeletonSpace::avoid_block(3, 9, 0, 2).count());
}

TEST_CASE("fibonacci counts for binary avoid-00") {
  const long expected[] = {2, 3, 5, 8, 13, 21, 34, 55};
  for (int len = 1; len <= 8; ++len)
    CHECK(SkeletonSpace::avoid_block(2, len, 0, 2).count() == expected[len - 1]);
}

TEST_CASE("no-zero equals avoid-block run 1 and the power formula") {
  for (int q : {2, 3, 4})
    for (int len = 0; len <= 10; ++len) {
      BigInt pw = 1;
      for (int i = 0; i < len; ++i) pw *= q - 1;
      CHECK(SkeletonSpace::no_zero(q, len).count() == pw);
      CHECK(SkeletonSpace::avoid_block(q, len, 0, 1).count() == pw);
    }
}

TEST_CASE("avoid-block recurrence holds from length r on") {
  for (int q : {2, 3})
    for (int r : {1, 2, 3})
      for (int len = r; len <= 14; ++len) {
        BigInt sum = 0;
        for (int i = 1; i <= r; ++i)
          sum += SkeletonSpace::avoid_block(q, len - i, 0, r).count();
        CHECK(SkeletonSpace::avoid_block(q, len, 0, r).count() == (q - 1) * sum);
      }
}

TEST_CASE("count ratio converges to the dominant root") {
  for (int q : {2, 3})
    for (int r : {2, 3}) {
      const BigInt a = SkeletonSpace::avoid_block(q, 60, 0, r).count();
      const BigInt b = SkeletonSpace::avoid_block(q, 61, 0, r).count();
      const double ratio = b.convert_to<double>() / a.convert_to<double>();
      CHECK(std::abs(ratio - solve_z_r(q, r)) < 1e-6);
    }
}

TEST_CASE("bijection holds exhaustively on medium spaces") {
  check_against_oracle(SkeletonSpace::no_zero(3, 10));
  check_against_oracle(SkeletonSpace::avoid_block(3, 8, 1, 2));
  check_against_oracle(SkeletonSpace::exact_zeros(4, 7, 2));
  check_against_oracle(SkeletonSpace::exact_zeros(3, 8, 0));
}

TEST_CASE("exact-zeros ranks split into combination and word parts") {
  const auto space = SkeletonSpace::exact_zeros(3, 4, 1);
  // index 0: zeros leftmost, word all-1s
  CHECK(space.unrank(0) == std::vector<int>{0, 1, 1, 1});
  CHECK(space.unrank(space.count() - 1) == std::vector<int>{2, 2, 2, 0});
}

TEST_CASE("combinatorics helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(combination_rank(4, std::vector<int>{0, 1}) == 0);
  CHECK(combination_unrank(4, 2, 5) == std::vector<int>{2, 3});
  for (int idx = 0; idx < 6; ++idx)
    CHECK(combination_rank(4, combination_unrank(4, 2, idx)) == idx);
  CHECK(colex_rank({}) == 0);
  CHECK(colex_rank(std::vector<int>{0}) == 0);
  CHECK(colex_rank(std::vector<int>{1}) == 1);
  CHECK(colex_rank(std::vector<int>{0, 2}) == 1);
}

TEST_CASE("rejects bad inputs") {
  const auto space = SkeletonSpace::no_zero(3, 2);
  CHECK_THROWS(space.unrank(4));
  CHECK_THROWS(space.unrank(-1));
  const std::vector<int> bad{0, 1};
  CHECK_THROWS(space.rank(bad));
  CHECK_THROWS(SkeletonSpace::avoid_block(3, 4, 0, 0));
  CHECK_THROWS(SkeletonSpace::exact_zeros(3, 2, 3));
}
