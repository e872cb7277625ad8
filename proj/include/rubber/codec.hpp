#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

namespace rubber {

using BigInt = boost::multiprecision::cpp_int;

// A family of admissible skeleton sequences of a fixed length over {0..q-1},
// with exact counting and a lexicographic rank/unrank bijection.
//
//   NoZero       - no symbol equals 0 (alphabet {1..q-1})
//   AvoidBlock   - no r consecutive copies of a designated symbol b
//   ExactZeros   - exactly z symbols equal 0, the rest in {1..q-1}
//
// NoZero is AvoidBlock(b=0, r=1); it shares that implementation so the two
// countings can never disagree.
class SkeletonSpace {
 public:
  enum class Kind { NoZero, AvoidBlock, ExactZeros };

  static SkeletonSpace no_zero(int q, int length);
  static SkeletonSpace avoid_block(int q, int length, int block_symbol, int run);
  static SkeletonSpace exact_zeros(int q, int length, int zeros);

  Kind kind() const { return kind_; }
  int q() const { return q_; }
  int length() const { return length_; }
  int block_symbol() const { return block_symbol_; }
  int run() const { return run_; }
  int zeros() const { return zeros_; }

  BigInt count() const;
  bool contains(std::span<const int> seq) const;

  // Lexicographic for NoZero/AvoidBlock.  ExactZeros uses a two-part index:
  // rank = rank(zero positions) * (q-1)^(length-z) + rank(nonzero word).
  std::vector<int> unrank(const BigInt& index) const;
  BigInt rank(std::span<const int> seq) const;

 private:
  SkeletonSpace(Kind k, int q, int length, int b, int r, int z);

  Kind kind_;
  int q_, length_, block_symbol_, run_, zeros_;
  // completions_[len][run] = number of admissible suffixes of this length
  // given a current trailing run of block_symbol_ (AvoidBlock/NoZero only).
  std::vector<std::vector<BigInt>> completions_;
};

// Binomial coefficient, exact.
BigInt binomial(int n, int k);

// Lexicographic rank/unrank of z-subsets of {0..n-1}, ascending positions.
BigInt combination_rank(int n, std::span<const int> positions);
std::vector<int> combination_unrank(int n, int z, const BigInt& index);

// Colexicographic subset rank: sum of C(p_i, i+1) over the i-th smallest
// position p_i.  Stable under extending the ground set on the right; for
// positions drawn from {0..m-1} the rank is < C(m, z).
BigInt colex_rank(std::span<const int> positions);

}  // namespace rubber
