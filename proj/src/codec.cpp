#include "rubber/codec.hpp"

#include <stdexcept>

namespace rubber {

namespace {

BigInt ipow(BigInt base, int exp) {
  BigInt out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

SkeletonSpace::SkeletonSpace(Kind k, int q, int length, int b, int r, int z)
    : kind_(k), q_(q), length_(length), block_symbol_(b), run_(r), zeros_(z) {
  if (q < 2) throw std::invalid_argument("skeleton space: q >= 2 required");
  if (length < 0) throw std::invalid_argument("skeleton space: negative length");
  if (k == Kind::ExactZeros) {
    if (z < 0 || z > length)
      throw std::invalid_argument("skeleton space: zeros out of range");
    return;
  }
  if (b < 0 || b >= q) throw std::invalid_argument("skeleton space: bad block symbol");
  if (r < 1) throw std::invalid_argument("skeleton space: run >= 1 required");
  // completions_[len][run]: runs 0..r-1 are the admissible trailing-run states.
  completions_.assign(length + 1, std::vector<BigInt>(r, 0));
  for (int run = 0; run < r; ++run) completions_[0][run] = 1;
  for (int len = 1; len <= length; ++len)
    for (int run = 0; run < r; ++run) {
      BigInt total = BigInt(q - 1) * completions_[len - 1][0];
      if (run + 1 < r) total += completions_[len - 1][run + 1];
      completions_[len][run] = total;
    }
}

SkeletonSpace SkeletonSpace::no_zero(int q, int length) {
  return SkeletonSpace(Kind::NoZero, q, length, 0, 1, 0);
}
SkeletonSpace SkeletonSpace::avoid_block(int q, int length, int b, int r) {
  return SkeletonSpace(Kind::AvoidBlock, q, length, b, r, 0);
}
SkeletonSpace SkeletonSpace::exact_zeros(int q, int length, int z) {
  return SkeletonSpace(Kind::ExactZeros, q, length, 0, 1, z);
}

BigInt SkeletonSpace::count() const {
  if (kind_ == Kind::ExactZeros)
    return binomial(length_, zeros_) * ipow(q_ - 1, length_ - zeros_);
  return completions_[length_][0];
}

bool SkeletonSpace::contains(std::span<const int> seq) const {
  if (static_cast<int>(seq.size()) != length_) return false;
  for (int s : seq)
    if (s < 0 || s >= q_) return false;
  if (kind_ == Kind::ExactZeros) {
    int z = 0;
    for (int s : seq) z += (s == 0);
    return z == zeros_;
  }
  int run = 0;
  for (int s : seq) {
    run = (s == block_symbol_) ? run + 1 : 0;
    if (run >= run_) return false;
  }
  return true;
}

std::vector<int> SkeletonSpace::unrank(const BigInt& index) const {
  if (index < 0 || index >= count())
    throw std::out_of_range("skeleton space: unrank index out of range");
  std::vector<int> seq(length_);
  if (kind_ == Kind::ExactZeros) {
    const BigInt words = ipow(q_ - 1, length_ - zeros_);
    const BigInt comb_idx = index / words;
    BigInt word_idx = index % words;
    std::vector<int> positions = combination_unrank(length_, zeros_, comb_idx);
    std::vector<bool> is_zero(length_, false);
    for (int p : positions) is_zero[p] = true;
    // nonzero word, most significant digit first
    std::vector<int> digits(length_ - zeros_, 0);
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(word_idx % (q_ - 1));
      word_idx /= (q_ - 1);
    }
    int d = 0;
    for (int i = 0; i < length_; ++i) seq[i] = is_zero[i] ? 0 : digits[d++] + 1;
    return seq;
  }
  BigInt rest = index;
  int run = 0;
  for (int i = 0; i < length_; ++i) {
    for (int c = 0; c < q_; ++c) {
      int next_run = (c == block_symbol_) ? run + 1 : 0;
      if (next_run >= run_) continue;  // inadmissible branch
      const BigInt below = completions_[length_ - i - 1][next_run];
      if (rest < below) {
        seq[i] = c;
        run = next_run;
        break;
      }
      rest -= below;
    }
  }
  return seq;
}

BigInt SkeletonSpace::rank(std::span<const int> seq) const {
  if (!contains(seq)) throw std::invalid_argument("skeleton space: rank of inadmissible sequence");
  if (kind_ == Kind::ExactZeros) {
    std::vector<int> positions;
    BigInt word = 0;
    for (int i = 0; i < length_; ++i) {
      if (seq[i] == 0)
        positions.push_back(i);
      else
        word = word * (q_ - 1) + (seq[i] - 1);
    }
    return combination_rank(length_, positions) * ipow(q_ - 1, length_ - zeros_) + word;
  }
  BigInt acc = 0;
  int run = 0;
  for (int i = 0; i < length_; ++i) {
    for (int c = 0; c < seq[i]; ++c) {
      int next_run = (c == block_symbol_) ? run + 1 : 0;
      if (next_run >= run_) continue;
      acc += completions_[length_ - i - 1][next_run];
    }
    run = (seq[i] == block_symbol_) ? run + 1 : 0;
  }
  return acc;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt combination_rank(int n, std::span<const int> positions) {
  const int z = static_cast<int>(positions.size());
  BigInt acc = 0;
  int prev = -1;
  for (int i = 0; i < z; ++i) {
    for (int p = prev + 1; p < positions[i]; ++p)
      acc += binomial(n - p - 1, z - i - 1);
    prev = positions[i];
  }
  return acc;
}

std::vector<int> combination_unrank(int n, int z, const BigInt& index) {
  if (index < 0 || index >= binomial(n, z))
    throw std::out_of_range("combination_unrank: index out of range");
  std::vector<int> positions;
  BigInt rest = index;
  int p = 0;
  for (int i = 0; i < z; ++i) {
    for (;; ++p) {
      const BigInt below = binomial(n - p - 1, z - i - 1);
      if (rest < below) break;
      rest -= below;
    }
    positions.push_back(p++);
  }
  return positions;
}

BigInt colex_rank(std::span<const int> positions) {
  BigInt acc = 0;
  for (size_t i = 0; i < positions.size(); ++i)
    acc += binomial(positions[i], static_cast<int>(i) + 1);
  return acc;
}

}  // namespace rubber
