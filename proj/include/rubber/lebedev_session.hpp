#pragma once

#include <memory>
#include <vector>

#include "rubber/rubber.hpp"

namespace rubber {

// Zero-skeleton session: the skeleton itself contains exactly z zeros, so a
// received zero is ambiguous between information symbol, deliberate rubber,
// and a channel-created zero.  All zero decisions are deferred: information
// zeros stand, rubber zeros retro-delete the symbol before them, channel
// zeros are struck out entirely.  The sender appends one extra 1 per channel
// zero before the check digits, so the check position itself distinguishes
// transmissions that would otherwise collide, and the check digits (over
// {1..q-1}) rank which zeros were content.
class LebedevSession final : public Session {
 public:
  LebedevSession(const CodeParams& p, std::shared_ptr<const SkeletonSpace> space,
                 std::vector<int> skeleton);

  std::unique_ptr<Session> clone() const override;
  int next_symbol() const override;
  void receive(int y) override;
  int steps_taken() const override;
  std::optional<BigInt> decode() const override;
  const Transcript& transcript() const override;
  std::vector<int> stack_view() const override;
  bool violated() const override;
  int repair_symbols() const override;

 private:
  int target_at(size_t i) const;
  bool on_target() const;
  std::vector<int> check_digits() const;

  CodeParams params_;
  int content_len_ = 0;  // skeleton symbols
  int check_len_ = 0;    // checksum digits
  std::shared_ptr<const SkeletonSpace> space_;
  std::vector<int> skeleton_;
  std::vector<int> raw_;        // every received symbol, in order
  std::vector<int> stack_;      // resolved view after deferred zero handling
  std::vector<int> info_pool_;  // zero-pool indices of delivered content zeros
  int extra_ones_ = 0;          // channel zeros seen before the check digits
  Transcript tr_;
  int repairs_ = 0;
};

}  // namespace rubber
