#include "rubber/lebedev_session.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rubber {

namespace {

ErrorKind classify0(int sent, int received) {
  if (sent == received) return ErrorKind::None;
  if (received == 0) return ErrorKind::TowardsRubber;
  if (sent == 0) return ErrorKind::Correction;
  return ErrorKind::Standard;
}

}  // namespace

LebedevSession::LebedevSession(const CodeParams& p,
                               std::shared_ptr<const SkeletonSpace> space,
                               std::vector<int> skeleton)
    : params_(p),
      content_len_(skeleton_length(p)),
      check_len_(lebedev_check_length(p.q, p.t, p.z)),
      space_(std::move(space)),
      skeleton_(std::move(skeleton)) {}

std::unique_ptr<Session> LebedevSession::clone() const {
  return std::make_unique<LebedevSession>(*this);
}

// Rank, in colex order, of the content-zero indices within the temporal list
// of all received zeros.  Later zeros never change the rank of an already
// delivered set, and content zeros are never retro-deleted, so digits stay
// valid from the moment they can first be sent.
std::vector<int> LebedevSession::check_digits() const {
  if (check_len_ == 0) return {};
  BigInt value = colex_rank(info_pool_);
  std::vector<int> digits(check_len_, 1);
  for (int i = check_len_ - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(value % (params_.q - 1)) + 1;
    value /= params_.q - 1;
  }
  return digits;
}

int LebedevSession::target_at(size_t i) const {
  if (i < static_cast<size_t>(content_len_)) return skeleton_[i];
  size_t off = i - content_len_;
  if (off < static_cast<size_t>(extra_ones_)) return 1;
  off -= extra_ones_;
  if (off < static_cast<size_t>(check_len_)) return check_digits()[off];
  return 1;
}

bool LebedevSession::on_target() const {
  for (size_t i = 0; i < stack_.size(); ++i)
    if (stack_[i] != target_at(i)) return false;
  return true;
}

int LebedevSession::next_symbol() const {
  return on_target() ? target_at(stack_.size()) : 0;
}

void LebedevSession::receive(int y) {
  if (y < 0 || y >= params_.q) throw std::invalid_argument("lebedev: symbol out of range");
  const bool aligned = on_target();
  const int sent = aligned ? target_at(stack_.size()) : 0;
  if (!aligned) ++repairs_;
  tr_.add({static_cast<int>(tr_.steps.size()), sent, y, classify0(sent, y)});
  raw_.push_back(y);
  if (y != 0) {
    stack_.push_back(y);
    return;
  }
  const int idx = static_cast<int>(std::count(raw_.begin(), raw_.end(), 0)) - 1;
  if (sent == 0 && aligned) {
    stack_.push_back(0);  // content zero, stands for good
    info_pool_.push_back(idx);
  } else if (!stack_.empty()) {
    // Deliberate rubber and channel-created zeros both delete the previous
    // symbol; the sender re-sends whatever was lost.  A deleted content zero
    // leaves the pool (it was the most recent pool entry) and re-enters it
    // when re-sent; no check digit can be standing at that point, since the
    // digits above it would have been deleted first.
    if (stack_.back() == 0) info_pool_.pop_back();
    stack_.pop_back();
  } else if (sent != 0) {
    // Channel zero with nothing to delete: announce it with one extra 1
    // before the check digits, so the check position itself distinguishes
    // this transmission from one whose skeleton starts differently.
    ++extra_ones_;
  }
}

int LebedevSession::steps_taken() const { return static_cast<int>(tr_.steps.size()); }

std::optional<BigInt> LebedevSession::decode() const {
  int zeros = 0;
  for (int y : raw_)
    if (y == 0) ++zeros;
  if (zeros > 22) return std::nullopt;  // enumeration guard
  // Candidate skeletons from every zero designation (content vs deletion),
  // then exact validation: replay the deterministic sender for the candidate
  // against the raw stream and count implied channel errors.
  std::set<BigInt> candidates;
  for (unsigned long mask = 0; mask < (1ul << zeros); ++mask) {
    std::vector<int> r;
    int zi = 0;
    for (int y : raw_) {
      if (y != 0) {
        r.push_back(y);
      } else {
        if (mask >> zi & 1u)
          r.push_back(0);
        else if (!r.empty())
          r.pop_back();
        ++zi;
      }
    }
    if (static_cast<int>(r.size()) < content_len_) continue;
    std::span<const int> head(r.data(), content_len_);
    if (!space_->contains(head)) continue;
    candidates.insert(space_->rank(head));
  }
  std::optional<BigInt> found;
  for (const BigInt& cand : candidates) {
    LebedevSession sim(params_, space_, space_->unrank(cand));
    int errors = 0;
    for (int y : raw_) {
      if (sim.next_symbol() != y) ++errors;
      sim.receive(y);
    }
    if (errors > params_.t) continue;
    if (found) return std::nullopt;  // ambiguous
    found = cand;
  }
  return found;
}

const Transcript& LebedevSession::transcript() const { return tr_; }

std::vector<int> LebedevSession::stack_view() const { return stack_; }

bool LebedevSession::violated() const { return false; }

int LebedevSession::repair_symbols() const { return repairs_; }

}  // namespace rubber
