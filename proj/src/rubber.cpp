#include "rubber/rubber.hpp"

#include <stdexcept>

#include "rubber/lebedev_session.hpp"

namespace rubber {

std::string to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::None: return "none";
    case ErrorKind::Standard: return "standard";
    case ErrorKind::TowardsRubber: return "towards_rubber";
    case ErrorKind::Correction: return "correction";
  }
  return "?";
}

void Transcript::add(const StepRecord& rec) {
  steps.push_back(rec);
  switch (rec.kind) {
    case ErrorKind::Standard: ++standard; break;
    case ErrorKind::TowardsRubber: ++towards_rubber; break;
    case ErrorKind::Correction: ++correction; break;
    case ErrorKind::None: break;
  }
}

bool receiver_step(std::vector<int>& stack, const RubberRule& rule, int q, int y) {
  if (y < 0 || y >= q) throw std::invalid_argument("receiver_step: symbol out of range");
  stack.push_back(y);
  // A push can complete a rubber run; a CorrectPrevious can in turn expose a
  // new completed run (the corrected entry becoming b), hence the loop.  Only
  // the trailing r entries are ever considered: a completed run never extends
  // backward.
  while (static_cast<int>(stack.size()) >= rule.r) {
    bool run = true;
    for (int i = 0; i < rule.r; ++i)
      if (stack[stack.size() - 1 - i] != rule.b) {
        run = false;
        break;
      }
    if (!run) break;
    stack.resize(stack.size() - rule.r);
    if (rule.action == RubberAction::DeletePrevious) {
      if (!stack.empty()) stack.pop_back();  // delete below empty stack: no-op
    } else {
      if (stack.empty()) return false;  // correction aimed at nothing
      const int v = stack.back() + rule.delta;
      if (v < 0 || v >= q) return false;  // correction leaves the alphabet
      stack.back() = v;
    }
  }
  return true;
}

std::optional<Method> parse_method(const std::string& token) {
  if (token == "rubber1") return Method::Rubber1;
  if (token == "rubberr") return Method::RubberR;
  if (token == "modified") return Method::ModifiedZ;
  if (token == "modified-invz") return Method::ModifiedInvZ;
  if (token == "lebedev") return Method::Lebedev;
  if (token == "unidir") return Method::Unidirectional;
  if (token == "broken") return Method::BrokenModified;
  return std::nullopt;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Rubber1: return "rubber1";
    case Method::RubberR: return "rubberr";
    case Method::ModifiedZ: return "modified";
    case Method::ModifiedInvZ: return "modified-invz";
    case Method::Lebedev: return "lebedev";
    case Method::Unidirectional: return "unidir";
    case Method::BrokenModified: return "broken";
  }
  return "?";
}

int lebedev_check_length(int q, int t, int z) {
  const BigInt variants = binomial(z + t, z);
  if (variants <= 1) return 0;
  if (q < 3)
    throw std::invalid_argument("lebedev: q >= 3 required when z > 0 and t > 0");
  int len = 0;
  BigInt reach = 1;
  while (reach < variants) {
    reach *= q - 1;
    ++len;
  }
  return len;
}

void validate_params(const CodeParams& p) {
  if (p.q < 2) throw std::invalid_argument("params: q >= 2 required");
  if (p.n < 1) throw std::invalid_argument("params: n >= 1 required");
  if (p.t < 0) throw std::invalid_argument("params: t >= 0 required");
  switch (p.method) {
    case Method::Rubber1:
      break;
    case Method::RubberR:
    case Method::Unidirectional:
      if (p.r < 1) throw std::invalid_argument("params: r >= 1 required");
      break;
    case Method::ModifiedZ:
    case Method::ModifiedInvZ:
    case Method::BrokenModified:
      if (p.r < 2) throw std::invalid_argument("params: modified rubber needs r >= 2");
      break;
    case Method::Lebedev:
      if (p.z < 0) throw std::invalid_argument("params: z >= 0 required");
      break;
  }
  const int len = skeleton_length(p);
  if (len < 0) throw std::invalid_argument("params: negative effective skeleton length");
  if (p.method == Method::Lebedev && p.z > len)
    throw std::invalid_argument("params: more information zeros than skeleton symbols");
}

int skeleton_length(const CodeParams& p) {
  switch (p.method) {
    case Method::Rubber1: return p.n - 2 * p.t;
    case Method::RubberR:
    case Method::Unidirectional: return p.n - (p.r + 1) * p.t;
    case Method::ModifiedZ:
    case Method::ModifiedInvZ:
    case Method::BrokenModified: return p.n - p.r * p.t;
    case Method::Lebedev:
      return p.n - 2 * p.t - lebedev_check_length(p.q, p.t, p.z);
  }
  return -1;
}

SkeletonSpace skeleton_space(const CodeParams& p) {
  const int len = skeleton_length(p);
  switch (p.method) {
    case Method::Rubber1: return SkeletonSpace::no_zero(p.q, len);
    case Method::RubberR:
    case Method::Unidirectional: return SkeletonSpace::avoid_block(p.q, len, 0, p.r);
    case Method::ModifiedZ:
    case Method::BrokenModified:
      return SkeletonSpace::avoid_block(p.q, len, p.q - 1, p.r);
    case Method::ModifiedInvZ: return SkeletonSpace::avoid_block(p.q, len, 0, p.r);
    case Method::Lebedev: return SkeletonSpace::exact_zeros(p.q, len, p.z);
  }
  throw std::logic_error("skeleton_space: unreachable");
}

BigInt message_capacity(const CodeParams& p) {
  validate_params(p);
  return skeleton_space(p).count();
}

ChannelKind channel_of(const CodeParams& p) {
  switch (p.method) {
    case Method::Rubber1:
    case Method::RubberR:
    case Method::Lebedev: return ChannelKind::symmetric(p.q);
    case Method::ModifiedZ:
    case Method::BrokenModified: return ChannelKind::z(p.q);
    case Method::ModifiedInvZ: return ChannelKind::inverse_z(p.q);
    case Method::Unidirectional: return ChannelKind::unidirectional(p.q);
  }
  throw std::logic_error("channel_of: unreachable");
}

namespace {

RubberRule rule_of(const CodeParams& p) {
  switch (p.method) {
    case Method::Rubber1: return {0, 1, RubberAction::DeletePrevious, 0};
    case Method::RubberR:
    case Method::Unidirectional: return {0, p.r, RubberAction::DeletePrevious, 0};
    case Method::ModifiedZ: return {p.q - 1, p.r, RubberAction::CorrectPrevious, +1};
    case Method::ModifiedInvZ: return {0, p.r, RubberAction::CorrectPrevious, -1};
    case Method::BrokenModified:
      return {p.q - 1, p.r, RubberAction::DeletePrevious, 0};  // wrong on purpose
    case Method::Lebedev: return {0, 1, RubberAction::DeletePrevious, 0};
  }
  throw std::logic_error("rule_of: unreachable");
}

// Padding after the skeleton.  The Z-side modified rubber pads with the
// lexicographically smallest symbol that can never complete a forbidden run
// (0, since b = q-1); the inverse-Z variant uses its complement q-1 so that
// the two automata stay symbol-wise complements of each other.
int pad_of(const CodeParams& p) {
  switch (p.method) {
    case Method::ModifiedZ:
    case Method::BrokenModified: return 0;
    case Method::ModifiedInvZ: return p.q - 1;
    default: return 1;  // nonzero, never completes a 0-run
  }
}

ErrorKind classify(int b, int sent, int received) {
  if (sent == received) return ErrorKind::None;
  if (received == b) return ErrorKind::TowardsRubber;
  if (sent == b) return ErrorKind::Correction;
  return ErrorKind::Standard;
}

class ClassicSession final : public Session {
 public:
  ClassicSession(const CodeParams& p, std::shared_ptr<const SkeletonSpace> space,
                 std::vector<int> skeleton)
      : q_(p.q),
        n_(p.n),
        rule_(rule_of(p)),
        pad_(pad_of(p)),
        space_(std::move(space)),
        skeleton_(std::move(skeleton)) {}

  std::unique_ptr<Session> clone() const override {
    return std::make_unique<ClassicSession>(*this);
  }

  int next_symbol() const override {
    return on_target() ? target_at(stack_.size()) : rule_.b;
  }

  void receive(int y) override {
    const int sent = next_symbol();
    if (!on_target()) ++repairs_;
    tr_.add({static_cast<int>(tr_.steps.size()), sent, y, classify(rule_.b, sent, y)});
    if (!receiver_step(stack_, rule_, q_, y)) violated_ = true;
  }

  int steps_taken() const override { return static_cast<int>(tr_.steps.size()); }

  std::optional<BigInt> decode() const override {
    const int len = static_cast<int>(skeleton_.size());
    if (violated_ || static_cast<int>(stack_.size()) < len) return std::nullopt;
    std::span<const int> head(stack_.data(), len);
    if (!space_->contains(head)) return std::nullopt;
    return space_->rank(head);
  }

  const Transcript& transcript() const override { return tr_; }
  std::vector<int> stack_view() const override { return stack_; }
  bool violated() const override { return violated_; }
  int repair_symbols() const override { return repairs_; }

 private:
  int target_at(size_t i) const {
    return i < skeleton_.size() ? skeleton_[i] : pad_;
  }
  bool on_target() const {
    for (size_t i = 0; i < stack_.size(); ++i)
      if (stack_[i] != target_at(i)) return false;
    return true;
  }

  int q_, n_;
  RubberRule rule_;
  int pad_;
  std::shared_ptr<const SkeletonSpace> space_;
  std::vector<int> skeleton_;
  std::vector<int> stack_;
  Transcript tr_;
  bool violated_ = false;
  int repairs_ = 0;
};

}  // namespace

Coder::Coder(CodeParams p) : params_(p) { validate_params(params_); }

BigInt Coder::message_count() const { return message_capacity(params_); }

ChannelKind Coder::channel() const { return channel_of(params_); }

std::vector<Direction> Coder::directions() const {
  if (params_.method == Method::Unidirectional)
    return {Direction::Down, Direction::Up};
  return {Direction::Down};
}

std::unique_ptr<Session> Coder::start(const BigInt& message) const {
  auto space = std::make_shared<const SkeletonSpace>(skeleton_space(params_));
  if (message < 0 || message >= space->count())
    throw std::out_of_range("coder: message index out of range");
  if (params_.method == Method::Lebedev)
    return std::make_unique<LebedevSession>(params_, space, space->unrank(message));
  return std::make_unique<ClassicSession>(params_, space, space->unrank(message));
}

}  // namespace rubber
