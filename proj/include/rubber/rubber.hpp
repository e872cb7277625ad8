#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rubber/channel.hpp"
#include "rubber/codec.hpp"

namespace rubber {

// Classified relative to the rubber symbol b of the running code:
//   TowardsRubber - received == b, sent != b
//   Correction    - sent == b, received != b
//   Standard      - any other corruption
enum class ErrorKind { None, Standard, TowardsRubber, Correction };

std::string to_string(ErrorKind k);

struct StepRecord {
  int position = 0;  // 0-based
  int sent = 0;
  int received = 0;
  ErrorKind kind = ErrorKind::None;
};

struct Transcript {
  std::vector<StepRecord> steps;
  int standard = 0;
  int towards_rubber = 0;
  int correction = 0;

  int errors() const { return standard + towards_rubber + correction; }
  void add(const StepRecord& rec);
};

enum class RubberAction { DeletePrevious, CorrectPrevious };

struct RubberRule {
  int b = 0;          // rubber symbol
  int r = 1;          // run length that triggers the rule
  RubberAction action = RubberAction::DeletePrevious;
  int delta = 0;      // CorrectPrevious: added to the exposed entry
};

// One receiver-automaton step: push y; while the top r entries all equal b,
// pop them and apply the action to the exposed entry (DeletePrevious pops it,
// CorrectPrevious adds delta).  Deleting below an empty stack is a no-op.
// Returns false on an automaton violation: a correction aimed at an empty
// stack or one that leaves the alphabet {0..q-1}.
bool receiver_step(std::vector<int>& stack, const RubberRule& rule, int q, int y);

enum class Method {
  Rubber1,         // 1-rubber, symmetric channel, delete-previous
  RubberR,         // r-rubber, symmetric channel, delete-previous
  ModifiedZ,       // A(r, q-1) on Z(q), correct +1, no retransmission
  ModifiedInvZ,    // A(r, 0) on InverseZ(q), correct -1
  Lebedev,         // generalized 1-rubber with information zeros
  Unidirectional,  // direction-agnostic r-rubber on the unidirectional channel
  BrokenModified,  // ModifiedZ with delete-previous: verifier soundness probe
};

std::optional<Method> parse_method(const std::string& token);
std::string to_string(Method m);

struct CodeParams {
  Method method = Method::Rubber1;
  int q = 2;
  int n = 1;
  int t = 0;
  int r = 1;  // RubberR/Modified*/Unidirectional
  int z = 0;  // Lebedev: number of information zeros
};

// Throws std::invalid_argument when the parameter set is unusable (negative
// effective length, r out of range, ...).
void validate_params(const CodeParams& p);

int skeleton_length(const CodeParams& p);
SkeletonSpace skeleton_space(const CodeParams& p);
BigInt message_capacity(const CodeParams& p);
ChannelKind channel_of(const CodeParams& p);

// Lebedev: digits of the check sequence h (ceil(log_{q-1} C(z+t, z))).
int lebedev_check_length(int q, int t, int z);

// One codeword transmission.  Drive it with n rounds of
// next_symbol()/receive(y); both endpoints of the protocol are simulated (the
// sender sees y via the noiseless feedback).  Deterministic in
// (message, received prefix), which the exhaustive verifier relies on.
class Session {
 public:
  virtual ~Session() = default;
  virtual std::unique_ptr<Session> clone() const = 0;

  virtual int next_symbol() const = 0;
  virtual void receive(int y) = 0;
  virtual int steps_taken() const = 0;

  // Valid once all n symbols are through; nullopt = decoding failure.
  virtual std::optional<BigInt> decode() const = 0;

  virtual const Transcript& transcript() const = 0;
  // Receiver stack view (Lebedev: the reconstructed sequence so far).
  virtual std::vector<int> stack_view() const = 0;
  virtual bool violated() const = 0;       // automaton violation observed
  virtual int repair_symbols() const = 0;  // symbols spent off the target
};

class Coder {
 public:
  explicit Coder(CodeParams p);

  const CodeParams& params() const { return params_; }
  BigInt message_count() const;
  ChannelKind channel() const;
  std::vector<Direction> directions() const;  // adversary direction choices
  std::unique_ptr<Session> start(const BigInt& message) const;

 private:
  CodeParams params_;
};

}  // namespace rubber
