#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rubber/rubber.hpp"

namespace rubber {

struct Counterexample {
  BigInt message;
  ErrorPattern pattern;
  std::optional<BigInt> decoded;  // empty when decoding failed outright
};

struct VerifyOptions {
  std::uint64_t leaf_cap = 1000000000ull;
  int jobs = 1;
};

struct VerificationReport {
  CodeParams params;
  BigInt messages = 0;
  std::uint64_t leaves = 0;
  bool success = false;
  bool cap_exceeded = false;
  std::optional<Counterexample> counterexample;
  int max_stack_shortfall = 0;        // skeleton entries missing at the worst leaf
  std::int64_t towards_rubber = 0;    // summed over leaf transcripts
  double seconds = 0.0;
  double rate = 0.0;  // log_q(messages)/n
  // Set for the unidirectional method: the rate the r-repair modified scheme
  // would reach at the same q, r, tau = t/n.  The gap is the price of not
  // knowing the error direction in advance.
  std::optional<double> reference_rate;
};

struct SimulationReport {
  int trials = 0;
  int successes = 0;
  int failures = 0;
  std::int64_t total_errors = 0;
  std::int64_t total_repairs = 0;
  std::optional<Counterexample> first_failure;
};

// Adversarial run: replay a fixed error pattern against one message.
// Returns the finished session (exactly n steps).
std::unique_ptr<Session> run_pattern(const Coder& coder, const BigInt& message,
                                     const ErrorPattern& pattern);

// Search every message and every admissible adaptive error pattern.
VerificationReport verify_exhaustive(const Coder& coder, const VerifyOptions& opts = {});

// Monte-Carlo runs with a random budget-limited adversary.
SimulationReport simulate_random(const Coder& coder, int trials, std::uint64_t seed);

// Count leaves of the adaptive adversary tree without running sessions:
// L(s, b) = (q-1) L(s-1, b-1) + L(s-1, b), L(., 0) = L(0, .) = 1.
// Valid for the fully symmetric channel (every step has q-1 corruptions).
std::uint64_t symmetric_leaf_count(int q, int n, int t);

double rate_of(const BigInt& messages, int q, int n);

}  // namespace rubber
