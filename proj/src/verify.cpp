#include "rubber/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "rubber/bounds.hpp"

namespace rubber {

namespace {

ErrorPattern pattern_of(const Transcript& tr, int n, std::optional<Direction> dir) {
  ErrorPattern p;
  p.length = n;
  p.direction = dir;
  for (const StepRecord& s : tr.steps)
    if (s.received != s.sent) p.overrides.push_back({s.position, s.received});
  return p;
}

struct SearchCtx {
  const Coder* coder;
  int n, t;
  std::uint64_t cap;
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<int> max_shortfall{0};
  std::atomic<std::int64_t> towards_rubber{0};
  std::atomic<bool> stop{false};
  bool cap_exceeded = false;
  std::optional<Counterexample> counterexample;
  std::mutex mu;
};

void dfs(SearchCtx& ctx, const ChannelGraph& g, std::unique_ptr<Session> s,
         int budget, const BigInt& msg, std::optional<Direction> dir) {
  while (s->steps_taken() < ctx.n) {
    if (ctx.stop.load(std::memory_order_relaxed)) return;
    const int x = s->next_symbol();
    if (budget > 0) {
      for (int y : allowed_outputs(g, x)) {
        if (y == x) continue;
        auto child = s->clone();
        child->receive(y);
        dfs(ctx, g, std::move(child), budget - 1, msg, dir);
        if (ctx.stop.load(std::memory_order_relaxed)) return;
      }
    }
    s->receive(x);  // once the budget is spent the tail is deterministic
  }
  const std::uint64_t seen = ctx.leaves.fetch_add(1) + 1;
  if (seen > ctx.cap) {
    std::lock_guard<std::mutex> lk(ctx.mu);
    ctx.cap_exceeded = true;
    ctx.stop.store(true);
    return;
  }
  const int shortfall = std::max(
      0, skeleton_length(ctx.coder->params()) -
             static_cast<int>(s->stack_view().size()));
  int seen_max = ctx.max_shortfall.load(std::memory_order_relaxed);
  while (shortfall > seen_max &&
         !ctx.max_shortfall.compare_exchange_weak(seen_max, shortfall)) {
  }
  ctx.towards_rubber.fetch_add(s->transcript().towards_rubber,
                               std::memory_order_relaxed);
  const auto decoded = s->decode();
  if (!decoded || *decoded != msg) {
    std::lock_guard<std::mutex> lk(ctx.mu);
    if (!ctx.counterexample)
      ctx.counterexample = {msg, pattern_of(s->transcript(), ctx.n, dir), decoded};
    ctx.stop.store(true);
  }
}

void verify_messages(SearchCtx& ctx, const BigInt& total, int stride, int offset) {
  const CodeParams p = ctx.coder->params();
  const bool unidir = p.method == Method::Unidirectional;
  for (BigInt msg = offset; msg < total; msg += stride) {
    if (ctx.stop.load(std::memory_order_relaxed)) return;
    for (Direction dir : ctx.coder->directions()) {
      std::optional<Direction> tag = unidir ? std::optional<Direction>(dir) : std::nullopt;
      const ChannelGraph g = build_graph(ctx.coder->channel(), dir);
      dfs(ctx, g, ctx.coder->start(msg), ctx.t, msg, tag);
      if (ctx.stop.load(std::memory_order_relaxed)) return;
    }
  }
}

BigInt draw_message(std::mt19937_64& rng, const BigInt& total) {
  if (total <= 1) return 0;
  BigInt wide = 0;
  for (int i = 0; i < 4; ++i) wide = (wide << 64) | BigInt(rng());
  return wide % total;
}

}  // namespace

std::unique_ptr<Session> run_pattern(const Coder& coder, const BigInt& message,
                                     const ErrorPattern& pattern) {
  const CodeParams p = coder.params();
  for (const auto& [pos, sym] : pattern.overrides) {
    if (pos < 0 || pos >= p.n) throw std::out_of_range("pattern: position out of range");
    if (sym < 0 || sym >= p.q) throw std::out_of_range("pattern: symbol out of range");
  }
  auto session = coder.start(message);
  for (int i = 0; i < p.n; ++i) {
    int y = session->next_symbol();
    for (const auto& [pos, sym] : pattern.overrides)
      if (pos == i) y = sym;
    session->receive(y);
  }
  return session;
}

VerificationReport verify_exhaustive(const Coder& coder, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const CodeParams p = coder.params();

  VerificationReport rep;
  rep.params = p;
  rep.messages = coder.message_count();
  rep.rate = rate_of(rep.messages, p.q, p.n);
  if (p.method == Method::Unidirectional)
    rep.reference_rate =
        modified_rubber_rate(static_cast<double>(p.t) / p.n, p.q, std::max(p.r, 2));

  SearchCtx ctx;
  ctx.coder = &coder;
  ctx.n = p.n;
  ctx.t = p.t;
  ctx.cap = opts.leaf_cap;

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    verify_messages(ctx, rep.messages, 1, 0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&ctx, &rep, jobs, j] { verify_messages(ctx, rep.messages, jobs, j); });
    for (auto& th : pool) th.join();
  }

  rep.leaves = std::min<std::uint64_t>(ctx.leaves.load(), ctx.cap);
  rep.max_stack_shortfall = ctx.max_shortfall.load();
  rep.towards_rubber = ctx.towards_rubber.load();
  rep.cap_exceeded = ctx.cap_exceeded;
  rep.counterexample = ctx.counterexample;
  rep.success = !ctx.cap_exceeded && !ctx.counterexample;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SimulationReport simulate_random(const Coder& coder, int trials, std::uint64_t seed) {
  const CodeParams p = coder.params();
  const BigInt total = coder.message_count();
  const auto dirs = coder.directions();
  const bool unidir = p.method == Method::Unidirectional;

  SimulationReport rep;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (trial + 1));
    const BigInt msg = draw_message(rng, total);
    const Direction dir = dirs[rng() % dirs.size()];
    const ChannelGraph g = build_graph(coder.channel(), dir);

    auto session = coder.start(msg);
    int budget = p.t;
    for (int i = 0; i < p.n; ++i) {
      const int x = session->next_symbol();
      int y = x;
      if (budget > 0) {
        const auto outs = allowed_outputs(g, x);
        y = outs[rng() % outs.size()];
        if (y != x) --budget;
      }
      session->receive(y);
    }
    const auto decoded = session->decode();
    rep.total_errors += session->transcript().errors();
    rep.total_repairs += session->repair_symbols();
    if (decoded && *decoded == msg) {
      ++rep.successes;
    } else {
      ++rep.failures;
      if (!rep.first_failure) {
        std::optional<Direction> tag = unidir ? std::optional<Direction>(dir) : std::nullopt;
        rep.first_failure = {msg, pattern_of(session->transcript(), p.n, tag), decoded};
      }
    }
  }
  return rep;
}

std::uint64_t symmetric_leaf_count(int q, int n, int t) {
  // L(s, b), s = steps remaining, b = budget remaining
  std::vector<std::vector<std::uint64_t>> l(n + 1, std::vector<std::uint64_t>(t + 1, 1));
  for (int s = 1; s <= n; ++s)
    for (int b = 1; b <= t; ++b)
      l[s][b] = static_cast<std::uint64_t>(q - 1) * l[s - 1][b - 1] + l[s - 1][b];
  return l[n][t];
}

double rate_of(const BigInt& messages, int q, int n) {
  if (messages <= 1 || n <= 0) return 0.0;
  const std::size_t bits = boost::multiprecision::msb(messages);
  double lg2;
  if (bits <= 900) {
    lg2 = std::log2(messages.convert_to<double>());
  } else {
    const BigInt top = messages >> (bits - 52);
    lg2 = static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
  }
  return lg2 / (std::log2(static_cast<double>(q)) * n);
}

}  // namespace rubber
