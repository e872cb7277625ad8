#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rubber/bounds.hpp"
#include "rubber/rubber.hpp"
#include "rubber/verify.hpp"

namespace {

using namespace rubber;

constexpr int kUsageError = 64;

struct MethodArgs {
  std::string method = "rubber1";
  int q = 2, n = 8, t = 1, r = 2, z = 0;
};

void add_method_flags(CLI::App* cmd, MethodArgs& a) {
  cmd->add_option("--method", a.method,
                  "rubber1|rubberr|modified|modified-invz|lebedev|unidir|broken");
  cmd->add_option("--q", a.q, "alphabet size")->required();
  cmd->add_option("--n", a.n, "block length")->required();
  cmd->add_option("--t", a.t, "error budget")->required();
  cmd->add_option("--r", a.r, "rubber run length");
  cmd->add_option("--z", a.z, "content zeros (lebedev only)");
}

CodeParams params_of(const MethodArgs& a) {
  const auto m = parse_method(a.method);
  if (!m) throw CLI::ValidationError("--method", "unknown method '" + a.method + "'");
  if (a.z != 0 && *m != Method::Lebedev)
    throw CLI::ValidationError("--z", "only valid with --method lebedev");
  return CodeParams{*m, a.q, a.n, a.t, a.r, a.z};
}

std::string errors_string(const ErrorPattern& p) {
  if (p.overrides.empty()) return "none";
  std::ostringstream out;
  for (std::size_t i = 0; i < p.overrides.size(); ++i) {
    if (i) out << ',';
    out << p.overrides[i].first << ':' << p.overrides[i].second;
  }
  return out.str();
}

// "none" | "random:<seed>" | "<pos>:<sym>,<pos>:<sym>,..."  (0-based positions)
struct ErrorSpec {
  bool random = false;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, int>> overrides;
};

ErrorSpec parse_errors(const std::string& s) {
  ErrorSpec spec;
  if (s == "none") return spec;
  if (s.rfind("random:", 0) == 0) {
    spec.random = true;
    spec.seed = std::stoull(s.substr(7));
    return spec;
  }
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--errors", "expected <pos>:<symbol> entries");
    spec.overrides.emplace_back(std::stoi(item.substr(0, colon)),
                                std::stoi(item.substr(colon + 1)));
  }
  return spec;
}

void print_transcript(const Coder& coder, Session& session,
                      const std::vector<int>& received, const BigInt& message) {
  for (int i = 0; i < coder.params().n; ++i) {
    session.receive(received[i]);
    const StepRecord& rec = session.transcript().steps.back();
    std::printf("step %d sent=%d received=%d kind=%s stack=", i, rec.sent,
                rec.received, to_string(rec.kind).c_str());
    const auto stack = session.stack_view();
    for (std::size_t k = 0; k < stack.size(); ++k)
      std::printf(k ? ",%d" : "%d", stack[k]);
    std::printf("\n");
  }
  const auto decoded = session.decode();
  if (decoded && *decoded == message) {
    std::printf("verdict OK message=%s\n", message.str().c_str());
  } else {
    std::printf("verdict FAIL expected=%s decoded=%s\n", message.str().c_str(),
                decoded ? decoded->str().c_str() : "none");
  }
}

int run_count(const MethodArgs& a) {
  const Coder coder(params_of(a));
  const BigInt m = coder.message_count();
  std::printf("M=%s rate=%.6f\n", m.str().c_str(), rate_of(m, a.q, a.n));
  return 0;
}

int run_verify(const MethodArgs& a, std::uint64_t cap, int jobs) {
  const Coder coder(params_of(a));
  VerifyOptions opts;
  opts.leaf_cap = cap;
  opts.jobs = jobs;
  const VerificationReport rep = verify_exhaustive(coder, opts);
  std::printf("method=%s q=%d n=%d t=%d r=%d z=%d messages=%s rate=%.6f\n",
              to_string(rep.params.method).c_str(), rep.params.q, rep.params.n,
              rep.params.t, rep.params.r, rep.params.z, rep.messages.str().c_str(),
              rep.rate);
  if (rep.reference_rate)
    std::printf("reference_rate=%.6f shortfall=%.6f\n", *rep.reference_rate,
                *rep.reference_rate - rep.rate);
  std::printf("leaves=%llu seconds=%.3f\n",
              static_cast<unsigned long long>(rep.leaves), rep.seconds);
  if (rep.cap_exceeded) {
    std::printf("result=cap-exceeded\n");
    return 2;
  }
  if (rep.counterexample) {
    const Counterexample& ce = *rep.counterexample;
    std::printf("result=counterexample message=%s errors=%s", ce.message.str().c_str(),
                errors_string(ce.pattern).c_str());
    if (ce.pattern.direction)
      std::printf(" direction=%s",
                  *ce.pattern.direction == Direction::Down ? "down" : "up");
    std::printf(" decoded=%s\n", ce.decoded ? ce.decoded->str().c_str() : "none");
    return 1;
  }
  std::printf("result=success\n");
  return 0;
}

int run_replay(const MethodArgs& a, const std::string& message_str,
               const std::string& errors_str, const std::string& direction_str) {
  const CodeParams p = params_of(a);
  const Coder coder(p);
  const BigInt message(message_str);
  if (message < 0 || message >= coder.message_count())
    throw CLI::ValidationError("--message", "outside the message set");
  const ErrorSpec spec = parse_errors(errors_str);

  Direction dir = Direction::Down;
  if (direction_str == "up")
    dir = Direction::Up;
  else if (direction_str != "down")
    throw CLI::ValidationError("--direction", "expected down or up");

  // Build the received sequence first (adaptively for random adversaries),
  // then replay it stepwise for the printed trace.
  std::vector<int> received;
  {
    auto probe = coder.start(message);
    if (spec.random) {
      std::mt19937_64 rng(spec.seed);
      const ChannelGraph g = build_graph(coder.channel(), dir);
      int budget = p.t;
      for (int i = 0; i < p.n; ++i) {
        const int x = probe->next_symbol();
        int y = x;
        if (budget > 0) {
          const auto outs = allowed_outputs(g, x);
          y = outs[rng() % outs.size()];
          if (y != x) --budget;
        }
        probe->receive(y);
        received.push_back(y);
      }
    } else {
      for (const auto& [pos, sym] : spec.overrides) {
        if (pos < 0 || pos >= p.n)
          throw CLI::ValidationError("--errors", "position outside the block");
        if (sym < 0 || sym >= p.q)
          throw CLI::ValidationError("--errors", "symbol outside the alphabet");
      }
      for (int i = 0; i < p.n; ++i) {
        int y = probe->next_symbol();
        for (const auto& [pos, sym] : spec.overrides)
          if (pos == i) y = sym;
        probe->receive(y);
        received.push_back(y);
      }
      if (static_cast<int>(probe->transcript().errors()) > p.t)
        throw CLI::ValidationError("--errors", "more errors than the budget t");
      if (p.method == Method::Unidirectional) {
        bool down = false, up = false;
        for (const StepRecord& s : probe->transcript().steps) {
          if (s.received < s.sent) down = true;
          if (s.received > s.sent) up = true;
        }
        if (down && up)
          throw CLI::ValidationError(
              "--errors",
              "unidirectional channel: all errors must share one direction");
      }
    }
  }
  auto session = coder.start(message);
  print_transcript(coder, *session, received, message);
  const auto decoded = session->decode();
  return decoded && *decoded == message ? 0 : 1;
}

int run_rates(int q, int r_max, double grid_step, const std::string& out_path) {
  if (q < 2) throw CLI::ValidationError("--q", "q >= 2 required");
  if (r_max < 1) throw CLI::ValidationError("--r-max", "r-max >= 1 required");
  if (grid_step <= 0 || grid_step > 0.5)
    throw CLI::ValidationError("--grid-step", "expected a step in (0, 0.5]");
  const auto curves = emit_curves(q, r_max, default_grid(q, grid_step));
  write_curves_csv(curves, out_path);
  std::fprintf(stderr, "wrote %zu curves x %zu points to %s\n", curves.size(),
               curves.front().grid.size(), out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feedback-channel rubber coding toolkit"};
  app.require_subcommand(1);

  MethodArgs count_args, verify_args, sim_args, replay_args;
  std::uint64_t cap = 1000000000ull;
  int jobs = 1;
  std::string sim_message = "0", sim_errors = "none", sim_direction = "down";
  std::string replay_message = "0", replay_errors, replay_direction = "down";
  int rates_q = 2, rates_rmax = 4;
  double grid_step = 0.001;
  std::string rates_out;

  auto* count_cmd = app.add_subcommand("count", "message count and rate");
  add_method_flags(count_cmd, count_args);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive adversarial verification");
  add_method_flags(verify_cmd, verify_args);
  verify_cmd->add_option("--cap", cap, "leaf budget before giving up");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  auto* sim_cmd = app.add_subcommand("simulate", "single run with a chosen adversary");
  add_method_flags(sim_cmd, sim_args);
  sim_cmd->add_option("--message", sim_message, "message index");
  sim_cmd->add_option("--errors", sim_errors, "none | random:<seed> | <pos>:<sym>,...");
  sim_cmd->add_option("--direction", sim_direction, "down|up (unidirectional only)");

  auto* replay_cmd = app.add_subcommand("replay", "re-run a recorded error pattern");
  add_method_flags(replay_cmd, replay_args);
  replay_cmd->add_option("--message", replay_message, "message index");
  replay_cmd->add_option("--errors", replay_errors, "<pos>:<sym>,... | none")->required();
  replay_cmd->add_option("--direction", replay_direction, "down|up (unidirectional only)");

  auto* rates_cmd = app.add_subcommand("rates", "emit bound curves as CSV");
  rates_cmd->add_option("--q", rates_q, "alphabet size")->required();
  rates_cmd->add_option("--r-max", rates_rmax, "largest rubber run length")->required();
  rates_cmd->add_option("--grid-step", grid_step, "tau grid step");
  rates_cmd->add_option("--out", rates_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
    if (count_cmd->parsed()) return run_count(count_args);
    if (verify_cmd->parsed()) return run_verify(verify_args, cap, jobs);
    if (sim_cmd->parsed())
      return run_replay(sim_args, sim_message, sim_errors, sim_direction);
    if (replay_cmd->parsed())
      return run_replay(replay_args, replay_message, replay_errors, replay_direction);
    if (rates_cmd->parsed()) return run_rates(rates_q, rates_rmax, grid_step, rates_out);
    return kUsageError;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageError;
  }
}
