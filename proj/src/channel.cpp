#include "rubber/channel.hpp"

#include <stdexcept>

namespace rubber {

std::string to_string(Direction d) { return d == Direction::Down ? "down" : "up"; }

void ChannelGraph::validate() const {
  if (q_in < 2 || q_out < 2 || q_in != q_out)
    throw std::invalid_argument("channel graph: need square alphabet with q >= 2");
  for (int x = 0; x < q_in; ++x)
    if (!has_edge(x, x))
      throw std::invalid_argument("channel graph: missing identity edge");
  for (auto& [x, y] : edges)
    if (x < 0 || x >= q_in || y < 0 || y >= q_out)
      throw std::invalid_argument("channel graph: edge symbol out of range");
}

ChannelKind ChannelKind::symmetric(int q) { return {ChannelFamily::Symmetric, q, {}}; }
ChannelKind ChannelKind::z(int q) { return {ChannelFamily::Z, q, {}}; }
ChannelKind ChannelKind::inverse_z(int q) { return {ChannelFamily::InverseZ, q, {}}; }
ChannelKind ChannelKind::unidirectional(int q) { return {ChannelFamily::Unidirectional, q, {}}; }
ChannelKind ChannelKind::custom_graph(ChannelGraph g) {
  g.validate();
  ChannelKind k;
  k.family = ChannelFamily::Custom;
  k.q = g.q_in;
  k.custom = std::move(g);
  return k;
}

std::string to_string(const ChannelKind& kind) {
  std::string q = std::to_string(kind.q);
  switch (kind.family) {
    case ChannelFamily::Symmetric: return "Symmetric(" + q + ")";
    case ChannelFamily::Z: return "Z(" + q + ")";
    case ChannelFamily::InverseZ: return "InverseZ(" + q + ")";
    case ChannelFamily::Unidirectional: return "Unidirectional(" + q + ")";
    case ChannelFamily::Custom: return "Custom(" + q + ")";
  }
  return "?";
}

namespace {

ChannelGraph make_graph(ChannelFamily f, int q) {
  if (q < 2) throw std::invalid_argument("channel: q >= 2 required");
  ChannelGraph g;
  g.q_in = g.q_out = q;
  for (int x = 0; x < q; ++x) g.edges.insert({x, x});
  switch (f) {
    case ChannelFamily::Symmetric:
      for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) g.edges.insert({x, y});
      break;
    case ChannelFamily::Z:
      for (int x = 1; x < q; ++x) g.edges.insert({x, x - 1});
      break;
    case ChannelFamily::InverseZ:
      for (int x = 0; x + 1 < q; ++x) g.edges.insert({x, x + 1});
      break;
    default:
      throw std::invalid_argument("make_graph: unsupported family");
  }
  return g;
}

}  // namespace

ChannelGraph build_graph(const ChannelKind& kind) {
  switch (kind.family) {
    case ChannelFamily::Custom: return *kind.custom;
    case ChannelFamily::Unidirectional:
      throw std::invalid_argument(
          "Unidirectional(q) has no single graph; pass a Direction");
    default: return make_graph(kind.family, kind.q);
  }
}

ChannelGraph build_graph(const ChannelKind& kind, Direction dir) {
  if (kind.family == ChannelFamily::Unidirectional)
    return make_graph(dir == Direction::Down ? ChannelFamily::Z
                                             : ChannelFamily::InverseZ,
                      kind.q);
  return build_graph(kind);
}

std::vector<int> allowed_outputs(const ChannelGraph& g, int x) {
  std::vector<int> out;
  for (int y = 0; y < g.q_out; ++y)
    if (g.has_edge(x, y)) out.push_back(y);
  return out;
}

ChannelGraph relabel_complement(const ChannelGraph& g) {
  ChannelGraph h;
  h.q_in = g.q_in;
  h.q_out = g.q_out;
  for (auto& [x, y] : g.edges) h.edges.insert({g.q_in - 1 - x, g.q_out - 1 - y});
  return h;
}

namespace {

bool admissible_under(const ChannelGraph& g, std::span<const int> sent,
                      std::span<const int> received, int t) {
  int weight = 0;
  for (size_t i = 0; i < sent.size(); ++i) {
    if (!g.has_edge(sent[i], received[i])) return false;
    if (sent[i] != received[i]) ++weight;
  }
  return weight <= t;
}

}  // namespace

bool is_admissible(const ChannelKind& kind, std::span<const int> sent,
                   std::span<const int> received, int t) {
  if (sent.size() != received.size()) return false;
  if (kind.family == ChannelFamily::Unidirectional)
    return admissible_under(build_graph(kind, Direction::Down), sent, received, t) ||
           admissible_under(build_graph(kind, Direction::Up), sent, received, t);
  return admissible_under(build_graph(kind), sent, received, t);
}

}  // namespace rubber
