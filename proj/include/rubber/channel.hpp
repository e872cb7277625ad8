#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rubber {

// Which way the hidden corruption of a unidirectional channel points within
// one codeword: Down means symbols may only decrease (Z-type), Up means they
// may only increase (inverse-Z-type).
enum class Direction { Down, Up };

std::string to_string(Direction d);

// A channel is a bipartite graph on {0..q-1} x {0..q-1}.  An edge (x, y)
// means "sending x may be received as y".  Every graph contains the identity
// edges (x, x).
struct ChannelGraph {
  int q_in = 0;
  int q_out = 0;
  std::set<std::pair<int, int>> edges;

  bool has_edge(int x, int y) const { return edges.count({x, y}) != 0; }
  void validate() const;  // throws std::invalid_argument on malformed graphs
};

enum class ChannelFamily { Symmetric, Z, InverseZ, Unidirectional, Custom };

struct ChannelKind {
  ChannelFamily family = ChannelFamily::Symmetric;
  int q = 2;
  std::optional<ChannelGraph> custom;

  static ChannelKind symmetric(int q);
  static ChannelKind z(int q);
  static ChannelKind inverse_z(int q);
  static ChannelKind unidirectional(int q);
  static ChannelKind custom_graph(ChannelGraph g);
};

std::string to_string(const ChannelKind& kind);

// Builds the corruption graph.  For Unidirectional the direction must be
// supplied via the second overload (the channel fixes one direction per
// codeword; there is no single graph).
ChannelGraph build_graph(const ChannelKind& kind);
ChannelGraph build_graph(const ChannelKind& kind, Direction dir);

// All symbols y with an edge (x, y), including x itself.
std::vector<int> allowed_outputs(const ChannelGraph& g, int x);

// Relabels symbols x -> q-1-x on both sides.  Maps Z(q) onto InverseZ(q) and
// back; an involution on any graph.
ChannelGraph relabel_complement(const ChannelGraph& g);

// A concrete adversary choice, replayable through the CLI.
struct ErrorPattern {
  int length = 0;
  // (position, received symbol); positions are 0-based, strictly increasing.
  std::vector<std::pair<int, int>> overrides;
  std::optional<Direction> direction;  // only meaningful for Unidirectional
};

// True iff `received` can result from `sent` under `kind` with at most t
// corruptions.  For Unidirectional this means: some single direction explains
// every corruption.
bool is_admissible(const ChannelKind& kind, std::span<const int> sent,
                   std::span<const int> received, int t);

}  // namespace rubber
