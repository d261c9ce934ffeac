#pragma once

#include "geocheck/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geocheck::discrete {

enum class NodeKind { kSource, kSink, kSplitter, kMerger };

struct FluxNode {
  NodeKind kind;
  std::string label;
};

struct FluxEdge {
  std::size_t from;
  std::size_t to;
};

/// Directed flow network of simple dividers. Cycles are allowed, which is how
/// unwanted streams are fed back. Arity rules: a source has one out-edge and
/// no in-edges, a splitter one in and two out, a merger at least one in and
/// one out, a sink at least one in and none out.
class FluxNetwork {
 public:
  std::size_t add_node(NodeKind kind, std::string label);
  std::size_t add_edge(std::size_t from, std::size_t to);

  const std::vector<FluxNode>& nodes() const { return nodes_; }
  const std::vector<FluxEdge>& edges() const { return edges_; }
  std::vector<std::size_t> in_edges(std::size_t node) const;
  std::vector<std::size_t> out_edges(std::size_t node) const;
  /// Index of the first node with this label; throws if absent.
  std::size_t node(const std::string& label) const;

  /// Throws Error(kInvalidArgument) on arity violations or a missing source.
  void validate() const;

 private:
  std::vector<FluxNode> nodes_;
  std::vector<FluxEdge> edges_;
};

struct FluxSolution {
  std::vector<Rational> edge_flux;

  Rational inflow(const FluxNetwork& net, std::size_t node) const;
  Rational outflow(const FluxNetwork& net, std::size_t node) const;
};

/// Exact steady state for a unit source: one linear equation per edge
/// (source edge = 1, splitter outputs = half the input, merger output = sum
/// of inputs), solved exactly. Throws Error(kIllPosedNetwork) when the system
/// is singular, e.g. a loop with no exit.
FluxSolution solve_flux(const FluxNetwork& net);

/// Flux balance at every node, plus total source flux = total sink flux.
bool conserves_flux(const FluxNetwork& net, const FluxSolution& sol);

/// Two splitters give four streams; one is merged back into the trunk and the
/// other three go to separate sinks, which then receive 1/3 each.
FluxNetwork four_way_feedback_network();

struct DividerDesign {
  FluxNetwork network;
  int levels = 0;            // smallest n with 2^n >= q
  int feedback_streams = 0;  // 2^n - q
  std::size_t output_sink = 0;
};

/// A network separating exactly p/q of the flow: a full binary tree of
/// 2^n - 1 splitters, 2^n - q leaves merged back into the trunk, p leaves
/// merged into the output sink and the remaining q - p sent to their own sinks.
DividerDesign design_divider_network(int p, int q);

}  // namespace geocheck::discrete
