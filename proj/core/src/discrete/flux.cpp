#include "geocheck/discrete/flux.hpp"

#include "geocheck/error.hpp"
#include "geocheck/linalg.hpp"

namespace geocheck::discrete {

std::size_t FluxNetwork::add_node(NodeKind kind, std::string label) {
  nodes_.push_back({kind, std::move(label)});
  return nodes_.size() - 1;
}

std::size_t FluxNetwork::add_edge(std::size_t from, std::size_t to) {
  if (from >= nodes_.size() || to >= nodes_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "edge endpoint out of range");
  }
  edges_.push_back({from, to});
  return edges_.size() - 1;
}

std::vector<std::size_t> FluxNetwork::in_edges(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].to == node) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> FluxNetwork::out_edges(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].from == node) out.push_back(e);
  }
  return out;
}

std::size_t FluxNetwork::node(const std::string& label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].label == label) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "no node labelled '" + label + "'");
}

void FluxNetwork::validate() const {
  std::size_t sources = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const std::size_t n_in = in_edges(i).size();
    const std::size_t n_out = out_edges(i).size();
    bool ok = true;
    switch (nodes_[i].kind) {
      case NodeKind::kSource:
        ++sources;
        ok = n_in == 0 && n_out == 1;
        break;
      case NodeKind::kSink: ok = n_in >= 1 && n_out == 0; break;
      case NodeKind::kSplitter: ok = n_in == 1 && n_out == 2; break;
      case NodeKind::kMerger: ok = n_in >= 1 && n_out == 1; break;
    }
    if (!ok) throw Error(ErrorKind::kInvalidArgument, "node '" + nodes_[i].label + "' has the wrong arity");
  }
  if (sources != 1) throw Error(ErrorKind::kInvalidArgument, "network needs exactly one source");
}

Rational FluxSolution::inflow(const FluxNetwork& net, std::size_t node) const {
  Rational s = 0;
  for (std::size_t e : net.in_edges(node)) s += edge_flux[e];
  return s;
}

Rational FluxSolution::outflow(const FluxNetwork& net, std::size_t node) const {
  Rational s = 0;
  for (std::size_t e : net.out_edges(node)) s += edge_flux[e];
  return s;
}

FluxSolution solve_flux(const FluxNetwork& net) {
  net.validate();
  const std::size_t m = net.edges().size();
  RationalMatrix a(m, RationalVector(m, Rational(0)));
  RationalVector b(m, Rational(0));
  std::size_t row = 0;
  for (std::size_t i = 0; i < net.nodes().size(); ++i) {
    const auto ins = net.in_edges(i);
    const auto outs = net.out_edges(i);
    switch (net.nodes()[i].kind) {
      case NodeKind::kSource:
        a[row][outs[0]] = 1;
        b[row] = 1;
        ++row;
        break;
      case NodeKind::kSplitter:
        for (std::size_t e : outs) {
          a[row][e] = 1;
          a[row][ins[0]] -= make_rational(1, 2);
          ++row;
        }
        break;
      case NodeKind::kMerger:
        a[row][outs[0]] = 1;
        for (std::size_t e : ins) a[row][e] -= 1;
        ++row;
        break;
      case NodeKind::kSink: break;
    }
  }
  try {
    return FluxSolution{solve_linear_exact(a, b)};
  } catch (const SingularSystemError& e) {
    throw Error(ErrorKind::kIllPosedNetwork, std::string("ill-posed network: ") + e.what());
  }
}

bool conserves_flux(const FluxNetwork& net, const FluxSolution& sol) {
  Rational source_total = 0;
  Rational sink_total = 0;
  for (std::size_t i = 0; i < net.nodes().size(); ++i) {
    const Rational in = sol.inflow(net, i);
    const Rational out = sol.outflow(net, i);
    switch (net.nodes()[i].kind) {
      case NodeKind::kSource: source_total += out; break;
      case NodeKind::kSink: sink_total += in; break;
      case NodeKind::kSplitter: {
        if (in != out) return false;
        for (std::size_t e : net.out_edges(i)) {
          if (sol.edge_flux[e] * 2 != in) return false;
        }
        break;
      }
      case NodeKind::kMerger:
        if (in != out) return false;
        break;
    }
  }
  return source_total == sink_total;
}

FluxNetwork four_way_feedback_network() {
  FluxNetwork net;
  const auto source = net.add_node(NodeKind::kSource, "source");
  const auto trunk = net.add_node(NodeKind::kMerger, "trunk");
  const auto s1 = net.add_node(NodeKind::kSplitter, "split-1");
  const auto s2 = net.add_node(NodeKind::kSplitter, "split-2");
  const auto s3 = net.add_node(NodeKind::kSplitter, "split-3");
  const auto a = net.add_node(NodeKind::kSink, "sink-a");
  const auto b = net.add_node(NodeKind::kSink, "sink-b");
  const auto c = net.add_node(NodeKind::kSink, "sink-c");
  net.add_edge(source, trunk);
  net.add_edge(trunk, s1);
  net.add_edge(s1, s2);
  net.add_edge(s1, s3);
  net.add_edge(s2, a);
  net.add_edge(s2, b);
  net.add_edge(s3, c);
  net.add_edge(s3, trunk);
  return net;
}

DividerDesign design_divider_network(int p, int q) {
  if (p < 1 || q < 2 || p >= q) {
    throw Error(ErrorKind::kInvalidArgument, "divider design needs integers 1 <= p < q");
  }
  DividerDesign d;
  while ((1 << d.levels) < q) ++d.levels;
  const int streams = 1 << d.levels;
  d.feedback_streams = streams - q;

  FluxNetwork& net = d.network;
  const auto source = net.add_node(NodeKind::kSource, "source");
  std::size_t feed = source;
  std::size_t trunk = 0;
  if (d.feedback_streams > 0) {
    trunk = net.add_node(NodeKind::kMerger, "trunk");
    net.add_edge(source, trunk);
    feed = trunk;
  }

  // Breadth-first binary tree; `frontier` holds the nodes whose outputs are
  // still unassigned.
  std::vector<std::size_t> level{net.add_node(NodeKind::kSplitter, "split-1")};
  net.add_edge(feed, level[0]);
  int counter = 1;
  for (int depth = 1; depth < d.levels; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t parent : level) {
      for (int k = 0; k < 2; ++k) {
        const auto child = net.add_node(NodeKind::kSplitter, "split-" + std::to_string(++counter));
        net.add_edge(parent, child);
        next.push_back(child);
      }
    }
    level = std::move(next);
  }

  std::size_t output = 0;
  if (p > 1) {
    output = net.add_node(NodeKind::kMerger, "output-merge");
    const auto sink = net.add_node(NodeKind::kSink, "output");
    net.add_edge(output, sink);
    d.output_sink = sink;
  } else {
    output = net.add_node(NodeKind::kSink, "output");
    d.output_sink = output;
  }

  int leaf = 0;
  for (std::size_t parent : level) {
    for (int k = 0; k < 2; ++k, ++leaf) {
      if (leaf < p) {
        net.add_edge(parent, output);
      } else if (leaf < q) {
        const auto sink = net.add_node(NodeKind::kSink, "rest-" + std::to_string(leaf - p + 1));
        net.add_edge(parent, sink);
      } else {
        net.add_edge(parent, trunk);
      }
    }
  }
  return d;
}

}  // namespace geocheck::discrete
