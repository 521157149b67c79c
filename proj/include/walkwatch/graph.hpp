#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walkwatch/common.hpp"

namespace walkwatch {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

// Immutable adjacency in CSR form with sorted neighbor lists per row.
// Undirected graphs store both arcs of every edge; node ids are dense
// 0..|V|-1 with the original input labels kept alongside.
class Graph {
 public:
  // Edges over dense ids. Labels default to the dense ids themselves.
  // Throws on out-of-range endpoints, self-loops, or duplicate edges;
  // use parse_edge_list for dirty input.
  Graph(std::size_t num_nodes, const std::vector<std::pair<NodeId, NodeId>>& edges,
        bool directed, std::vector<std::uint64_t> labels = {});

  std::size_t num_nodes() const { return row_ptr_.size() - 1; }
  // Logical edge count: an undirected pair counts once.
  std::size_t num_edges() const { return directed_ ? col_.size() : col_.size() / 2; }
  std::size_t num_arcs() const { return col_.size(); }
  bool directed() const { return directed_; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {col_.data() + row_ptr_[u], col_.data() + row_ptr_[u + 1]};
  }
  std::size_t out_degree(NodeId u) const { return row_ptr_[u + 1] - row_ptr_[u]; }

  // True iff arc (u, v) is present. Binary search, O(log deg(u)).
  bool is_edge(NodeId u, NodeId v) const;

  std::uint64_t label(NodeId u) const { return labels_[u]; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  // Dense id for an original label; throws std::out_of_range if unknown.
  NodeId dense_id(std::uint64_t label) const;
  bool has_label(std::uint64_t label) const { return id_map_.count(label) != 0; }

  // Unique edges: (u, v) with u < v for undirected graphs, all arcs otherwise.
  std::vector<std::pair<NodeId, NodeId>> edge_list() const;

 private:
  void check_node(NodeId u) const {
    if (u >= num_nodes()) throw std::out_of_range("node id " + std::to_string(u) + " out of range");
  }

  std::vector<std::size_t> row_ptr_;
  std::vector<NodeId> col_;
  std::vector<std::uint64_t> labels_;
  std::unordered_map<std::uint64_t, NodeId> id_map_;
  bool directed_ = false;
};

struct ParsedGraph {
  Graph graph;
  ParseStats stats;
};

// Reads "u v" integer pairs, one per line; '#' starts a comment line and
// blank lines are ignored (SNAP convention). Labels map to dense ids in
// first-seen order; self-loops are dropped and duplicate edges collapse,
// both counted in the returned stats. Throws ParseError with the offending
// line number, or std::invalid_argument when no edges remain.
ParsedGraph parse_edge_list(std::istream& in, bool directed);

// Writes one edge per line using original labels, ordered so that re-parsing
// reproduces the same dense ids (new labels appear in dense order). Falls
// back to plain sorted order for graphs whose ids did not come from
// first-seen parsing.
void write_edge_list(const Graph& g, std::ostream& out);

// Connected components in the undirected sense (arcs symmetrized).
std::size_t count_components(const Graph& g);

}  // namespace walkwatch
