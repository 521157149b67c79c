#pragma once

#include <span>
#include <vector>

#include "walkwatch/graph.hpp"

namespace walkwatch {

// Row-stochastic transition matrix: the adjacency with every row scaled to
// sum to one. Rows with no out-arcs get a probability-1 self-loop so the
// power series stays well defined.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(const Graph& g);

  std::size_t num_nodes() const { return row_ptr_.size() - 1; }
  std::size_t num_entries() const { return col_.size(); }
  std::size_t self_loops_added() const { return self_loops_added_; }

  std::span<const NodeId> row_indices(NodeId u) const {
    return {col_.data() + row_ptr_[u], col_.data() + row_ptr_[u + 1]};
  }
  std::span<const double> row_values(NodeId u) const {
    return {val_.data() + row_ptr_[u], val_.data() + row_ptr_[u + 1]};
  }

  // Dense copy, for small-graph tests and reference computations.
  RowMatrix dense() const;

 private:
  std::vector<std::size_t> row_ptr_;
  std::vector<NodeId> col_;
  std::vector<double> val_;
  std::size_t self_loops_added_ = 0;
};

inline TransitionMatrix transition_matrix(const Graph& g) { return TransitionMatrix(g); }

}  // namespace walkwatch
