#include "walkwatch/transition.hpp"

namespace walkwatch {

TransitionMatrix::TransitionMatrix(const Graph& g) {
  const std::size_t n = g.num_nodes();
  row_ptr_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t deg = g.out_degree(v);
    row_ptr_[v + 1] = row_ptr_[v] + (deg > 0 ? deg : 1);
  }
  col_.resize(row_ptr_[n]);
  val_.resize(row_ptr_[n]);
  for (NodeId v = 0; v < n; ++v) {
    std::size_t at = row_ptr_[v];
    const auto row = g.neighbors(v);
    if (row.empty()) {
      col_[at] = v;
      val_[at] = 1.0;
      ++self_loops_added_;
      continue;
    }
    const double p = 1.0 / static_cast<double>(row.size());
    for (NodeId u : row) {
      col_[at] = u;
      val_[at] = p;
      ++at;
    }
  }
}

RowMatrix TransitionMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(num_nodes());
  RowMatrix out = RowMatrix::Zero(n, n);
  for (NodeId v = 0; v < num_nodes(); ++v) {
    const auto idx = row_indices(v);
    const auto val = row_values(v);
    for (std::size_t t = 0; t < idx.size(); ++t) out(v, idx[t]) = val[t];
  }
  return out;
}

}  // namespace walkwatch
