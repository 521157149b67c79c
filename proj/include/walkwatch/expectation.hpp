#pragma once

#include "walkwatch/common.hpp"
#include "walkwatch/context.hpp"
#include "walkwatch/transition.hpp"

namespace walkwatch {

// E[D] = m * sum_k Q_k T^k, accumulated by streaming one power at a time
// (M_k = M_{k-1} * T), never holding more than one power per row block.
RowMatrix expected_cooccurrence(const TransitionMatrix& t, const ContextDistribution& q,
                                int walks_per_node);

// c_k = m * <T^k, W> (Frobenius inner product) for k = 1..horizon, streamed
// the same way. This is the loss gradient with respect to Q_k when W holds
// the per-pair loss weights.
Vector per_power_contraction(const TransitionMatrix& t, int horizon, int walks_per_node,
                             const RowMatrix& weights);

struct CooccurrencePass {
  RowMatrix expectation;
  Vector per_power;
};

// Both of the above from a single pass over the powers.
CooccurrencePass expected_cooccurrence_with_contraction(const TransitionMatrix& t,
                                                        const ContextDistribution& q,
                                                        int walks_per_node,
                                                        const RowMatrix& weights);

}  // namespace walkwatch
