#pragma once

#include <string>

#include "walkwatch/common.hpp"

namespace walkwatch {

// Attention parameters over walk distances 1..horizon. The logits are what
// training updates; the distribution over distances is softmax(logits).
struct ContextParams {
  Vector logits;        // length == horizon
  int horizon = 1;
  int walks_per_node = 1;
};

// Per-distance weights on the transition-matrix powers. The softmax mode
// lives on the simplex; the fixed deepwalk/glove coefficient vectors are
// used unnormalized.
struct ContextDistribution {
  Vector weights;
  bool normalized = false;
};

// Linearly decaying coefficients 1 - (k-1)/C for k = 1..C.
ContextDistribution deepwalk_coefficients(int horizon);

// Harmonic coefficients 1/k for k = 1..C.
ContextDistribution glove_coefficients(int horizon);

// softmax(logits), max-shifted before exponentiation.
ContextDistribution softmax_context(const ContextParams& params);

// JSON array rendering ("[1, 0.5, ...]") for export and plotting.
std::string to_json_array(const Vector& values);

}  // namespace walkwatch
