#include "walkwatch/context.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace walkwatch {

namespace {
void require_horizon(int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}
}  // namespace

ContextDistribution deepwalk_coefficients(int horizon) {
  require_horizon(horizon);
  Vector w(horizon);
  for (int k = 1; k <= horizon; ++k)
    w[k - 1] = 1.0 - static_cast<double>(k - 1) / static_cast<double>(horizon);
  return {w, false};
}

ContextDistribution glove_coefficients(int horizon) {
  require_horizon(horizon);
  Vector w(horizon);
  for (int k = 1; k <= horizon; ++k) w[k - 1] = 1.0 / static_cast<double>(k);
  return {w, false};
}

ContextDistribution softmax_context(const ContextParams& params) {
  require_horizon(params.horizon);
  if (params.logits.size() != params.horizon)
    throw std::invalid_argument("logit count does not match horizon");
  if (!params.logits.allFinite())
    throw std::invalid_argument("logits must be finite");
  const double shift = params.logits.maxCoeff();
  Vector w = (params.logits.array() - shift).exp();
  w /= w.sum();
  return {w, true};
}

std::string to_json_array(const Vector& values) {
  std::string out = "[";
  char buf[32];
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  out += "]";
  return out;
}

}  // namespace walkwatch
