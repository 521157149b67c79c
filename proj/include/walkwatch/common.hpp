#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

namespace walkwatch {

using NodeId = std::uint32_t;

// Dense matrices are row-major throughout: anchors index rows, and the
// power-series streaming works row by row.
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

inline double sigmoid(double s) { return 1.0 / (1.0 + std::exp(-s)); }

// softplus(s) = log(1 + exp(s)), evaluated without overflow for any s.
inline double softplus(double s) {
  return std::fmax(s, 0.0) + std::log1p(std::exp(-std::fabs(s)));
}

}  // namespace walkwatch
