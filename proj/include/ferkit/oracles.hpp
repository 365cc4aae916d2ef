#pragma once

#include <span>
#include <vector>

#include "ferkit/tensor.hpp"

// Brute-force reference implementations used for cross-checking the fast
// paths (unit tests and the CLI `verify` subcommand). They intentionally
// share no code with the main kernels: explicit padded copies, plain loops,
// no parallelism.
namespace ferkit::oracle {

Tensor conv2d(const Tensor& input, const Tensor& weights, std::span<const float> bias);
Tensor maxpool2d(const Tensor& input);
std::vector<float> dense(std::span<const float> input, const Tensor& weights,
                         std::span<const float> bias);

}  // namespace ferkit::oracle
