#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ferkit {

// Dense rank-1..4 float tensor, row-major. Activations are (channels, height,
// width); conv weights are (out_channels, in_channels, kernel_h, kernel_w).
// Instances are treated as immutable once filled: all kernels below are pure
// functions and safe to call concurrently.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> shape);
    Tensor(std::vector<int64_t> shape, std::vector<float> data);

    int rank() const { return static_cast<int>(shape_.size()); }
    int64_t extent(int axis) const { return shape_[static_cast<size_t>(axis)]; }
    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    std::span<const float> values() const { return {data_.data(), data_.size()}; }
    std::vector<float>& buffer() { return data_; }
    const std::vector<float>& buffer() const { return data_; }

    float& at(int64_t c, int64_t y, int64_t x) {
        return data_[static_cast<size_t>((c * shape_[1] + y) * shape_[2] + x)];
    }
    float at(int64_t c, int64_t y, int64_t x) const {
        return data_[static_cast<size_t>((c * shape_[1] + y) * shape_[2] + x)];
    }
    float& at4(int64_t o, int64_t i, int64_t y, int64_t x) {
        return data_[static_cast<size_t>(((o * shape_[1] + i) * shape_[2] + y) * shape_[3] + x)];
    }
    float at4(int64_t o, int64_t i, int64_t y, int64_t x) const {
        return data_[static_cast<size_t>(((o * shape_[1] + i) * shape_[2] + y) * shape_[3] + x)];
    }

    bool all_finite() const;
    std::string shape_str() const;

private:
    std::vector<int64_t> shape_;
    std::vector<float> data_;
};

std::string shape_to_string(const std::vector<int64_t>& shape);

// 3x3 convolution, stride 1, zero padding 1 (spatial extents preserved).
// input (C_in,H,W), weights (C_out,C_in,3,3), bias length C_out.
// Each output element accumulates in double over a fixed (in-channel, ky, kx)
// loop order, so results are bit-identical regardless of threading.
Tensor conv2d(const Tensor& input, const Tensor& weights, std::span<const float> bias);

// 2x2 max pooling, stride 2. Spatial extents must be even.
Tensor maxpool2d(const Tensor& input);

// Affine layer: out[j] = bias[j] + sum_i weights[j,i] * input[i].
// weights (m,n), input length n. Double accumulation in fixed i order.
std::vector<float> dense(std::span<const float> input, const Tensor& weights,
                         std::span<const float> bias);

// Elementwise max(0, x).
Tensor relu(const Tensor& input);
void relu_inplace(Tensor& t);
void relu_inplace(std::vector<float>& v);

}  // namespace ferkit
