#include "ferkit/tensor.hpp"

#include <cmath>
#include <sstream>

#include "ferkit/error.hpp"
#include "ferkit/parallel.hpp"

namespace ferkit {

namespace {

int64_t checked_element_count(const std::vector<int64_t>& shape) {
    if (shape.empty() || shape.size() > 4) {
        throw ShapeError("tensor rank must be 1..4, got rank " + std::to_string(shape.size()));
    }
    int64_t n = 1;
    for (int64_t e : shape) {
        if (e < 1) throw ShapeError("tensor extents must be >= 1, got shape " + shape_to_string(shape));
        n *= e;
    }
    return n;
}

}  // namespace

std::string shape_to_string(const std::vector<int64_t>& shape) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ",";
        os << shape[i];
    }
    os << ")";
    return os.str();
}

Tensor::Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(checked_element_count(shape_)), 0.0f);
}

Tensor::Tensor(std::vector<int64_t> shape, std::vector<float> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    int64_t n = checked_element_count(shape_);
    if (n != static_cast<int64_t>(data_.size())) {
        throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                         " does not match shape " + shape_to_string(shape_));
    }
}

bool Tensor::all_finite() const {
    for (float v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::string Tensor::shape_str() const { return shape_to_string(shape_); }

Tensor conv2d(const Tensor& input, const Tensor& weights, std::span<const float> bias) {
    if (input.rank() != 3) {
        throw ShapeError("conv2d input must be rank 3 (C,H,W), got " + input.shape_str());
    }
    if (weights.rank() != 4 || weights.extent(2) != 3 || weights.extent(3) != 3) {
        throw ShapeError("conv2d weights must be (C_out,C_in,3,3), got " + weights.shape_str());
    }
    const int64_t c_in = input.extent(0);
    const int64_t h = input.extent(1);
    const int64_t w = input.extent(2);
    const int64_t c_out = weights.extent(0);
    if (weights.extent(1) != c_in) {
        throw ShapeError("conv2d channel mismatch: input " + input.shape_str() +
                         " vs weights " + weights.shape_str());
    }
    if (bias.size() != static_cast<size_t>(c_out)) {
        throw ShapeError("conv2d bias length " + std::to_string(bias.size()) +
                         " != out channels " + std::to_string(c_out));
    }

    Tensor out({c_out, h, w});
    const float* in = input.data();
    const float* wt = weights.data();
    float* dst = out.data();

    // Parallel across output channels; the accumulation order for each output
    // element is fixed at (in-channel, ky, kx).
    parallel_for(c_out, [&](int64_t oc) {
        const float* wc = wt + oc * c_in * 9;
        float* oc_dst = dst + oc * h * w;
        const double b = bias[static_cast<size_t>(oc)];
        for (int64_t y = 0; y < h; ++y) {
            for (int64_t x = 0; x < w; ++x) {
                double acc = b;
                for (int64_t ic = 0; ic < c_in; ++ic) {
                    const float* plane = in + ic * h * w;
                    const float* k = wc + ic * 9;
                    for (int64_t ky = 0; ky < 3; ++ky) {
                        const int64_t sy = y + ky - 1;
                        if (sy < 0 || sy >= h) continue;
                        const float* row = plane + sy * w;
                        for (int64_t kx = 0; kx < 3; ++kx) {
                            const int64_t sx = x + kx - 1;
                            if (sx < 0 || sx >= w) continue;
                            acc += static_cast<double>(k[ky * 3 + kx]) *
                                   static_cast<double>(row[sx]);
                        }
                    }
                }
                oc_dst[y * w + x] = static_cast<float>(acc);
            }
        }
    });
    return out;
}

Tensor maxpool2d(const Tensor& input) {
    if (input.rank() != 3) {
        throw ShapeError("maxpool2d input must be rank 3 (C,H,W), got " + input.shape_str());
    }
    const int64_t c = input.extent(0);
    const int64_t h = input.extent(1);
    const int64_t w = input.extent(2);
    if (h % 2 != 0 || w % 2 != 0) {
        throw ShapeError("maxpool2d requires even spatial extents, got " + input.shape_str());
    }
    Tensor out({c, h / 2, w / 2});
    const float* in = input.data();
    float* dst = out.data();
    const int64_t oh = h / 2;
    const int64_t ow = w / 2;
    parallel_for(c, [&](int64_t ch) {
        const float* plane = in + ch * h * w;
        float* oplane = dst + ch * oh * ow;
        for (int64_t y = 0; y < oh; ++y) {
            const float* r0 = plane + (2 * y) * w;
            const float* r1 = r0 + w;
            for (int64_t x = 0; x < ow; ++x) {
                const float a = r0[2 * x];
                const float b = r0[2 * x + 1];
                const float c2 = r1[2 * x];
                const float d = r1[2 * x + 1];
                float m = a > b ? a : b;
                if (c2 > m) m = c2;
                if (d > m) m = d;
                oplane[y * ow + x] = m;
            }
        }
    });
    return out;
}

std::vector<float> dense(std::span<const float> input, const Tensor& weights,
                         std::span<const float> bias) {
    if (weights.rank() != 2) {
        throw ShapeError("dense weights must be rank 2 (out,in), got " + weights.shape_str());
    }
    const int64_t m = weights.extent(0);
    const int64_t n = weights.extent(1);
    if (static_cast<int64_t>(input.size()) != n) {
        throw ShapeError("dense input length " + std::to_string(input.size()) +
                         " != weight columns " + std::to_string(n));
    }
    if (static_cast<int64_t>(bias.size()) != m) {
        throw ShapeError("dense bias length " + std::to_string(bias.size()) +
                         " != weight rows " + std::to_string(m));
    }
    std::vector<float> out(static_cast<size_t>(m));
    const float* wt = weights.data();
    parallel_for(m, [&](int64_t j) {
        const float* row = wt + j * n;
        double acc = bias[static_cast<size_t>(j)];
        for (int64_t i = 0; i < n; ++i) {
            acc += static_cast<double>(row[i]) * static_cast<double>(input[static_cast<size_t>(i)]);
        }
        out[static_cast<size_t>(j)] = static_cast<float>(acc);
    });
    return out;
}

Tensor relu(const Tensor& input) {
    Tensor out(input.shape(), input.buffer());
    relu_inplace(out);
    return out;
}

void relu_inplace(Tensor& t) { relu_inplace(t.buffer()); }

void relu_inplace(std::vector<float>& v) {
    for (float& x : v) {
        if (x < 0.0f) x = 0.0f;
    }
}

}  // namespace ferkit
