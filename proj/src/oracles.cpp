#include "ferkit/oracles.hpp"

#include "ferkit/error.hpp"

namespace ferkit::oracle {

Tensor conv2d(const Tensor& input, const Tensor& weights, std::span<const float> bias) {
    if (input.rank() != 3 || weights.rank() != 4) {
        throw ShapeError("oracle conv2d expects rank-3 input and rank-4 weights");
    }
    const int64_t c_in = input.extent(0);
    const int64_t h = input.extent(1);
    const int64_t w = input.extent(2);
    const int64_t c_out = weights.extent(0);
    const int64_t kh = weights.extent(2);
    const int64_t kw = weights.extent(3);
    if (weights.extent(1) != c_in) {
        throw ShapeError("oracle conv2d channel mismatch: input " + input.shape_str() +
                         " vs weights " + weights.shape_str());
    }
    if (kh != 3 || kw != 3) throw ShapeError("oracle conv2d supports 3x3 kernels only");

    // Materialize the zero-padded input, then convolve by definition.
    const int64_t ph = h + 2;
    const int64_t pw = w + 2;
    std::vector<double> padded(static_cast<size_t>(c_in * ph * pw), 0.0);
    for (int64_t c = 0; c < c_in; ++c) {
        for (int64_t y = 0; y < h; ++y) {
            for (int64_t x = 0; x < w; ++x) {
                padded[static_cast<size_t>((c * ph + y + 1) * pw + x + 1)] = input.at(c, y, x);
            }
        }
    }

    Tensor out({c_out, h, w});
    for (int64_t oc = 0; oc < c_out; ++oc) {
        for (int64_t y = 0; y < h; ++y) {
            for (int64_t x = 0; x < w; ++x) {
                double acc = bias[static_cast<size_t>(oc)];
                for (int64_t ic = 0; ic < c_in; ++ic) {
                    for (int64_t ky = 0; ky < 3; ++ky) {
                        for (int64_t kx = 0; kx < 3; ++kx) {
                            acc += static_cast<double>(weights.at4(oc, ic, ky, kx)) *
                                   padded[static_cast<size_t>((ic * ph + y + ky) * pw + x + kx)];
                        }
                    }
                }
                out.at(oc, y, x) = static_cast<float>(acc);
            }
        }
    }
    return out;
}

Tensor maxpool2d(const Tensor& input) {
    if (input.rank() != 3) throw ShapeError("oracle maxpool2d expects rank-3 input");
    const int64_t c = input.extent(0);
    const int64_t h = input.extent(1);
    const int64_t w = input.extent(2);
    if (h % 2 != 0 || w % 2 != 0) {
        throw ShapeError("oracle maxpool2d requires even spatial extents, got " + input.shape_str());
    }
    Tensor out({c, h / 2, w / 2});
    for (int64_t ch = 0; ch < c; ++ch) {
        for (int64_t y = 0; y + 1 < h; y += 2) {
            for (int64_t x = 0; x + 1 < w; x += 2) {
                float m = input.at(ch, y, x);
                for (int64_t dy = 0; dy < 2; ++dy) {
                    for (int64_t dx = 0; dx < 2; ++dx) {
                        float v = input.at(ch, y + dy, x + dx);
                        if (v > m) m = v;
                    }
                }
                out.at(ch, y / 2, x / 2) = m;
            }
        }
    }
    return out;
}

std::vector<float> dense(std::span<const float> input, const Tensor& weights,
                         std::span<const float> bias) {
    if (weights.rank() != 2) throw ShapeError("oracle dense expects rank-2 weights");
    const int64_t m = weights.extent(0);
    const int64_t n = weights.extent(1);
    if (static_cast<int64_t>(input.size()) != n) {
        throw ShapeError("oracle dense input length " + std::to_string(input.size()) +
                         " != weight columns " + std::to_string(n));
    }
    std::vector<float> out(static_cast<size_t>(m));
    for (int64_t j = 0; j < m; ++j) {
        double acc = bias[static_cast<size_t>(j)];
        for (int64_t i = 0; i < n; ++i) {
            acc += static_cast<double>(weights.data()[j * n + i]) *
                   static_cast<double>(input[static_cast<size_t>(i)]);
        }
        out[static_cast<size_t>(j)] = static_cast<float>(acc);
    }
    return out;
}

}  // namespace ferkit::oracle
