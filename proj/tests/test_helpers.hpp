#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ferkit/rng.hpp"
#include "ferkit/tensor.hpp"

namespace testutil {

inline ferkit::Tensor random_tensor(std::vector<int64_t> shape, uint64_t seed,
                                    double lo = -1.0, double hi = 1.0) {
    ferkit::Rng rng(seed);
    int64_t n = 1;
    for (int64_t e : shape) n *= e;
    std::vector<float> data(static_cast<size_t>(n));
    for (auto& v : data) v = static_cast<float>(lo + (hi - lo) * rng.next_double());
    return ferkit::Tensor(std::move(shape), std::move(data));
}

inline std::vector<float> random_vector(size_t n, uint64_t seed, double lo = -1.0,
                                        double hi = 1.0) {
    ferkit::Rng rng(seed);
    std::vector<float> data(n);
    for (auto& v : data) v = static_cast<float>(lo + (hi - lo) * rng.next_double());
    return data;
}

inline bool close_rel(double a, double b, double rtol, double atol = 1e-7) {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

inline double max_rel_diff(const std::vector<float>& a, const std::vector<float>& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double denom = std::max({std::abs(static_cast<double>(a[i])),
                                 std::abs(static_cast<double>(b[i])), 1e-12});
        worst = std::max(worst, std::abs(static_cast<double>(a[i]) - b[i]) / denom);
    }
    return worst;
}

}  // namespace testutil
