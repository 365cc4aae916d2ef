#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ferkit {

// Incremental FNV-1a 64-bit hash. Content addressing for corpora, weight
// bundles and feature caches (not a security boundary).
class Fnv1a {
public:
    Fnv1a() = default;

    void update(const void* data, size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            h_ ^= p[i];
            h_ *= 0x100000001b3ULL;
        }
    }

    void update(const std::string& s) { update(s.data(), s.size()); }

    template <typename T>
    void update_value(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        update(&v, sizeof(v));
    }

    uint64_t value() const { return h_; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        uint64_t v = h_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<size_t>(i)] = digits[v & 0xf];
            v >>= 4;
        }
        return out;
    }

private:
    uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace ferkit
