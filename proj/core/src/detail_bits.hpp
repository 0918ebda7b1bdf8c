#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace girthguard::detail {

// Fixed-width dynamic bitset sized for one graph; just enough for the solver.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), words_(static_cast<size_t>((n + 63) / 64), 0) {}

    void set(int i) { words_[static_cast<size_t>(i >> 6)] |= uint64_t{1} << (i & 63); }
    bool test(int i) const { return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }

    void operator|=(const Bits& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool all_of(int n) const { return count() == n; }

    /// Lowest index in [0, n_) whose bit is clear, or -1 when full.
    int first_zero() const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t inv = ~words_[w];
            if (w + 1 == words_.size() && (n_ & 63) != 0)
                inv &= (uint64_t{1} << (n_ & 63)) - 1;
            if (inv != 0) return static_cast<int>(w * 64) + std::countr_zero(inv);
        }
        return -1;
    }

    bool operator==(const Bits&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace girthguard::detail
