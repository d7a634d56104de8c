#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sckit {

// Fixed-universe dynamic bit set over element indices 0..n-1. Value type,
// totally ordered by (popcount, word sequence) so subgroup lists have a
// canonical order.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    void fill() {
        for (auto& x : w_) x = ~uint64_t(0);
        trim();
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool operator<(const Bitset& o) const {
        int a = count(), b = o.count();
        if (a != b) return a < b;
        return w_ < o.w_;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    // set difference: *this minus o
    Bitset andnot(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // true iff *this is a subset of o
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int min_member() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                out.push_back(int(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                f(int(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : w_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    void trim() {
        int rem = n_ & 63;
        if (rem && !w_.empty()) w_.back() &= (uint64_t(1) << rem) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace sckit
