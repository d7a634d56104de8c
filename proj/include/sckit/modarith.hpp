#pragma once

#include <cstdint>
#include <vector>

#include "sckit/error.hpp"

namespace sckit {

// Arithmetic in the prime field F_p used by the Dixon lifting step.
// p stays far below 2^31, so products fit in int64.
struct Fp {
    int64_t p;

    int64_t add(int64_t a, int64_t b) const { return (a + b) % p; }
    int64_t sub(int64_t a, int64_t b) const { return ((a - b) % p + p) % p; }
    int64_t mul(int64_t a, int64_t b) const { return (a % p) * (b % p) % p; }
    int64_t neg(int64_t a) const { return (p - a % p) % p; }

    int64_t pow(int64_t a, int64_t e) const {
        a %= p;
        if (a < 0) a += p;
        int64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    int64_t inv(int64_t a) const { return pow(a, p - 2); }
};

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// Smallest prime p = 1 (mod m) with p > bound.
inline int64_t find_dixon_prime(int64_t m, int64_t bound) {
    int64_t p = (bound / m) * m + 1;
    if (p <= bound) p += m;
    while (!is_prime(p)) p += m;
    return p;
}

// Smallest generator of F_p^*.
inline int64_t primitive_root(int64_t p) {
    Fp f{p};
    auto qs = prime_factors(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (int64_t q : qs)
            if (f.pow(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw LiftFailure("no primitive root found (p not prime?)");
}

}  // namespace sckit
