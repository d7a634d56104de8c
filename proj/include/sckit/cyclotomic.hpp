#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "sckit/error.hpp"

namespace sckit {

namespace cyc_detail {

// Per-modulus reduction data. The canonical form of an element of Z[zeta_e]
// is supported on the tensor basis: exponents t whose component at every
// prime power q | e (via CRT) is below phi(q). Rewriting an exponent with an
// over-limit component uses 1 + z^(q/p) + z^(2q/p) + ... = 0 for z = zeta_q
// and touches no other prime's component, so one sweep per prime canonicalizes.
struct CycTable {
    int e;
    struct PrimePower {
        int64_t p, q, phi, pam1;  // q = p^a, pam1 = p^(a-1)
        int64_t f;                // e / q
        std::vector<int> comp;    // component u(t) for t in 0..e-1
    };
    std::vector<PrimePower> pps;
    std::vector<char> in_basis;

    explicit CycTable(int e_) : e(e_) {
        int64_t m = e;
        for (int64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                int64_t q = 1;
                while (m % p == 0) {
                    m /= p;
                    q *= p;
                }
                add_prime(p, q);
            }
        if (m > 1) add_prime(m, m);
        in_basis.assign(e, 1);
        for (const auto& pp : pps)
            for (int t = 0; t < e; ++t)
                if (pp.comp[t] >= pp.phi) in_basis[t] = 0;
    }

private:
    void add_prime(int64_t p, int64_t q) {
        PrimePower pp;
        pp.p = p;
        pp.q = q;
        pp.pam1 = q / p;
        pp.phi = pp.pam1 * (p - 1);
        pp.f = e / q;
        // u(t) solves t = u*f (mod q); f is invertible mod q
        int64_t finv = 1;
        for (int64_t x = 1; x < q; ++x)
            if ((pp.f % q) * x % q == 1) {
                finv = x;
                break;
            }
        pp.comp.resize(e);
        for (int t = 0; t < e; ++t) pp.comp[t] = int((t % q) * finv % q);
        pps.push_back(std::move(pp));
    }
};

inline const CycTable& table(int e) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[e];
    if (!slot) slot = std::make_unique<CycTable>(e);
    return *slot;
}

}  // namespace cyc_detail

// Exact element of Z[zeta_e], held in canonical (tensor-basis) form so that
// equality is coefficient-wise comparison.
class Cyclotomic {
public:
    Cyclotomic() : e_(1), c_(1, 0) {}
    explicit Cyclotomic(int modulus, int64_t constant = 0) : e_(modulus), c_(modulus, 0) {
        c_[0] = constant;
    }
    Cyclotomic(int modulus, std::vector<int64_t> coeffs) : e_(modulus), c_(std::move(coeffs)) {
        c_.resize(e_, 0);
        canonicalize();
    }

    static Cyclotomic root_power(int modulus, int64_t power, int64_t coeff = 1) {
        Cyclotomic z(modulus);
        int64_t t = power % modulus;
        if (t < 0) t += modulus;
        z.c_[size_t(t)] = coeff;
        z.canonicalize();
        return z;
    }

    int modulus() const { return e_; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (int64_t v : c_)
            if (v) return false;
        return true;
    }

    // true iff the value is a rational integer
    bool is_integer() const {
        for (size_t t = 1; t < c_.size(); ++t)
            if (c_[t]) return false;
        return true;
    }
    int64_t integer_value() const {
        if (!is_integer()) throw VerificationFailed("cyclotomic value is not a rational integer");
        return c_[0];
    }

    bool operator==(const Cyclotomic& o) const { return e_ == o.e_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    bool operator<(const Cyclotomic& o) const {  // deterministic total order
        if (e_ != o.e_) return e_ < o.e_;
        return c_ < o.c_;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        match(o);
        for (size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
        return *this;  // sum of canonical forms is canonical
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        match(o);
        for (size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Cyclotomic& operator*=(int64_t s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend Cyclotomic operator*(Cyclotomic a, int64_t s) { return a *= s; }
    friend Cyclotomic operator*(int64_t s, Cyclotomic a) { return a *= s; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.e_ != b.e_) throw VerificationFailed("cyclotomic modulus mismatch in product");
        Cyclotomic r(a.e_);
        for (int s = 0; s < a.e_; ++s) {
            if (!a.c_[s]) continue;
            for (int t = 0; t < a.e_; ++t) {
                if (!b.c_[t]) continue;
                int u = s + t;
                if (u >= a.e_) u -= a.e_;
                r.c_[u] += a.c_[s] * b.c_[t];
            }
        }
        r.canonicalize();
        return r;
    }

    // complex conjugation: zeta^t -> zeta^(-t)
    Cyclotomic conj() const {
        Cyclotomic r(e_);
        for (int t = 0; t < e_; ++t) {
            if (!c_[t]) continue;
            r.c_[t == 0 ? 0 : e_ - t] += c_[t];
        }
        r.canonicalize();
        return r;
    }

    // reinterpret in Z[zeta_m] for e | m
    Cyclotomic rebase(int m) const {
        if (m == e_) return *this;
        if (m % e_ != 0) throw VerificationFailed("cyclotomic rebase target not a multiple");
        Cyclotomic r(m);
        int f = m / e_;
        for (int t = 0; t < e_; ++t) r.c_[size_t(t) * f] = c_[t];
        r.canonicalize();
        return r;
    }

    std::string to_string() const {
        if (is_integer()) return std::to_string(c_[0]);
        std::string out;
        for (int t = 0; t < e_; ++t) {
            if (!c_[t]) continue;
            int64_t v = c_[t];
            if (!out.empty()) {
                out += v > 0 ? "+" : "-";
                v = v > 0 ? v : -v;
            }
            std::string term;
            if (t == 0)
                term = std::to_string(v);
            else {
                term = (v == 1 || v == -1) ? (v == -1 ? "-" : "") : std::to_string(v) + "*";
                term += "z" + std::to_string(e_);
                if (t != 1) term += "^" + std::to_string(t);
            }
            out += term;
        }
        return out.empty() ? "0" : out;
    }

    void canonicalize() {
        const auto& tab = cyc_detail::table(e_);
        for (const auto& pp : tab.pps) {
            for (int t = 0; t < e_; ++t) {
                if (!c_[t] || pp.comp[t] < pp.phi) continue;
                // zeta_q^u = -sum_j zeta_q^(u - phi + j*p^(a-1)), j = 0..p-2;
                // the rewrite lowers only this prime's component.
                int64_t cval = c_[t];
                c_[t] = 0;
                for (int64_t j = 0; j + 2 <= pp.p; ++j) {
                    int64_t shift = (pp.phi - j * pp.pam1) * pp.f % e_;
                    int64_t tj = (t - shift + e_) % e_;
                    c_[size_t(tj)] -= cval;
                }
            }
        }
    }

private:
    void match(const Cyclotomic& o) const {
        if (e_ != o.e_) throw VerificationFailed("cyclotomic modulus mismatch");
    }

    int e_;
    std::vector<int64_t> c_;
};

// Rational multiple of a cyclotomic integer: num / den with den > 0,
// normalized by the gcd of all integer parts.
struct CycQ {
    Cyclotomic num;
    int64_t den = 1;

    CycQ() = default;
    CycQ(Cyclotomic n, int64_t d) : num(std::move(n)), den(d) { normalize(); }
    explicit CycQ(const Cyclotomic& n) : num(n), den(1) {}

    void normalize() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        if (den == 0) throw VerificationFailed("zero denominator");
        int64_t g = den;
        for (int64_t v : num.coeffs()) g = std::gcd(g, v < 0 ? -v : v);
        if (g > 1) {
            std::vector<int64_t> cs = num.coeffs();
            for (auto& v : cs) v /= g;
            num = Cyclotomic(num.modulus(), std::move(cs));
            den /= g;
        }
        if (num.is_zero()) den = 1;
    }

    bool is_zero() const { return num.is_zero(); }

    bool operator==(const CycQ& o) const { return den == o.den && num == o.num; }
    bool operator!=(const CycQ& o) const { return !(*this == o); }

    friend CycQ operator+(const CycQ& a, const CycQ& b) {
        return CycQ(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend CycQ operator-(const CycQ& a, const CycQ& b) {
        return CycQ(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend CycQ operator*(const CycQ& a, const CycQ& b) {
        return CycQ(a.num * b.num, a.den * b.den);
    }
};

}  // namespace sckit
