#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sckit/cyclotomic.hpp"
#include "sckit/error.hpp"
#include "sckit/group.hpp"
#include "sckit/modarith.hpp"

namespace sckit {

// Exact irreducible character table. Rows are characters (principal first,
// then sorted by degree and canonical values), columns are conjugacy classes.
struct CharacterTable {
    int k = 0;
    int modulus = 1;  // ambient root-of-unity order = group exponent
    std::vector<std::vector<Cyclotomic>> values;
    std::vector<int64_t> degrees;
    std::vector<Subgroup> kernels;
    std::vector<int> inv_class;  // class index of the inverses of each class
};

// Per class l: the set E_l of characters with chi(g_l) != chi(1), as a bit
// set over character indices.
struct IdempotentSupport {
    std::vector<Bitset> of_class;
};

namespace dixon {

using Row = std::vector<int64_t>;
using Mat = std::vector<Row>;

// Basis of a subspace of F_p^k in reduced row echelon form.
struct Subspace {
    Mat basis;
    std::vector<int> pivots;
};

inline void rref(const Fp& f, Mat& m, std::vector<int>& pivots) {
    pivots.clear();
    if (m.empty()) return;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        int64_t iv = f.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], iv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            int64_t t = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(t, m[r][j]));
        }
        pivots.push_back(int(c));
        ++r;
    }
    m.resize(r);
}

inline Subspace full_space(int k) {
    Subspace s;
    s.basis.assign(k, Row(k, 0));
    s.pivots.resize(k);
    for (int i = 0; i < k; ++i) {
        s.basis[i][i] = 1;
        s.pivots[i] = i;
    }
    return s;
}

// Matrix of the action of M on the subspace, in basis coordinates. The
// subspace must be M-invariant (class matrices commute, so it is).
inline Mat restrict_action(const Fp& f, const Mat& m, const Subspace& s) {
    size_t d = s.basis.size(), k = m.size();
    Mat c(d, Row(d, 0));
    for (size_t i = 0; i < d; ++i) {
        Row r(k, 0);
        for (size_t j = 0; j < k; ++j) {
            if (s.basis[i][j] == 0) continue;
            for (size_t l = 0; l < k; ++l) r[l] = f.add(r[l], f.mul(s.basis[i][j], m[j][l]));
        }
        for (size_t j = 0; j < d; ++j) {
            int64_t coef = r[s.pivots[j]];
            c[i][j] = coef;
            if (coef == 0) continue;
            for (size_t l = 0; l < k; ++l) r[l] = f.sub(r[l], f.mul(coef, s.basis[j][l]));
        }
        for (int64_t v : r)
            if (v != 0) throw LiftFailure("subspace not invariant under class matrix");
    }
    return c;
}

// Characteristic polynomial via Hessenberg reduction, lowest degree first.
inline Row charpoly(const Fp& f, Mat h) {
    size_t d = h.size();
    for (size_t j = 0; j + 2 < d + 1 && j + 1 < d; ++j) {
        size_t piv = j + 1;
        while (piv < d && h[piv][j] == 0) ++piv;
        if (piv == d) continue;
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (size_t i = 0; i < d; ++i) std::swap(h[i][piv], h[i][j + 1]);
        }
        int64_t iv = f.inv(h[j + 1][j]);
        for (size_t i = j + 2; i < d; ++i) {
            if (h[i][j] == 0) continue;
            int64_t t = f.mul(h[i][j], iv);
            for (size_t l = 0; l < d; ++l) h[i][l] = f.sub(h[i][l], f.mul(t, h[j + 1][l]));
            for (size_t l = 0; l < d; ++l) h[l][j + 1] = f.add(h[l][j + 1], f.mul(t, h[l][i]));
        }
    }
    // p_m = (x - h[m][m]) p_{m-1} - sum_i h[i][m] (prod subdiag) p_{i-1}
    std::vector<Row> p(d + 1);
    p[0] = {1};
    for (size_t m = 0; m < d; ++m) {
        Row cur(m + 2, 0);
        for (size_t t = 0; t < p[m].size(); ++t) {
            cur[t + 1] = f.add(cur[t + 1], p[m][t]);
            cur[t] = f.sub(cur[t], f.mul(h[m][m], p[m][t]));
        }
        int64_t prod = 1;
        for (size_t i = m; i-- > 0;) {
            prod = f.mul(prod, h[i + 1][i]);
            int64_t coef = f.mul(h[i][m], prod);
            if (coef == 0) continue;
            for (size_t t = 0; t < p[i].size(); ++t) cur[t] = f.sub(cur[t], f.mul(coef, p[i][t]));
        }
        p[m + 1] = std::move(cur);
    }
    return p[d];
}

inline int64_t eval_poly(const Fp& f, const Row& poly, int64_t x) {
    int64_t r = 0;
    for (size_t t = poly.size(); t-- > 0;) r = f.add(f.mul(r, x), poly[t]);
    return r;
}

// Basis of ker(c - lambda I), in subspace coordinates.
inline Mat eigen_nullspace(const Fp& f, Mat c, int64_t lambda) {
    size_t d = c.size();
    for (size_t i = 0; i < d; ++i) c[i][i] = f.sub(c[i][i], lambda);
    std::vector<int> pivots;
    rref(f, c, pivots);
    std::vector<char> is_pivot(d, 0);
    for (int pc : pivots) is_pivot[pc] = 1;
    Mat null;
    for (size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        Row v(d, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[size_t(pivots[r])] = f.neg(c[r][free]);
        null.push_back(std::move(v));
    }
    return null;
}

inline std::vector<Subspace> split(const Fp& f, const Mat& m, const Subspace& s) {
    Mat c = restrict_action(f, m, s);
    Row poly = charpoly(f, c);
    std::vector<int64_t> roots;
    for (int64_t x = 0; x < f.p; ++x)
        if (eval_poly(f, poly, x) == 0) {
            roots.push_back(x);
            if (int64_t(roots.size()) == int64_t(c.size())) break;
        }
    std::vector<Subspace> out;
    size_t total = 0;
    for (int64_t lambda : roots) {
        Mat null = eigen_nullspace(f, c, lambda);
        if (null.empty()) continue;
        Mat ambient(null.size(), Row(s.basis[0].size(), 0));
        for (size_t i = 0; i < null.size(); ++i)
            for (size_t j = 0; j < null[i].size(); ++j) {
                if (null[i][j] == 0) continue;
                for (size_t l = 0; l < ambient[i].size(); ++l)
                    ambient[i][l] = f.add(ambient[i][l], f.mul(null[i][j], s.basis[j][l]));
            }
        Subspace sub;
        sub.basis = std::move(ambient);
        rref(f, sub.basis, sub.pivots);
        total += sub.basis.size();
        out.push_back(std::move(sub));
    }
    if (total != s.basis.size()) throw LiftFailure("class matrix not diagonalizable over F_p");
    return out;
}

}  // namespace dixon

// Exact character table by the Dixon-Schneider method: common eigenvectors
// of the class matrices over F_p (p = 1 mod exponent, p > 2|G|) yield the
// central characters; degrees and values follow, and each value lifts to an
// exact cyclotomic via root-of-unity multiplicity counts. Both orthogonality
// relations are verified exactly before returning.
inline CharacterTable character_table(const Group& g, const ConjugacyClasses& cc,
                                      const StructureConstants& sc, uint64_t rng_seed = 7) {
    const int k = cc.count;
    const int e = g.exponent;
    CharacterTable ct;
    ct.k = k;
    ct.modulus = e;
    ct.inv_class.resize(k);
    for (int l = 0; l < k; ++l) ct.inv_class[l] = cc.class_of[g.inv[cc.reps[l]]];

    Fp f{find_dixon_prime(e, 2ll * g.n)};

    // class multiplication matrices: (M_i)[j][l] = a_ijl
    auto class_matrix = [&](const std::vector<int64_t>& weights) {
        dixon::Mat m(k, dixon::Row(k, 0));
        for (int i = 0; i < k; ++i) {
            if (weights[i] == 0) continue;
            for (int j = 0; j < k; ++j)
                for (int l = 0; l < k; ++l)
                    m[j][l] = f.add(m[j][l], f.mul(weights[i], sc.at(i, j, l)));
        }
        return m;
    };

    std::vector<dixon::Subspace> spaces{dixon::full_space(k)};
    auto split_pass = [&](const dixon::Mat& m) {
        std::vector<dixon::Subspace> next;
        bool all_done = true;
        for (auto& s : spaces) {
            if (s.basis.size() <= 1) {
                next.push_back(std::move(s));
                continue;
            }
            for (auto& piece : dixon::split(f, m, s)) {
                if (piece.basis.size() > 1) all_done = false;
                next.push_back(std::move(piece));
            }
        }
        spaces = std::move(next);
        return all_done;
    };
    bool done = (k == 1);
    for (int i = 1; i < k && !done; ++i) {
        std::vector<int64_t> w(k, 0);
        w[i] = 1;
        done = split_pass(class_matrix(w));
    }
    // fallback: random combinations of class matrices (should not be needed;
    // the common eigenspaces of all class matrices are one-dimensional)
    std::mt19937_64 rng(rng_seed);
    for (int attempt = 0; !done && attempt < 64; ++attempt) {
        std::vector<int64_t> w(k);
        for (auto& x : w) x = int64_t(rng() % uint64_t(f.p));
        done = split_pass(class_matrix(w));
    }
    if (!done) throw LiftFailure("eigenspace splitting stalled");
    if (int(spaces.size()) != k) throw LiftFailure("wrong number of central characters");

    // central characters omega[i][l], normalized so the identity-class
    // coordinate is 1
    std::vector<std::vector<int64_t>> omega(k);
    for (int i = 0; i < k; ++i) {
        dixon::Row u = spaces[i].basis[0];
        if (u[0] == 0) throw LiftFailure("eigenvector vanishes at identity class");
        int64_t s = f.inv(u[0]);
        for (auto& v : u) v = f.mul(v, s);
        omega[i] = std::move(u);
    }

    // degrees: chi(1)^2 = |G| / sum_l omega_l * omega_{l*} / m_l
    std::vector<int64_t> deg(k);
    for (int i = 0; i < k; ++i) {
        int64_t s = 0;
        for (int l = 0; l < k; ++l)
            s = f.add(s, f.mul(f.mul(omega[i][l], omega[i][ct.inv_class[l]]), f.inv(cc.sizes[l])));
        if (s == 0) throw LiftFailure("degree sum vanished");
        int64_t d2 = f.mul(g.n, f.inv(s));
        int64_t found = 0;
        for (int64_t d = 1; d * d <= g.n; ++d)
            if (f.mul(d, d) == d2) {
                found = d;
                break;
            }
        if (found == 0) throw LiftFailure("no integer degree matches");
        deg[i] = found;
    }

    // exact values: chi(g) = sum_s c_s zeta_m^s with multiplicities c_s
    // recovered by discrete Fourier inversion over F_p
    int64_t z = e == 1 ? 1 : f.pow(primitive_root(f.p), (f.p - 1) / e);
    std::vector<int> ord(k);
    std::vector<std::vector<int>> powclass(k);
    for (int l = 0; l < k; ++l) {
        ord[l] = g.element_order(cc.reps[l]);
        powclass[l].resize(ord[l]);
        int x = 0;
        for (int t = 0; t < ord[l]; ++t) {
            powclass[l][t] = cc.class_of[x];
            x = g.mul(x, cc.reps[l]);
        }
    }
    auto chi_mod = [&](int i, int l) { return f.mul(deg[i], f.mul(omega[i][l], f.inv(cc.sizes[l]))); };

    ct.values.assign(k, std::vector<Cyclotomic>(k));
    ct.degrees = deg;
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            int m = ord[l];
            int64_t zm = f.pow(z, e / m);
            int64_t zminv = f.inv(zm);
            std::vector<int64_t> coeffs(e, 0);
            int64_t minv = f.inv(m);
            int64_t total = 0;
            for (int s = 0; s < m; ++s) {
                int64_t c = 0;
                for (int t = 0; t < m; ++t)
                    c = f.add(c, f.mul(chi_mod(i, powclass[l][t]), f.pow(zminv, int64_t(s) * t % m)));
                c = f.mul(c, minv);
                if (c > deg[i]) throw LiftFailure("root-of-unity multiplicity exceeds degree");
                coeffs[size_t(s) * (e / m)] += c;
                total += c;
            }
            if (total != deg[i]) throw LiftFailure("multiplicities do not sum to degree");
            ct.values[i][l] = Cyclotomic(e, std::move(coeffs));
        }

    // canonical row order: principal first, then by (degree, values)
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    auto is_principal = [&](int i) {
        if (deg[i] != 1) return false;
        Cyclotomic one(e, 1);
        for (int l = 0; l < k; ++l)
            if (ct.values[i][l] != one) return false;
        return true;
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        bool pa = is_principal(a), pb = is_principal(b);
        if (pa != pb) return pa;
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        return ct.values[a] < ct.values[b];
    });
    {
        std::vector<std::vector<Cyclotomic>> vv(k);
        std::vector<int64_t> dd(k);
        for (int i = 0; i < k; ++i) {
            vv[i] = std::move(ct.values[perm[i]]);
            dd[i] = deg[perm[i]];
        }
        ct.values = std::move(vv);
        ct.degrees = std::move(dd);
    }

    // exact verification: both orthogonality relations and the degree sum
    int64_t degsum = 0;
    for (int i = 0; i < k; ++i) degsum += ct.degrees[i] * ct.degrees[i];
    if (degsum != g.n) throw VerificationFailed("sum of squared degrees != |G|");
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Cyclotomic s(e);
            for (int l = 0; l < k; ++l)
                s += cc.sizes[l] * (ct.values[i][l] * ct.values[j][ct.inv_class[l]]);
            if (s != Cyclotomic(e, i == j ? g.n : 0))
                throw VerificationFailed("row orthogonality fails for rows " + std::to_string(i) +
                                         "," + std::to_string(j));
        }
    for (int l = 0; l < k; ++l)
        for (int l2 = l; l2 < k; ++l2) {
            Cyclotomic s(e);
            for (int i = 0; i < k; ++i) s += ct.values[i][l] * ct.values[i][ct.inv_class[l2]];
            if (s != Cyclotomic(e, l == l2 ? g.n / cc.sizes[l] : 0))
                throw VerificationFailed("column orthogonality fails for classes " +
                                         std::to_string(l) + "," + std::to_string(l2));
        }

    // kernels: ker chi = {g : chi(g) = chi(1)}, always a union of classes
    ct.kernels.resize(k);
    for (int i = 0; i < k; ++i) {
        Cyclotomic d(e, ct.degrees[i]);
        Bitset ker(g.n);
        for (int x = 0; x < g.n; ++x)
            if (ct.values[i][cc.class_of[x]] == d) ker.set(x);
        ct.kernels[i] = make_subgroup(std::move(ker));
    }
    return ct;
}

inline const Subgroup& kernel(const CharacterTable& ct, int i) { return ct.kernels[size_t(i)]; }

inline IdempotentSupport idempotent_supports(const CharacterTable& ct) {
    IdempotentSupport es;
    es.of_class.assign(ct.k, Bitset(ct.k));
    for (int l = 0; l < ct.k; ++l)
        for (int i = 0; i < ct.k; ++i)
            if (ct.values[i][l] != Cyclotomic(ct.modulus, ct.degrees[i])) es.of_class[l].set(i);
    return es;
}

// Coefficients of the primitive central idempotent e_chi in the class-sum
// basis: coefficient on C^_l is chi(1) chi(g_l^-1) / |G|.
inline std::vector<CycQ> central_idempotent(const CharacterTable& ct, int64_t group_order, int i) {
    std::vector<CycQ> out(ct.k);
    for (int l = 0; l < ct.k; ++l)
        out[l] = CycQ(ct.degrees[i] * ct.values[i][ct.inv_class[l]], group_order);
    return out;
}

}  // namespace sckit
