#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sckit/bitset.hpp"
#include "sckit/error.hpp"
#include "sckit/perm.hpp"

namespace sckit {

inline constexpr int kDefaultOrderCap = 5000;
inline constexpr int kDefaultAutCap = 256;
// Orders up to this bound get an exhaustive associativity check; larger
// tables are checked on 3*n*n seeded random triples.
inline constexpr int kExhaustiveAssocBound = 512;

// A finite group materialized as a Cayley table over indices 0..n-1 with the
// identity at index 0.
struct Group {
    int n = 0;
    std::vector<int> mul_table;  // row-major n*n
    std::vector<int> inv;
    std::vector<std::string> names;
    int exponent = 1;

    int mul(int a, int b) const { return mul_table[size_t(a) * n + b]; }

    int conjugate(int g, int x) const {  // x g x^-1
        return mul(mul(x, g), inv[x]);
    }

    int power(int g, long long k) const {
        int r = 0;
        long long e = k % exponent;
        if (e < 0) e += exponent;
        int base = g;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    int element_order(int g) const {
        int o = 1, x = g;
        while (x != 0) {
            x = mul(x, g);
            ++o;
        }
        return o;
    }
};

struct ConjugacyClasses {
    std::vector<int> class_of;  // element index -> class index
    std::vector<int> reps;      // class index -> representative element
    std::vector<int> sizes;
    int count = 0;
};

// a[i][j][l] = |{(x,y) in C_i x C_j : xy = reps[l]}|, the coefficients of
// the class-sum products C^_i * C^_j = sum_l a_ijl C^_l.
struct StructureConstants {
    int k = 0;
    std::vector<int64_t> a;  // k*k*k, row-major

    int64_t at(int i, int j, int l) const { return a[(size_t(i) * k + j) * k + l]; }
    int64_t& at(int i, int j, int l) { return a[(size_t(i) * k + j) * k + l]; }
};

struct Subgroup {
    Bitset members;
    int order = 0;

    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool operator!=(const Subgroup& o) const { return members != o.members; }
    bool operator<(const Subgroup& o) const { return members < o.members; }
};

inline Subgroup make_subgroup(Bitset members) {
    Subgroup s;
    s.order = members.count();
    s.members = std::move(members);
    return s;
}

namespace detail {

inline void check_latin_and_identity(const std::vector<int>& t, int n) {
    for (int r = 0; r < n; ++r) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int c = 0; c < n; ++c) {
            int v = t[size_t(r) * n + c];
            int w = t[size_t(c) * n + r];
            if (v < 0 || v >= n) throw NotAGroup("table entry out of range at (" + std::to_string(r) + "," + std::to_string(c) + ")");
            if (seen_row[v]) throw NotAGroup("row " + std::to_string(r) + " is not a permutation (duplicate value " + std::to_string(v) + ")");
            if (seen_col[w]) throw NotAGroup("column " + std::to_string(r) + " is not a permutation (duplicate value " + std::to_string(w) + ")");
            seen_row[v] = seen_col[w] = 1;
        }
    }
}

inline int find_identity(const std::vector<int>& t, int n) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (t[size_t(e) * n + x] != x || t[size_t(x) * n + e] != x) ok = false;
        if (ok) return e;
    }
    throw NotAGroup("no two-sided identity element");
}

inline void check_associativity(const Group& g, uint64_t seed) {
    auto check = [&](int a, int b, int c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw NotAGroup("associativity fails on triple (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (g.n <= kExhaustiveAssocBound) {
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> d(0, g.n - 1);
        long long samples = 3ll * g.n * g.n;
        for (long long s = 0; s < samples; ++s) check(d(rng), d(rng), d(rng));
    }
}

// Fills inv and exponent; throws if some element has no inverse.
inline void finish_group(Group& g) {
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                g.inv[a] = b;
                break;
            }
        if (g.inv[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
    }
    long long ex = 1;
    for (int a = 0; a < g.n; ++a) ex = std::lcm(ex, (long long)g.element_order(a));
    g.exponent = int(ex);
    if (g.n % g.exponent != 0)
        throw NotAGroup("exponent " + std::to_string(g.exponent) + " does not divide order");
    if (g.names.empty()) {
        g.names.resize(g.n);
        for (int i = 0; i < g.n; ++i) g.names[i] = "x" + std::to_string(i);
    }
}

}  // namespace detail

// Validates a raw Cayley table, relabels so the identity sits at index 0, and
// returns the group. Throws NotAGroup with a witness on any failure.
inline Group group_from_cayley(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> names = {},
                               uint64_t assoc_seed = 1) {
    int n = int(table.size());
    if (n == 0) throw NotAGroup("empty table");
    std::vector<int> flat(size_t(n) * n);
    for (int r = 0; r < n; ++r) {
        if (int(table[r].size()) != n) throw NotAGroup("table is not square");
        for (int c = 0; c < n; ++c) {
            if (table[r][c] < 0 || table[r][c] >= n)
                throw NotAGroup("table entry out of range at (" + std::to_string(r) + "," + std::to_string(c) + ")");
            flat[size_t(r) * n + c] = table[r][c];
        }
    }
    detail::check_latin_and_identity(flat, n);
    int e = detail::find_identity(flat, n);
    Group g;
    g.n = n;
    if (e != 0) {
        // swap labels 0 <-> e
        std::vector<int> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0);
        relabel[0] = e;
        relabel[e] = 0;
        g.mul_table.resize(size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                g.mul_table[size_t(a) * n + b] = relabel[flat[size_t(relabel[a]) * n + relabel[b]]];
        if (!names.empty()) {
            g.names.resize(n);
            for (int i = 0; i < n; ++i) g.names[i] = names[relabel[i]];
        }
    } else {
        g.mul_table = std::move(flat);
        g.names = std::move(names);
    }
    if (!g.names.empty() && int(g.names.size()) != n) throw NotAGroup("names length mismatch");
    detail::finish_group(g);
    detail::check_associativity(g, assoc_seed);
    return g;
}

// Breadth-first closure of a set of permutation generators. Elements are
// named by cycle notation.
inline Group group_from_permutations(const std::vector<Perm>& generators,
                                     int order_cap = kDefaultOrderCap) {
    int m = 1;
    for (const auto& p : generators) {
        if (!is_permutation(p)) throw ParseError("generator is not a permutation");
        m = std::max(m, int(p.size()));
    }
    std::vector<Perm> gens;
    for (auto p : generators) {
        int old = int(p.size());
        p.resize(m);
        for (int i = old; i < m; ++i) p[i] = i;
        gens.push_back(std::move(p));
    }
    std::vector<Perm> elems{perm_identity(m)};
    std::map<Perm, int> index{{elems[0], 0}};
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (const auto& gen : gens) {
            Perm prod = perm_compose(elems[cur], gen);
            auto [it, fresh] = index.try_emplace(prod, int(elems.size()));
            if (fresh) {
                if (int(elems.size()) + 1 > order_cap)
                    throw OrderCapExceeded("permutation closure exceeds order cap " + std::to_string(order_cap));
                elems.push_back(std::move(prod));
                todo.push(it->second);
            }
        }
    }
    int n = int(elems.size());
    Group g;
    g.n = n;
    g.mul_table.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.mul_table[size_t(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
    g.names.resize(n);
    for (int i = 0; i < n; ++i) g.names[i] = format_cycles(elems[i]);
    detail::finish_group(g);
    return g;
}

inline Group group_direct_product(const Group& g1, const Group& g2,
                                  int order_cap = kDefaultOrderCap) {
    long long n = (long long)g1.n * g2.n;
    if (n > order_cap) throw OrderCapExceeded("direct product exceeds order cap " + std::to_string(order_cap));
    Group g;
    g.n = int(n);
    g.mul_table.resize(size_t(n) * n);
    auto id = [&](int a1, int a2) { return a1 * g2.n + a2; };
    for (int a1 = 0; a1 < g1.n; ++a1)
        for (int a2 = 0; a2 < g2.n; ++a2)
            for (int b1 = 0; b1 < g1.n; ++b1)
                for (int b2 = 0; b2 < g2.n; ++b2)
                    g.mul_table[size_t(id(a1, a2)) * g.n + id(b1, b2)] = id(g1.mul(a1, b1), g2.mul(a2, b2));
    g.names.resize(n);
    for (int a1 = 0; a1 < g1.n; ++a1)
        for (int a2 = 0; a2 < g2.n; ++a2)
            g.names[id(a1, a2)] = "(" + g1.names[a1] + "," + g2.names[a2] + ")";
    detail::finish_group(g);
    return g;
}

// Classes ordered by (size, smallest member); class 0 is {identity}.
inline ConjugacyClasses conjugacy_classes(const Group& g) {
    ConjugacyClasses cc;
    cc.class_of.assign(g.n, -1);
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> classes;  // ((size,min), members)
    for (int s = 0; s < g.n; ++s) {
        if (cc.class_of[s] >= 0) continue;
        std::vector<int> orbit;
        std::vector<char> seen(g.n, 0);
        orbit.push_back(s);
        seen[s] = 1;
        for (size_t q = 0; q < orbit.size(); ++q)
            for (int x = 0; x < g.n; ++x) {
                int y = g.conjugate(orbit[q], x);
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        int mn = *std::min_element(orbit.begin(), orbit.end());
        classes.push_back({{int(orbit.size()), mn}, std::move(orbit)});
        for (int y : classes.back().second) cc.class_of[y] = 0;  // visited; real index assigned below
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cc.count = int(classes.size());
    cc.reps.resize(cc.count);
    cc.sizes.resize(cc.count);
    for (int c = 0; c < cc.count; ++c) {
        cc.reps[c] = classes[c].first.second;
        cc.sizes[c] = classes[c].first.first;
        for (int y : classes[c].second) cc.class_of[y] = c;
    }
    return cc;
}

// Exact counts by direct enumeration over class pairs.
inline StructureConstants structure_constants(const Group& g, const ConjugacyClasses& cc) {
    StructureConstants sc;
    sc.k = cc.count;
    sc.a.assign(size_t(sc.k) * sc.k * sc.k, 0);
    std::vector<char> is_rep(g.n, 0);
    for (int r : cc.reps) is_rep[r] = 1;
    std::vector<std::vector<int>> members(cc.count);
    for (int x = 0; x < g.n; ++x) members[cc.class_of[x]].push_back(x);
    for (int i = 0; i < sc.k; ++i)
        for (int j = 0; j < sc.k; ++j)
            for (int x : members[i])
                for (int y : members[j]) {
                    int p = g.mul(x, y);
                    if (is_rep[p]) ++sc.at(i, j, cc.class_of[p]);
                }
    return sc;
}

// Smallest subgroup containing the seed elements (closure under mul, inv).
inline Subgroup subgroup_generate(const Group& g, const std::vector<int>& seeds) {
    Bitset in(g.n);
    std::vector<int> elems{0};
    in.set(0);
    for (int s : seeds)
        if (!in.test(s)) {
            in.set(s);
            elems.push_back(s);
        }
    for (size_t q = 0; q < elems.size(); ++q) {
        int x = elems[q];
        int xi = g.inv[x];
        if (!in.test(xi)) {
            in.set(xi);
            elems.push_back(xi);
        }
        for (size_t r = 0; r < elems.size(); ++r) {
            for (int y : {g.mul(x, elems[r]), g.mul(elems[r], x)})
                if (!in.test(y)) {
                    in.set(y);
                    elems.push_back(y);
                }
        }
    }
    return make_subgroup(std::move(in));
}

inline bool is_subgroup(const Group& g, const Bitset& s) {
    if (!s.test(0)) return false;
    auto m = s.members();
    for (int x : m) {
        if (!s.test(g.inv[x])) return false;
        for (int y : m)
            if (!s.test(g.mul(x, y))) return false;
    }
    return true;
}

// Normality via the union-of-classes characterization.
inline bool is_normal(const Group& g, const ConjugacyClasses& cc, const Subgroup& s) {
    std::vector<char> class_hit(cc.count, 0);
    for (int x : s.members.members()) class_hit[cc.class_of[x]] = 1;
    int total = 0;
    for (int c = 0; c < cc.count; ++c)
        if (class_hit[c]) total += cc.sizes[c];
    return total == s.order;
}

// Set product {xy : x in a, y in b}; requires both inputs normal so the
// result is a subgroup.
inline Subgroup subgroup_product(const Group& g, const ConjugacyClasses& cc,
                                 const Subgroup& a, const Subgroup& b) {
    if (!is_normal(g, cc, a)) throw NotNormal("left factor of subgroup product is not normal");
    if (!is_normal(g, cc, b)) throw NotNormal("right factor of subgroup product is not normal");
    Bitset r(g.n);
    auto bm = b.members.members();
    for (int x : a.members.members())
        for (int y : bm) r.set(g.mul(x, y));
    Subgroup s = make_subgroup(std::move(r));
    if (!is_subgroup(g, s.members))
        throw NotASubgroup("product of normal subgroups failed closure check");
    return s;
}

inline Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    return make_subgroup(a.members & b.members);
}

// Cayley table on cosets of a normal subgroup, plus the canonical projection.
// Quotient elements are ordered by smallest coset member, so the identity
// coset is index 0.
inline std::pair<Group, std::vector<int>> quotient_group(const Group& g, const ConjugacyClasses& cc,
                                                         const Subgroup& n) {
    if (!is_normal(g, cc, n)) throw NotNormal("quotient by a non-normal subgroup");
    std::vector<int> coset_min(g.n, -1);
    std::vector<int> reps;
    auto nm = n.members.members();
    for (int x = 0; x < g.n; ++x) {
        if (coset_min[x] >= 0) continue;
        std::vector<int> coset;
        int mn = g.n;
        for (int h : nm) {
            int y = g.mul(x, h);
            coset.push_back(y);
            mn = std::min(mn, y);
        }
        for (int y : coset) coset_min[y] = mn;
        reps.push_back(mn);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> coset_map(g.n);
    std::map<int, int> rep_index;
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = int(i);
    for (int x = 0; x < g.n; ++x) coset_map[x] = rep_index.at(coset_min[x]);
    int q = int(reps.size());
    Group quot;
    quot.n = q;
    quot.mul_table.resize(size_t(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            quot.mul_table[size_t(a) * q + b] = coset_map[g.mul(reps[a], reps[b])];
    quot.names.resize(q);
    for (int a = 0; a < q; ++a) quot.names[a] = "[" + g.names[reps[a]] + "]";
    detail::finish_group(quot);
    return {std::move(quot), std::move(coset_map)};
}

// The subgroup as a group in its own right, with the element map back into g.
inline std::pair<Group, std::vector<int>> subgroup_as_group(const Group& g, const Subgroup& s) {
    std::vector<int> elems = s.members.members();  // ascending, identity first
    std::vector<int> to_sub(g.n, -1);
    for (size_t i = 0; i < elems.size(); ++i) to_sub[elems[i]] = int(i);
    int m = int(elems.size());
    Group h;
    h.n = m;
    h.mul_table.resize(size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int p = to_sub[g.mul(elems[a], elems[b])];
            if (p < 0) throw NotASubgroup("member set is not closed under multiplication");
            h.mul_table[size_t(a) * m + b] = p;
        }
    h.names.resize(m);
    for (int a = 0; a < m; ++a) h.names[a] = g.names[elems[a]];
    detail::finish_group(h);
    return {std::move(h), std::move(elems)};
}

namespace detail {

// Greedy small generating set: repeatedly adjoin the smallest element outside
// the generated subgroup.
inline std::vector<int> greedy_generators(const Group& g) {
    std::vector<int> gens;
    Subgroup cur = subgroup_generate(g, {});
    while (cur.order < g.n) {
        int pick = -1;
        for (int x = 0; x < g.n; ++x)
            if (!cur.members.test(x)) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        cur = subgroup_generate(g, gens);
    }
    return gens;
}

}  // namespace detail

inline bool is_automorphism(const Group& g, const Perm& phi) {
    if (int(phi.size()) != g.n || !is_permutation(phi)) return false;
    if (phi[0] != 0) return false;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
    return true;
}

// All automorphisms, by backtracking over images of a greedy generating set.
// Returns element-index permutations; the identity map comes first.
inline std::vector<Perm> automorphism_group(const Group& g, int aut_cap = kDefaultAutCap) {
    if (g.n > aut_cap)
        throw OrderCapExceeded("automorphism search cap " + std::to_string(aut_cap) +
                               " exceeded by group of order " + std::to_string(g.n));
    std::vector<int> gens = detail::greedy_generators(g);
    if (gens.empty()) return {perm_identity(g.n)};

    // Expression of every element as a word: elem = parent * generator.
    std::vector<std::pair<int, int>> word(g.n, {-1, -1});  // (parent elem, generator slot)
    std::vector<int> bfs{0};
    std::vector<char> seen(g.n, 0);
    seen[0] = 1;
    for (size_t q = 0; q < bfs.size(); ++q)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.mul(bfs[q], gens[gi]);
            if (!seen[y]) {
                seen[y] = 1;
                word[y] = {bfs[q], int(gi)};
                bfs.push_back(y);
            }
        }

    std::vector<int> order_of(g.n);
    for (int x = 0; x < g.n; ++x) order_of[x] = g.element_order(x);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (int x = 0; x < g.n; ++x)
            if (order_of[x] == order_of[gens[gi]]) candidates[gi].push_back(x);

    std::vector<Perm> auts;
    std::vector<int> images(gens.size());
    // phi(x*gen) = phi(x)*phi(gen) for all x and all generators suffices for a
    // homomorphism (induction on word length), so the check is O(n*|gens|).
    auto build_and_check = [&]() {
        Perm phi(g.n, -1);
        phi[0] = 0;
        for (int x : bfs)
            if (word[x].first >= 0) phi[x] = g.mul(phi[word[x].first], images[word[x].second]);
        if (!is_permutation(phi)) return;
        for (int x = 0; x < g.n; ++x)
            for (size_t gi = 0; gi < gens.size(); ++gi)
                if (phi[g.mul(x, gens[gi])] != g.mul(phi[x], images[gi])) return;
        auts.push_back(std::move(phi));
    };
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            build_and_check();
            return;
        }
        for (int img : candidates[gi]) {
            images[gi] = img;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
    // identity first, rest in the deterministic backtracking order
    auto id = perm_identity(g.n);
    auto it = std::find(auts.begin(), auts.end(), id);
    if (it != auts.begin() && it != auts.end()) std::iter_swap(auts.begin(), it);
    return auts;
}

}  // namespace sckit
