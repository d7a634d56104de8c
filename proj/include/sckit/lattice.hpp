#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "sckit/chartab.hpp"
#include "sckit/error.hpp"
#include "sckit/group.hpp"

namespace sckit {

// A family of normal subgroups ordered by containment. When `closed` it is
// stable under product and intersection and contains {e} and G.
struct NormalSet {
    std::vector<Subgroup> members;        // ordered by (order, bit set)
    std::vector<std::vector<char>> leq;   // leq[i][j] <=> members[i] <= members[j]
    bool closed = false;

    int index_of(const Subgroup& s) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (members[i] == s) return int(i);
        return -1;
    }
};

struct MobiusTable {
    std::vector<std::vector<int64_t>> mu;
};

namespace detail {

inline NormalSet finish_normal_set(std::vector<Subgroup> members, bool closed) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    NormalSet ns;
    ns.members = std::move(members);
    ns.closed = closed;
    size_t m = ns.members.size();
    ns.leq.assign(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            ns.leq[i][j] = ns.members[i].members.subset_of(ns.members[j].members);
    return ns;
}

// Worklist saturation under product and intersection.
inline std::vector<Subgroup> saturate(const Group& g, const ConjugacyClasses& cc,
                                      std::vector<Subgroup> seeds) {
    std::set<Bitset, std::less<Bitset>> known;
    std::deque<Subgroup> work;
    std::vector<Subgroup> out;
    auto push = [&](Subgroup s) {
        if (known.insert(s.members).second) {
            work.push_back(s);
            out.push_back(std::move(s));
        }
    };
    for (auto& s : seeds) push(std::move(s));
    while (!work.empty()) {
        Subgroup cur = work.front();
        work.pop_front();
        // pair with everything known so far, FIFO order
        std::vector<Subgroup> snapshot = out;
        for (const auto& other : snapshot) {
            push(subgroup_product(g, cc, cur, other));
            push(subgroup_intersection(cur, other));
        }
    }
    return out;
}

}  // namespace detail

// N(G): every normal subgroup is an intersection of kernels of irreducible
// characters, so the intersection closure of the kernels (plus G) is all of
// N(G). The result is verified closed under product as well.
inline NormalSet all_normal_subgroups(const Group& g, const ConjugacyClasses& cc,
                                      const CharacterTable& ct) {
    std::set<Bitset> known;
    std::vector<Subgroup> out;
    auto push = [&](Subgroup s) {
        if (known.insert(s.members).second) out.push_back(std::move(s));
    };
    Bitset whole(g.n);
    whole.fill();
    push(make_subgroup(whole));
    for (int i = 0; i < ct.k; ++i) push(ct.kernels[i]);
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < i; ++j) push(subgroup_intersection(out[i], out[j]));
    NormalSet ns = detail::finish_normal_set(std::move(out), true);
    for (const auto& s : ns.members)
        if (!is_normal(g, cc, s)) throw VerificationFailed("kernel intersection not normal");
    for (size_t i = 0; i < ns.members.size(); ++i)
        for (size_t j = i; j < ns.members.size(); ++j)
            if (ns.index_of(subgroup_product(g, cc, ns.members[i], ns.members[j])) < 0)
                throw VerificationFailed("N(G) not closed under product");
    return ns;
}

// A(N_1..N_k): smallest family containing the seeds, {e} and G, closed under
// product and intersection.
inline NormalSet closure_A(const Group& g, const ConjugacyClasses& cc,
                           const std::vector<Subgroup>& seeds) {
    for (const auto& s : seeds)
        if (!is_normal(g, cc, s)) throw NotNormal("closure seed is not a normal subgroup");
    std::vector<Subgroup> init;
    Bitset triv(g.n);
    triv.set(0);
    init.push_back(make_subgroup(triv));
    Bitset whole(g.n);
    whole.fill();
    init.push_back(make_subgroup(whole));
    for (const auto& s : seeds) init.push_back(s);
    return detail::finish_normal_set(detail::saturate(g, cc, std::move(init)), true);
}

// Exact Mobius function of the containment order, by memoized recursion on
// mu(x,y) = -sum_{x < z <= y} mu(z,y).
inline MobiusTable mobius_table(const NormalSet& ns) {
    size_t m = ns.members.size();
    MobiusTable mt;
    mt.mu.assign(m, std::vector<int64_t>(m, 0));
    std::vector<std::vector<char>> have(m, std::vector<char>(m, 0));
    auto mu = [&](auto&& self, size_t x, size_t y) -> int64_t {
        if (!ns.leq[x][y]) return 0;
        if (have[x][y]) return mt.mu[x][y];
        int64_t v;
        if (x == y)
            v = 1;
        else {
            v = 0;
            for (size_t z = 0; z < m; ++z)
                if (z != x && ns.leq[x][z] && ns.leq[z][y]) v -= self(self, z, y);
        }
        have[x][y] = 1;
        mt.mu[x][y] = v;
        return v;
    };
    for (size_t x = 0; x < m; ++x)
        for (size_t y = 0; y < m; ++y) mu(mu, x, y);
    return mt;
}

// N minus the union of all strictly smaller members; may be empty.
inline Bitset n_circle(const NormalSet& ns, int n) {
    Bitset out = ns.members[n].members;
    for (size_t i = 0; i < ns.members.size(); ++i)
        if (int(i) != n && ns.leq[i][n]) out = out.andnot(ns.members[i].members);
    return out;
}

// Checks the Mobius inversion identity: indicator(N°) =
// sum_{H <= N} mu(H,N) * indicator(H), coordinate-wise over group elements.
inline bool mobius_inversion_check(const NormalSet& ns, const MobiusTable& mt, int n) {
    int universe = ns.members[n].members.universe();
    std::vector<int64_t> rhs(universe, 0);
    for (size_t h = 0; h < ns.members.size(); ++h) {
        if (!ns.leq[h][n]) continue;
        int64_t c = mt.mu[h][n];
        if (c == 0) continue;
        ns.members[h].members.for_each([&](int x) { rhs[x] += c; });
    }
    Bitset circ = n_circle(ns, n);
    for (int x = 0; x < universe; ++x)
        if (rhs[x] != (circ.test(x) ? 1 : 0)) return false;
    return true;
}

}  // namespace sckit
