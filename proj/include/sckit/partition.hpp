#pragma once

#include <algorithm>
#include <vector>

#include "sckit/bitset.hpp"
#include "sckit/error.hpp"

namespace sckit {

// Partition of the element set into disjoint nonempty parts, ordered by
// smallest member; the part containing the identity comes first.
struct GroupPartition {
    std::vector<Bitset> parts;

    int part_of(int x) const {
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i].test(x)) return int(i);
        return -1;
    }

    bool operator==(const GroupPartition& o) const { return parts == o.parts; }
    bool operator!=(const GroupPartition& o) const { return !(*this == o); }
};

// Partition of character indices.
struct IrrPartition {
    std::vector<std::vector<int>> parts;  // each sorted ascending

    bool operator==(const IrrPartition& o) const { return parts == o.parts; }
};

inline GroupPartition make_group_partition(std::vector<Bitset> parts, int universe) {
    Bitset seen(universe);
    int total = 0;
    for (const auto& p : parts) {
        if (p.none()) throw VerificationFailed("empty part in partition");
        if (p.intersects(seen)) throw VerificationFailed("overlapping parts in partition");
        seen |= p;
        total += p.count();
    }
    if (total != universe) throw VerificationFailed("parts do not cover the group");
    std::sort(parts.begin(), parts.end(),
              [](const Bitset& a, const Bitset& b) { return a.min_member() < b.min_member(); });
    GroupPartition gp;
    gp.parts = std::move(parts);
    return gp;
}

inline IrrPartition make_irr_partition(std::vector<std::vector<int>> parts, int k) {
    std::vector<char> seen(k, 0);
    int total = 0;
    for (auto& p : parts) {
        if (p.empty()) throw VerificationFailed("empty part in character partition");
        std::sort(p.begin(), p.end());
        for (int i : p) {
            if (i < 0 || i >= k || seen[i])
                throw VerificationFailed("character partition is not a partition");
            seen[i] = 1;
            ++total;
        }
    }
    if (total != k) throw VerificationFailed("character parts do not cover Irr");
    std::sort(parts.begin(), parts.end());
    IrrPartition ip;
    ip.parts = std::move(parts);
    return ip;
}

// true iff every part of a is contained in some part of b
inline bool refines(const GroupPartition& a, const GroupPartition& b) {
    for (const auto& pa : a.parts) {
        int owner = b.part_of(pa.min_member());
        if (owner < 0 || !pa.subset_of(b.parts[owner])) return false;
    }
    return true;
}

}  // namespace sckit
