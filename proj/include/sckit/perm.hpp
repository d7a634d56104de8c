#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sckit/error.hpp"

namespace sckit {

// Permutation of {0..m-1} in one-line form: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a*b)(i) = a(b(i))
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = int(i);
    return r;
}

inline bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= int(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// Parses disjoint cycle notation over points 1..m, e.g. "(1 2 3)(4 5)" or
// "(1,2,3)". "()" and "e" denote the identity. Points beyond the largest
// mentioned are fixed; `domain` forces a minimum domain size when positive.
inline Perm parse_cycles(const std::string& text, int domain = 0) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i < text.size() && (text.compare(i, 1, "e") == 0)) {
        i++;
        skip_ws();
        if (i != text.size()) throw ParseError("trailing input after 'e' in permutation: " + text);
        return perm_identity(std::max(domain, 1));
    }
    int maxpt = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in permutation: " + text);
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i >= text.size()) throw ParseError("unterminated cycle in permutation: " + text);
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point number in permutation: " + text);
            int v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1) throw ParseError("points are 1-based in permutation: " + text);
            cyc.push_back(v);
            maxpt = std::max(maxpt, v);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    int m = std::max(domain, std::max(maxpt, 1));
    Perm p = perm_identity(m);
    for (const auto& cyc : cycles)
        for (size_t j = 0; j < cyc.size(); ++j) {
            int from = cyc[j] - 1, to = cyc[(j + 1) % cyc.size()] - 1;
            if (p[from] != from) throw ParseError("point repeated across cycles: " + text);
            p[from] = to;
        }
    if (!is_permutation(p)) throw ParseError("cycles do not define a permutation: " + text);
    return p;
}

// Renders a permutation in disjoint cycle notation with 1-based points.
inline std::string format_cycles(const Perm& p) {
    std::string out;
    std::vector<char> done(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == int(i)) continue;
        out += '(';
        size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace sckit
