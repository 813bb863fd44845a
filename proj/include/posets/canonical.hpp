#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

struct CanonicalForm {
    // First byte is n, the rest packs the relation matrix row-major (MSB
    // first) under the minimizing relabeling. Equal keys iff isomorphic.
    std::string key;
    // relabel[i] = original element placed at canonical position i.
    std::vector<int> relabel;
};

namespace detail {

inline std::string encode_relation(const Poset& p, const std::vector<int>& at) {
    const int n = p.size();
    std::string out(1 + (n * n + 7) / 8, '\0');
    out[0] = static_cast<char>(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++bit)
            if (p.leq(at[i], at[j]))
                out[1 + bit / 8] |= static_cast<char>(1 << (7 - bit % 8));
    return out;
}

}  // namespace detail

// Minimum relation-matrix encoding over all relabelings. Any isomorphism
// preserves (|down-set|, |up-set|), so only permutations within blocks of
// equal degree pair need to be tried.
inline CanonicalForm canonical_form(const Poset& p) {
    const int n = p.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto inv = [&](int e) {
        return std::pair{p.down_set(e).size(), p.up_set(e).size()};
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ia = inv(a), ib = inv(b);
        return ia != ib ? ia < ib : a < b;
    });

    // block boundaries: runs of equal invariant
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i + 1;
        while (j < n && inv(order[j]) == inv(order[i])) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    CanonicalForm best;
    std::vector<int> at = order;
    auto consider = [&] {
        std::string key = detail::encode_relation(p, at);
        if (best.key.empty() || key < best.key) {
            best.key = std::move(key);
            best.relabel = at;
        }
    };
    // iterate the product of per-block permutations
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) { consider(); return; }
        auto [lo, hi] = blocks[b];
        std::sort(at.begin() + lo, at.begin() + hi);
        do {
            self(self, b + 1);
        } while (std::next_permutation(at.begin() + lo, at.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

inline std::string canonical_key(const Poset& p) { return canonical_form(p).key; }

// The poset relabeled so that element i is at[i] of the original.
inline Poset apply_relabeling(const Poset& p, const std::vector<int>& at,
                              std::string name, const std::vector<std::string>& labels) {
    const int n = p.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[at[i]] = i;
    std::vector<ElemSet> up(n);
    for (int i = 0; i < n; ++i) {
        for (int j : p.up_set(at[i])) up[i].add(pos[j]);
    }
    return Poset::from_relation(std::move(name), labels, up);
}

// Canonical representative with labels e0..e{n-1}.
inline Poset canonicalize(const Poset& p, std::string name = "") {
    CanonicalForm cf = canonical_form(p);
    std::vector<std::string> labels(p.size());
    for (int i = 0; i < p.size(); ++i) labels[i] = "e" + std::to_string(i);
    return apply_relabeling(p, cf.relabel, name.empty() ? p.name() : std::move(name), labels);
}

}  // namespace posets
