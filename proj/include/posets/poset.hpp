#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posets/elem_set.hpp"
#include "posets/errors.hpp"

namespace posets {

inline constexpr int kMaxElements = 64;

// A finite poset: labelled elements 0..n-1 with a reflexive, antisymmetric,
// transitive order relation kept as per-element up-set and down-set bitmasks.
// Immutable after construction; all queries are const.
class Poset {
public:
    // Builds the order as the reflexive-transitive closure of a cover
    // (Hasse-diagram) relation. Throws CycleDetected, UnknownLabel,
    // DuplicateLabel, SizeCapExceeded.
    static Poset from_covers(std::string name, const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
        Poset p;
        p.name_ = std::move(name);
        p.labels_ = labels;
        p.init_labels();
        const int n = p.size();

        std::vector<ElemSet> succ(n);  // strict cover successors
        for (const auto& [lo, hi] : covers) {
            int a = p.index_of(lo);
            int b = p.index_of(hi);
            if (a == b)
                throw CycleDetected("cover " + lo + "<" + hi + " is a self-loop");
            succ[a].add(b);
        }

        // reachability via iterated squaring of the successor masks
        std::vector<ElemSet> reach = succ;
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                ElemSet acc = reach[i];
                for (int j : reach[i]) acc |= reach[j];
                if (acc != reach[i]) { reach[i] = acc; changed = true; }
            }
        }
        for (int i = 0; i < n; ++i)
            if (reach[i].contains(i))
                throw CycleDetected("cover relation has a cycle through '" + p.labels_[i] + "'");

        p.up_.assign(n, ElemSet{});
        p.down_.assign(n, ElemSet{});
        for (int i = 0; i < n; ++i) {
            p.up_[i] = reach[i];
            p.up_[i].add(i);
        }
        for (int i = 0; i < n; ++i)
            for (int j : p.up_[i]) p.down_[j].add(i);
        p.locate_bounds();
        return p;
    }

    // Builds from an explicit relation given as up-set rows (row i = {j | i <= j}).
    // Validates reflexivity, antisymmetry and transitivity.
    static Poset from_relation(std::string name, const std::vector<std::string>& labels,
                               const std::vector<ElemSet>& up_rows) {
        Poset p;
        p.name_ = std::move(name);
        p.labels_ = labels;
        p.init_labels();
        const int n = p.size();
        if (static_cast<int>(up_rows.size()) != n)
            throw Error("relation row count does not match label count");
        p.up_ = up_rows;
        p.down_.assign(n, ElemSet{});
        for (int i = 0; i < n; ++i) {
            if (!p.up_[i].contains(i))
                throw Error("relation is not reflexive at '" + p.labels_[i] + "'");
            if (!p.up_[i].subset_of(ElemSet::full(n)))
                throw Error("relation row exceeds carrier");
            for (int j : p.up_[i]) {
                if (i != j && p.up_[j].contains(i))
                    throw Error("relation is not antisymmetric on '" + p.labels_[i] + "','" +
                                p.labels_[j] + "'");
                if (!p.up_[j].subset_of(p.up_[i]))
                    throw Error("relation is not transitive at '" + p.labels_[i] + "','" +
                                p.labels_[j] + "'");
                p.down_[j].add(i);
            }
        }
        p.locate_bounds();
        return p;
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& name() const { return name_; }
    const std::string& label(int e) const { return labels_[e]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int index_of(std::string_view label) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == label) return i;
        throw UnknownLabel(std::string(label));
    }

    ElemSet carrier() const { return ElemSet::full(size()); }
    bool leq(int a, int b) const { return up_[a].contains(b); }
    ElemSet up_set(int e) const { return up_[e]; }
    ElemSet down_set(int e) const { return down_[e]; }
    std::optional<int> bottom() const { return bottom_ < 0 ? std::nullopt : std::optional(bottom_); }
    std::optional<int> top() const { return top_ < 0 ? std::nullopt : std::optional(top_); }

    // L(A) = {x | x <= a for all a in A}; L({}) is the whole carrier.
    ElemSet lower_cone(ElemSet a) const {
        ElemSet r = carrier();
        for (int e : a) r &= down_[e];
        return r;
    }

    // U(A) = {x | a <= x for all a in A}; U({}) is the whole carrier.
    ElemSet upper_cone(ElemSet a) const {
        ElemSet r = carrier();
        for (int e : a) r &= up_[e];
        return r;
    }

    // The convenience forms L(A,b) and U(A,b).
    ElemSet lower_cone(ElemSet a, int b) const { return lower_cone(a) & down_[b]; }
    ElemSet upper_cone(ElemSet a, int b) const { return upper_cone(a) & up_[b]; }

    ElemSet lower_cone(int a, int b) const { return down_[a] & down_[b]; }
    ElemSet upper_cone(int a, int b) const { return up_[a] & up_[b]; }

    // Maximal members of A: no other member lies strictly above them.
    ElemSet max_of(ElemSet a) const {
        ElemSet r;
        for (int e : a)
            if ((up_[e] & a) == ElemSet::single(e)) r.add(e);
        return r;
    }

    ElemSet min_of(ElemSet a) const {
        ElemSet r;
        for (int e : a)
            if ((down_[e] & a) == ElemSet::single(e)) r.add(e);
        return r;
    }

    bool is_antichain(ElemSet a) const {
        for (int e : a)
            if ((up_[e] & a) != ElemSet::single(e)) return false;
        return true;
    }

    // A <= B pointwise: every member of A is below every member of B.
    bool pointwise_le(ElemSet a, ElemSet b) const {
        for (int x : a)
            if (!b.subset_of(up_[x])) return false;
        return true;
    }

    // A <=1 B: every a in A has an upper bound in B.
    bool le1(ElemSet a, ElemSet b) const {
        for (int x : a)
            if (!up_[x].intersects(b)) return false;
        return true;
    }

    // A <=2 B: every b in B has a lower bound in A.
    bool le2(ElemSet a, ElemSet b) const {
        for (int y : b)
            if (!down_[y].intersects(a)) return false;
        return true;
    }

    bool eq1(ElemSet a, ElemSet b) const { return le1(a, b) && le1(b, a); }
    bool eq2(ElemSet a, ElemSet b) const { return le2(a, b) && le2(b, a); }

    // True iff every pair has a least upper bound and a greatest lower bound.
    bool is_lattice() const {
        for (int x = 0; x < size(); ++x)
            for (int y = x; y < size(); ++y) {
                ElemSet u = upper_cone(x, y);
                if (!min_of(u).is_singleton()) return false;
                ElemSet l = lower_cone(x, y);
                if (!max_of(l).is_singleton()) return false;
            }
        return true;
    }

    struct DistributivityWitness {
        int x, y, z;
        ElemSet lhs, rhs;  // L(U(x,y),z) vs LU(L(x,z),L(y,z))
    };

    // First triple (lexicographic by element index) violating
    // L(U(x,y),z) = LU(L(x,z),L(y,z)), if any.
    std::optional<DistributivityWitness> distributivity_witness() const {
        for (int x = 0; x < size(); ++x)
            for (int y = 0; y < size(); ++y)
                for (int z = 0; z < size(); ++z) {
                    ElemSet lhs = lower_cone(upper_cone(x, y), z);
                    ElemSet rhs = lower_cone(upper_cone(lower_cone(x, z) | lower_cone(y, z)));
                    if (lhs != rhs) return DistributivityWitness{x, y, z, lhs, rhs};
                }
        return std::nullopt;
    }

    bool is_distributive() const { return !distributivity_witness().has_value(); }

    // Cover pairs (transitive reduction), ascending by (low, high).
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < size(); ++a)
            for (int b : up_[a]) {
                if (a == b) continue;
                bool direct = true;
                for (int k : up_[a])
                    if (k != a && k != b && up_[k].contains(b)) { direct = false; break; }
                if (direct) out.emplace_back(a, b);
            }
        return out;
    }

    // "{c,d,1}" in element-index order; "{}" when empty.
    std::string format_set(ElemSet a) const {
        std::string out = "{";
        bool sep = false;
        for (int e : a) {
            if (sep) out += ',';
            out += labels_[e];
            sep = true;
        }
        out += '}';
        return out;
    }

private:
    void init_labels() {
        if (labels_.empty()) throw Error("poset needs at least one element");
        if (size() > kMaxElements)
            throw SizeCapExceeded("poset exceeds " + std::to_string(kMaxElements) + " elements");
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j = i + 1; j < labels_.size(); ++j)
                if (labels_[i] == labels_[j]) throw DuplicateLabel(labels_[i]);
    }

    void locate_bounds() {
        bottom_ = top_ = -1;
        for (int i = 0; i < size(); ++i) {
            if (up_[i] == carrier()) bottom_ = i;
            if (down_[i] == carrier()) top_ = i;
        }
    }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<ElemSet> up_, down_;
    int bottom_ = -1, top_ = -1;
};

}  // namespace posets
