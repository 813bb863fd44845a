#pragma once

// The five bundled posets, both as in-repo .poset files and as hard-coded
// cover lists (so a corrupted fixture file fails loudly), plus their
// expected star tables.

#include <string>
#include <vector>

#include "oracle.hpp"
#include "posets/text_io.hpp"

namespace fixtures {

struct Def {
    const char* name;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    const char* star;   // x* row, one label per element in declared order
    const char* dstar;  // x** row
    const char* dense;  // D as label string
};

inline const std::vector<Def>& all() {
    static const std::vector<Def> defs = {
        {"fig1",
         {"0", "a", "b", "c", "d", "1"},
         {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
          {"c", "1"}, {"d", "1"}},
         "1ba000", "0ab111", "cd1"},
        {"fig2",
         {"0", "a", "b", "c", "d", "e", "f", "1"},
         {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "d"},
          {"b", "e"}, {"b", "f"}, {"c", "1"}, {"d", "1"}, {"e", "1"}, {"f", "1"}},
         "1fcf00c0", "0cfc11f1", "de1"},
        {"fig3",
         {"0", "a", "b", "c", "d", "e", "f", "g", "1"},
         {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "e"}, {"b", "c"}, {"b", "d"},
          {"c", "f"}, {"c", "g"}, {"d", "f"}, {"d", "g"}, {"e", "1"}, {"f", "1"},
          {"g", "1"}},
         "1de0ed000", "0ed1de111", "cfg1"},
        {"fig4a",
         {"0", "a", "b", "c", "d", "e", "1"},
         {{"0", "a"}, {"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "e"}, {"c", "d"},
          {"c", "e"}, {"d", "1"}, {"e", "1"}},
         "1000000", "0111111", "abcde1"},
        {"fig4b",
         {"0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "1"},
         {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"a", "e"}, {"a", "i"},
          {"b", "e"}, {"b", "j"}, {"c", "g"}, {"c", "f"}, {"d", "h"}, {"d", "f"},
          {"e", "g"}, {"e", "h"}, {"f", "i"}, {"f", "j"}, {"g", "1"}, {"h", "1"},
          {"i", "1"}, {"j", "1"}},
         "1jihgfedcba0", "0abcdefghij1", "1"},
    };
    return defs;
}

inline const Def& def(const std::string& name) {
    for (const Def& d : all())
        if (name == d.name) return d;
    throw std::runtime_error("no fixture " + name);
}

inline std::string path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".poset";
}

inline posets::Poset make(const std::string& name) {
    const Def& d = def(name);
    return posets::Poset::from_covers(d.name, d.labels, d.covers);
}

inline posets::Poset load(const std::string& name) {
    return posets::read_poset_file(path(name));
}

inline oracle::Rel rel(const std::string& name) {
    const Def& d = def(name);
    auto idx = [&](const std::string& l) {
        for (std::size_t i = 0; i < d.labels.size(); ++i)
            if (d.labels[i] == l) return static_cast<int>(i);
        throw std::runtime_error("bad label");
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto& [a, b] : d.covers) covers.emplace_back(idx(a), idx(b));
    return oracle::Rel::from_covers(static_cast<int>(d.labels.size()), covers);
}

// ElemSet from a label string like "cd1"; each label is one character in
// every fixture.
inline posets::ElemSet chars(const posets::Poset& p, const std::string& ls) {
    posets::ElemSet out;
    for (char c : ls) out.add(p.index_of(std::string(1, c)));
    return out;
}

inline oracle::Set oracle_chars(const Def& d, const std::string& ls) {
    oracle::Set out;
    for (char c : ls) {
        std::string l(1, c);
        for (std::size_t i = 0; i < d.labels.size(); ++i)
            if (d.labels[i] == l) out.insert(static_cast<int>(i));
    }
    return out;
}

}  // namespace fixtures
