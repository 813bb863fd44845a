#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

// Poset text format (line oriented, UTF-8):
//   poset <name>
//   elements <l1> <l2> ...
//   covers <a><b ...          each item "x<y"
// '#' starts a comment, blank lines are ignored.

namespace detail {

inline std::string strip_comment(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    return line;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline std::pair<std::string, std::string> parse_cover_item(const std::string& item, int line) {
    auto pos = item.find('<');
    if (pos == std::string::npos || pos == 0 || pos + 1 == item.size() ||
        item.find('<', pos + 1) != std::string::npos)
        throw FormatError("malformed cover item '" + item + "'", line);
    return {item.substr(0, pos), item.substr(pos + 1)};
}

struct PosetLines {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
};

// Consumes the three directive lines of one poset block. `line` tracks the
// current 1-based line number across calls.
inline PosetLines parse_poset_lines(const std::vector<std::pair<int, std::string>>& lines) {
    if (lines.size() != 3) {
        int at = lines.empty() ? 1 : lines.back().first;
        throw FormatError("expected poset/elements/covers lines", at);
    }
    PosetLines out;
    auto toks0 = split_ws(lines[0].second);
    if (toks0.size() != 2 || toks0[0] != "poset")
        throw FormatError("expected 'poset <name>'", lines[0].first);
    out.name = toks0[1];
    auto toks1 = split_ws(lines[1].second);
    if (toks1.size() < 2 || toks1[0] != "elements")
        throw FormatError("expected 'elements <l1> ...'", lines[1].first);
    out.labels.assign(toks1.begin() + 1, toks1.end());
    auto toks2 = split_ws(lines[2].second);
    if (toks2.empty() || toks2[0] != "covers")
        throw FormatError("expected 'covers ...'", lines[2].first);
    for (std::size_t i = 1; i < toks2.size(); ++i)
        out.covers.push_back(parse_cover_item(toks2[i], lines[2].first));
    return out;
}

}  // namespace detail

inline Poset parse_poset_text(std::istream& in) {
    std::vector<std::pair<int, std::string>> content;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::strip_comment(line);
        if (line.empty()) continue;
        content.emplace_back(lineno, line);
    }
    auto pl = detail::parse_poset_lines(content);
    return Poset::from_covers(pl.name, pl.labels, pl.covers);
}

inline Poset parse_poset_text(const std::string& text) {
    std::istringstream in(text);
    return parse_poset_text(in);
}

inline Poset read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_poset_text(in);
}

inline std::string write_poset_text(const Poset& p) {
    for (const auto& l : p.labels())
        if (l.find_first_of(" \t#<") != std::string::npos)
            throw Error("label '" + l + "' not representable in the text format");
    std::string out = "poset " + p.name() + "\nelements";
    for (const auto& l : p.labels()) out += " " + l;
    out += "\ncovers";
    for (auto [a, b] : p.covers()) out += " " + p.label(a) + "<" + p.label(b);
    out += "\n";
    return out;
}

}  // namespace posets
