#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "posets/star.hpp"

namespace posets {

// Terms of the law language: variables, the bounds 0 and 1, the unary star,
// L/U cones of one or more terms, Max/Min of exactly one term.
struct Term {
    enum class Kind { Var, Zero, One, Star, Lower, Upper, Max, Min };
    Kind kind = Kind::Var;
    std::string var;
    std::vector<Term> args;
};

enum class RelOp { Eq, Eq1, Eq2, Le, Le1, Le2, Sub };

// A quantifier-free formula over relational atoms; free variables are
// implicitly universally quantified over the poset's elements.
struct Statement {
    enum class Kind { Rel, Not, And, Or, Implies };
    Kind kind = Kind::Rel;
    RelOp op = RelOp::Eq;
    std::vector<Term> terms;      // Rel: exactly two
    std::vector<Statement> kids;  // Not: 1, Implies: 2, And/Or: >= 2
};

namespace law_detail {

struct Token {
    enum class Kind { Word, Zero, One, LParen, RParen, Comma, Star, Bang, Amp, Pipe, Arrow, Rel, End };
    Kind kind;
    std::string text;  // Word: identifier/keyword, Rel: operator spelling
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, std::size_t pos) {
        out.push_back({k, std::move(text), pos});
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
        std::size_t at = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            std::string word = s.substr(i, j - i);
            i = j;
            if (word == "sub")
                push(Token::Kind::Rel, "sub", at);
            else
                push(Token::Kind::Word, std::move(word), at);
            continue;
        }
        switch (c) {
            case '0': push(Token::Kind::Zero, "0", at); ++i; break;
            case '1': push(Token::Kind::One, "1", at); ++i; break;
            case '(': push(Token::Kind::LParen, "(", at); ++i; break;
            case ')': push(Token::Kind::RParen, ")", at); ++i; break;
            case ',': push(Token::Kind::Comma, ",", at); ++i; break;
            case '*': push(Token::Kind::Star, "*", at); ++i; break;
            case '!': push(Token::Kind::Bang, "!", at); ++i; break;
            case '&': push(Token::Kind::Amp, "&", at); ++i; break;
            case '|': push(Token::Kind::Pipe, "|", at); ++i; break;
            case '=':
                ++i;
                if (i < s.size() && s[i] == '>') { push(Token::Kind::Arrow, "=>", at); ++i; }
                else if (i < s.size() && (s[i] == '1' || s[i] == '2')) {
                    push(Token::Kind::Rel, std::string("=") + s[i], at);
                    ++i;
                } else push(Token::Kind::Rel, "=", at);
                break;
            case '<':
                ++i;
                if (i >= s.size() || s[i] != '=') throw SyntaxError("expected '=' after '<'", i);
                ++i;
                if (i < s.size() && (s[i] == '1' || s[i] == '2')) {
                    push(Token::Kind::Rel, std::string("<=") + s[i], at);
                    ++i;
                } else push(Token::Kind::Rel, "<=", at);
                break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", at);
        }
    }
    push(Token::Kind::End, "", s.size());
    return out;
}

inline RelOp rel_from_text(const std::string& text) {
    if (text == "=") return RelOp::Eq;
    if (text == "=1") return RelOp::Eq1;
    if (text == "=2") return RelOp::Eq2;
    if (text == "<=") return RelOp::Le;
    if (text == "<=1") return RelOp::Le1;
    if (text == "<=2") return RelOp::Le2;
    return RelOp::Sub;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    Statement parse() {
        Statement s = parse_stmt();
        expect(Token::Kind::End, "end of input");
        return s;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }

    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            throw SyntaxError(std::string("expected ") + what, peek().pos);
        ++at_;
    }

    Statement parse_stmt() {
        Statement lhs = parse_disj();
        if (peek().kind == Token::Kind::Arrow) {
            ++at_;
            Statement rhs = parse_disj();
            Statement s;
            s.kind = Statement::Kind::Implies;
            s.kids = {std::move(lhs), std::move(rhs)};
            return s;
        }
        return lhs;
    }

    Statement parse_disj() {
        Statement first = parse_conj();
        if (peek().kind != Token::Kind::Pipe) return first;
        Statement s;
        s.kind = Statement::Kind::Or;
        s.kids.push_back(std::move(first));
        while (peek().kind == Token::Kind::Pipe) {
            ++at_;
            s.kids.push_back(parse_conj());
        }
        return s;
    }

    Statement parse_conj() {
        Statement first = parse_atom();
        if (peek().kind != Token::Kind::Amp) return first;
        Statement s;
        s.kind = Statement::Kind::And;
        s.kids.push_back(std::move(first));
        while (peek().kind == Token::Kind::Amp) {
            ++at_;
            s.kids.push_back(parse_atom());
        }
        return s;
    }

    Statement parse_atom() {
        if (peek().kind == Token::Kind::Bang) {
            ++at_;
            Statement s;
            s.kind = Statement::Kind::Not;
            s.kids.push_back(parse_atom());
            return s;
        }
        if (peek().kind == Token::Kind::LParen) {
            // Either a parenthesized statement or a relation whose left term
            // starts with '('. Try the relation reading first, backtrack on
            // a syntax error.
            std::size_t save = at_;
            try {
                return parse_rel();
            } catch (const SyntaxError&) {
                at_ = save;
            }
            ++at_;
            Statement s = parse_stmt();
            expect(Token::Kind::RParen, "')'");
            return s;
        }
        return parse_rel();
    }

    Statement parse_rel() {
        Statement s;
        s.kind = Statement::Kind::Rel;
        Term lhs = parse_term();
        if (peek().kind != Token::Kind::Rel)
            throw SyntaxError("expected a relation", peek().pos);
        s.op = rel_from_text(next().text);
        Term rhs = parse_term();
        s.terms = {std::move(lhs), std::move(rhs)};
        return s;
    }

    Term parse_term() {
        Term t = parse_primary();
        while (peek().kind == Token::Kind::Star) {
            ++at_;
            Term star;
            star.kind = Term::Kind::Star;
            star.args.push_back(std::move(t));
            t = std::move(star);
        }
        return t;
    }

    Term parse_primary() {
        Token tok = next();
        Term t;
        switch (tok.kind) {
            case Token::Kind::Zero: t.kind = Term::Kind::Zero; return t;
            case Token::Kind::One: t.kind = Term::Kind::One; return t;
            case Token::Kind::LParen: {
                t = parse_term();
                expect(Token::Kind::RParen, "')'");
                return t;
            }
            case Token::Kind::Word: break;
            default:
                throw SyntaxError("expected a term", tok.pos);
        }
        const std::string& w = tok.text;
        if (w == "L" || w == "U" || w == "Max" || w == "Min") {
            t.kind = w == "L"   ? Term::Kind::Lower
                   : w == "U"   ? Term::Kind::Upper
                   : w == "Max" ? Term::Kind::Max
                                : Term::Kind::Min;
            expect(Token::Kind::LParen, "'('");
            t.args.push_back(parse_term());
            while (peek().kind == Token::Kind::Comma) {
                ++at_;
                t.args.push_back(parse_term());
            }
            expect(Token::Kind::RParen, "')'");
            if ((w == "Max" || w == "Min") && t.args.size() != 1)
                throw ArityError(w + " takes exactly one argument");
            return t;
        }
        if (!std::all_of(w.begin(), w.end(),
                         [](char c) { return std::islower(static_cast<unsigned char>(c)); }))
            throw SyntaxError("identifiers are lowercase ('" + w + "')", tok.pos);
        t.kind = Term::Kind::Var;
        t.var = w;
        return t;
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

}  // namespace law_detail

inline Statement parse_statement(const std::string& text) {
    return law_detail::Parser(text).parse();
}

inline std::string to_string(const RelOp op) {
    switch (op) {
        case RelOp::Eq: return "=";
        case RelOp::Eq1: return "=1";
        case RelOp::Eq2: return "=2";
        case RelOp::Le: return "<=";
        case RelOp::Le1: return "<=1";
        case RelOp::Le2: return "<=2";
        case RelOp::Sub: return "sub";
    }
    return "?";
}

inline std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.var;
        case Term::Kind::Zero: return "0";
        case Term::Kind::One: return "1";
        case Term::Kind::Star: return to_string(t.args[0]) + "*";
        default: break;
    }
    std::string head = t.kind == Term::Kind::Lower ? "L"
                     : t.kind == Term::Kind::Upper ? "U"
                     : t.kind == Term::Kind::Max   ? "Max"
                                                   : "Min";
    std::string out = head + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ",";
        out += to_string(t.args[i]);
    }
    return out + ")";
}

inline std::string to_string(const Statement& s) {
    // precedence: Implies < Or < And < atoms
    auto level = [](const Statement& x) {
        switch (x.kind) {
            case Statement::Kind::Implies: return 0;
            case Statement::Kind::Or: return 1;
            case Statement::Kind::And: return 2;
            default: return 3;
        }
    };
    auto child = [&](const Statement& k, int min_level) {
        std::string text = to_string(k);
        return level(k) < min_level ? "(" + text + ")" : text;
    };
    switch (s.kind) {
        case Statement::Kind::Rel:
            return to_string(s.terms[0]) + " " + to_string(s.op) + " " + to_string(s.terms[1]);
        case Statement::Kind::Not:
            return "!(" + to_string(s.kids[0]) + ")";
        case Statement::Kind::And: {
            std::string out;
            for (std::size_t i = 0; i < s.kids.size(); ++i)
                out += (i ? " & " : "") + child(s.kids[i], 3);
            return out;
        }
        case Statement::Kind::Or: {
            std::string out;
            for (std::size_t i = 0; i < s.kids.size(); ++i)
                out += (i ? " | " : "") + child(s.kids[i], 2);
            return out;
        }
        case Statement::Kind::Implies:
            return child(s.kids[0], 1) + " => " + child(s.kids[1], 1);
    }
    return "";
}

inline void collect_vars(const Term& t, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::Var) {
        if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
        return;
    }
    for (const auto& a : t.args) collect_vars(a, out);
}

inline void collect_vars(const Statement& s, std::vector<std::string>& out) {
    for (const auto& t : s.terms) collect_vars(t, out);
    for (const auto& k : s.kids) collect_vars(k, out);
}

// Free variables in sorted order; this is also the assignment order used by
// check_statement.
inline std::vector<std::string> free_variables(const Statement& s) {
    std::vector<std::string> vars;
    collect_vars(s, vars);
    std::sort(vars.begin(), vars.end());
    return vars;
}

inline bool mentions_star(const Term& t) {
    if (t.kind == Term::Kind::Star) return true;
    for (const auto& a : t.args)
        if (mentions_star(a)) return true;
    return false;
}

inline bool mentions_star(const Statement& s) {
    for (const auto& t : s.terms)
        if (mentions_star(t)) return true;
    for (const auto& k : s.kids)
        if (mentions_star(k)) return true;
    return false;
}

inline bool mentions_const(const Term& t, Term::Kind kind) {
    if (t.kind == kind) return true;
    for (const auto& a : t.args)
        if (mentions_const(a, kind)) return true;
    return false;
}

inline bool mentions_const(const Statement& s, Term::Kind kind) {
    for (const auto& t : s.terms)
        if (mentions_const(t, kind)) return true;
    for (const auto& k : s.kids)
        if (mentions_const(k, kind)) return true;
    return false;
}

// Variable assignment, kept sorted by name.
using Env = std::vector<std::pair<std::string, int>>;

// Denotation of a term: a subset of the carrier. Variables and the bounds
// denote singletons; L/U of several arguments apply to the union of the
// argument denotations, matching the L(A,b) convention.
inline ElemSet eval_term(const Poset& p, const StarTable* t, const Env& env, const Term& tm) {
    switch (tm.kind) {
        case Term::Kind::Var: {
            for (const auto& [name, e] : env)
                if (name == tm.var) return ElemSet::single(e);
            throw UnboundVariable(tm.var);
        }
        case Term::Kind::Zero: {
            auto b = p.bottom();
            if (!b) throw Error("'0' needs a bottom element");
            return ElemSet::single(*b);
        }
        case Term::Kind::One: {
            auto u = p.top();
            if (!u) throw Error("'1' needs a top element");
            return ElemSet::single(*u);
        }
        case Term::Kind::Star: {
            if (!t) throw Error("'*' needs a pseudocomplemented poset");
            return star_set(*t, eval_term(p, t, env, tm.args[0]));
        }
        case Term::Kind::Lower:
        case Term::Kind::Upper: {
            ElemSet u;
            for (const auto& a : tm.args) u |= eval_term(p, t, env, a);
            return tm.kind == Term::Kind::Lower ? p.lower_cone(u) : p.upper_cone(u);
        }
        case Term::Kind::Max:
            return p.max_of(eval_term(p, t, env, tm.args[0]));
        case Term::Kind::Min:
            return p.min_of(eval_term(p, t, env, tm.args[0]));
    }
    return {};
}

inline bool eval_rel(const Poset& p, RelOp op, ElemSet a, ElemSet b) {
    switch (op) {
        case RelOp::Eq: return a == b;
        case RelOp::Eq1: return p.eq1(a, b);
        case RelOp::Eq2: return p.eq2(a, b);
        case RelOp::Le: return p.pointwise_le(a, b);
        case RelOp::Le1: return p.le1(a, b);
        case RelOp::Le2: return p.le2(a, b);
        case RelOp::Sub: return a.subset_of(b);
    }
    return false;
}

inline bool eval_statement(const Poset& p, const StarTable* t, const Env& env, const Statement& s) {
    switch (s.kind) {
        case Statement::Kind::Rel:
            return eval_rel(p, s.op, eval_term(p, t, env, s.terms[0]),
                            eval_term(p, t, env, s.terms[1]));
        case Statement::Kind::Not:
            return !eval_statement(p, t, env, s.kids[0]);
        case Statement::Kind::And:
            for (const auto& k : s.kids)
                if (!eval_statement(p, t, env, k)) return false;
            return true;
        case Statement::Kind::Or:
            for (const auto& k : s.kids)
                if (eval_statement(p, t, env, k)) return true;
            return false;
        case Statement::Kind::Implies:
            return !eval_statement(p, t, env, s.kids[0]) ||
                   eval_statement(p, t, env, s.kids[1]);
    }
    return false;
}

namespace law_detail {

// The atom blamed for a failing assignment: the first relational atom (in
// syntactic order) that evaluates false, else the first atom overall (a
// failure through negation).
inline const Statement* blame_rel(const Poset& p, const StarTable* t, const Env& env,
                                  const Statement& s) {
    const Statement* first = nullptr;
    const Statement* first_false = nullptr;
    auto walk = [&](auto&& self, const Statement& node) -> void {
        if (first_false) return;
        if (node.kind == Statement::Kind::Rel) {
            if (!first) first = &node;
            if (!eval_statement(p, t, env, node)) first_false = &node;
            return;
        }
        for (const auto& k : node.kids) self(self, k);
    };
    walk(walk, s);
    return first_false ? first_false : first;
}

}  // namespace law_detail

// Result of quantifying a statement over all assignments. The counterexample
// is the lexicographically first failing assignment (variables in sorted
// order, elements in declared order); lhs/rhs are the sides of the blamed
// atom evaluated there.
struct CheckResult {
    bool holds = true;
    long long checked = 0;
    Env counterexample;
    ElemSet lhs, rhs;
};

inline CheckResult check_statement(const Poset& p, const StarTable* t, const Statement& s) {
    CheckResult res;
    std::vector<std::string> vars = free_variables(s);
    const int k = static_cast<int>(vars.size());
    Env env(k);
    for (int i = 0; i < k; ++i) env[i] = {vars[i], 0};
    while (true) {
        ++res.checked;
        if (!eval_statement(p, t, env, s)) {
            res.holds = false;
            res.counterexample = env;
            const Statement* atom = law_detail::blame_rel(p, t, env, s);
            if (atom) {
                res.lhs = eval_term(p, t, env, atom->terms[0]);
                res.rhs = eval_term(p, t, env, atom->terms[1]);
            }
            return res;
        }
        int i = k - 1;
        while (i >= 0 && env[i].second == p.size() - 1) env[i--].second = 0;
        if (i < 0) return res;
        ++env[i].second;
    }
}

inline CheckResult check_statement(const Poset& p, const StarTable* t, const std::string& text) {
    return check_statement(p, t, parse_statement(text));
}

// The bundled laws, one entry per identity/inequality of the development.
inline const std::vector<std::pair<std::string, std::string>>& law_library_text() {
    static const std::vector<std::pair<std::string, std::string>> laws = {
        {"sec2_le_dd", "x <= x**"},
        {"sec2_triple_star", "x*** = x*"},
        {"sec2_cone_dd", "L(x) sub L(x**)"},
        {"lemma1_i", "U(x*,y*) = 1 => L(x,y) = 0"},
        {"lemma1_ii", "L(x,y)* sub U(x*,y*)"},
        {"lemma1_iii", "U(x,y)* sub L(x*,y*)"},
        {"th3_i", "Max(L(x*,y*)) =1 Max(L(x*,y*))**"},
        {"th3_ii", "Max(L(x,Max(L(x*,y))*)) = x"},
        {"th3_iii", "Max(L(x,y)) <=1 Max(L(x**,y)) & Max(L(x**,y)) <=1 Max(L(x**,y**))"},
        {"th3_iv", "Max(L(x,y)) <=1 Max(L(x,y**)) & Max(L(x,y**)) <=1 Max(L(x**,y**))"},
        {"th3_v", "Max(L(x,y))** <=1 Max(L(x**,y**))"},
        {"th3_vi", "Min(U(x,y)) <=2 Min(U(x**,y)) & Min(U(x**,y)) <=2 Min(U(x**,y**))"},
        {"th3_vii", "Min(U(x,y)) <=2 Min(U(x,y**)) & Min(U(x,y**)) <=2 Min(U(x**,y**))"},
        {"th3_viii", "Min(U(x**,y**)) <=2 Min(U(x,y))**"},
        {"th3_ix", "Min(U(x,y))* =1 Max(L(x*,y*))"},
        {"th3_x", "Min(U(x*,y*)) <=2 Max(L(x,y))*"},
        {"ineq1", "Max(L(x,y))* <=2 Max(L(x**,y**))*"},
        {"cor1_i", "Max(L(x,y))* =2 Max(L(x**,y**))*"},
        {"cor1_ii", "Max(L(x,y))** =1 Max(L(x**,y**))"},
        {"cor1_iii", "Max(L(x,y))* =2 Max(L(x**,y))* & Max(L(x**,y))* =2 Max(L(x,y**))*"},
        {"stone_def", "Max(L(x*,y*))* <=2 Min(U(x**,y**))"},
        {"th5_ii", "Max(L(x*,y*))* =2 Min(U(x**,y**))"},
        {"th5_iii", "Min(U(x,y))** =2 Min(U(x**,y**))"},
        {"identity2", "Min(U(x**,y**))** =2 Min(U(x**,y**))"},
        {"stone_identity", "U(x*,x**) = 1"},
        {"distributivity", "L(U(x,y),z) = L(U(L(x,z),L(y,z)))"},
    };
    return laws;
}

inline std::vector<std::pair<std::string, Statement>> law_library() {
    std::vector<std::pair<std::string, Statement>> out;
    for (const auto& [name, text] : law_library_text())
        out.emplace_back(name, parse_statement(text));
    return out;
}

inline std::optional<Statement> find_law(const std::string& name) {
    for (const auto& [n, text] : law_library_text())
        if (n == name) return parse_statement(text);
    return std::nullopt;
}

// Law file format: one `name: statement` per line, '#' comments.
inline std::vector<std::pair<std::string, Statement>> load_laws(std::istream& in) {
    std::vector<std::pair<std::string, Statement>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw FormatError("expected 'name: statement'", lineno);
        }
        std::string name = line.substr(0, colon);
        while (!name.empty() && name.back() == ' ') name.pop_back();
        std::size_t start = name.find_first_not_of(" \t");
        if (start == std::string::npos) throw FormatError("empty law name", lineno);
        name = name.substr(start);
        try {
            out.emplace_back(name, parse_statement(line.substr(colon + 1)));
        } catch (const SyntaxError& e) {
            throw FormatError(std::string("bad statement: ") + e.what(), lineno);
        }
    }
    return out;
}

inline std::string format_law_library() {
    std::string out;
    for (const auto& [name, text] : law_library_text()) out += name + ": " + text + "\n";
    return out;
}

}  // namespace posets
