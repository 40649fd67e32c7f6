#pragma once

#include "hgx/duality.hpp"
#include "hgx/galois.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hgx {

struct HgxParseError : std::runtime_error {
    int line, col;
    HgxParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " +
                             msg),
          line(l), col(c) {}
};

namespace ast {

using AWord = std::vector<std::string>; // empty = 1

struct AWordLess {
    bool operator()(const AWord& a, const AWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct APoly {
    std::vector<std::pair<Scalar, AWord>> terms; // canonical: sorted, merged, nonzero

    void canonicalize() {
        std::map<AWord, Scalar, AWordLess> merged;
        for (auto& [c, w] : terms) {
            auto [it, fresh] = merged.try_emplace(w, Scalar(0));
            it->second += c;
        }
        terms.clear();
        for (auto& [w, c] : merged)
            if (!c.is_zero()) terms.push_back({c, w});
    }
    friend bool operator==(const APoly& a, const APoly& b) { return a.terms == b.terms; }
};

struct ATensor {
    std::vector<std::pair<Scalar, std::vector<AWord>>> terms;

    void canonicalize() {
        std::map<std::vector<AWord>, Scalar> merged;
        for (auto& [c, k] : terms) {
            auto [it, fresh] = merged.try_emplace(k, Scalar(0));
            it->second += c;
        }
        terms.clear();
        for (auto& [k, c] : merged)
            if (!c.is_zero()) terms.push_back({c, k});
    }
    friend bool operator==(const ATensor& a, const ATensor& b) { return a.terms == b.terms; }
};

struct AlgebraBlock {
    std::string name;
    std::vector<std::string> gens;
    std::vector<std::pair<std::string, long>> grade;
    std::vector<std::pair<AWord, APoly>> rules;
    std::vector<std::pair<std::string, ATensor>> coproduct;
    std::vector<std::pair<std::string, Scalar>> counit;
    std::vector<std::pair<std::string, APoly>> antipode;
    std::vector<std::pair<std::string, APoly>> inverse_antipode;
    friend bool operator==(const AlgebraBlock&, const AlgebraBlock&) = default;
};

struct CoactionBlock {
    std::string name, space, group;
    bool left = false;
    std::vector<std::pair<std::string, ATensor>> map; // generator -> tensor
    std::vector<std::pair<std::string, AWord>> grade; // generator -> group word
    friend bool operator==(const CoactionBlock&, const CoactionBlock&) = default;
};

struct SubgroupBlock {
    std::string name, from, to;
    std::vector<std::pair<std::string, APoly>> map;
    friend bool operator==(const SubgroupBlock&, const SubgroupBlock&) = default;
};

struct PairingBlock {
    std::string name, left, right;
    std::vector<std::tuple<AWord, AWord, Scalar>> values;
    friend bool operator==(const PairingBlock&, const PairingBlock&) = default;
};

} // namespace ast

struct HgxDocument {
    std::vector<ast::AlgebraBlock> algebras;
    std::vector<ast::CoactionBlock> coactions;
    std::vector<ast::SubgroupBlock> subgroups;
    std::vector<ast::PairingBlock> pairings;
    friend bool operator==(const HgxDocument&, const HgxDocument&) = default;
};

// ---------------------------------------------------------------------------
// lexer

namespace detail {

enum class TokKind { ident, integer, punct, tensor, end };

struct Token {
    TokKind kind = TokKind::end;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : s_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') { // comment to end of line
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                ++col_;
                ++pos_;
                continue;
            }
            break;
        }
        tok_ = {};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = TokKind::end;
            return;
        }
        char c = s_[pos_];
        if (c == '(' && pos_ + 2 < s_.size() && s_[pos_ + 1] == 'x' && s_[pos_ + 2] == ')') {
            tok_.kind = TokKind::tensor;
            tok_.text = "(x)";
            consume(3);
            return;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            tok_.kind = TokKind::punct;
            tok_.text = "->";
            consume(2);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) consume(1);
            tok_.kind = TokKind::integer;
            tok_.text = s_.substr(start, pos_ - start);
            tok_.value = std::stol(tok_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                consume(1);
            tok_.kind = TokKind::ident;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        static const std::string punct = "{};:,^*+-/()";
        if (punct.find(c) != std::string::npos) {
            tok_.kind = TokKind::punct;
            tok_.text = std::string(1, c);
            consume(1);
            return;
        }
        throw HgxParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void consume(std::size_t n) {
        pos_ += n;
        col_ += static_cast<int>(n);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

inline const std::vector<std::string>& keywords() {
    static const std::vector<std::string> kw = {
        "scalars", "QIQ",   "algebra", "gens",  "grade",   "rules", "coproduct",
        "counit",  "antipode", "inverse_antipode", "coaction", "space", "group",
        "left",    "map",   "subgroupmap", "from", "to",    "pairing", "right", "values"};
    return kw;
}

inline bool is_keyword(const std::string& s) {
    const auto& kw = keywords();
    return std::find(kw.begin(), kw.end(), s) != kw.end();
}

} // namespace detail

// ---------------------------------------------------------------------------
// parser

class HgxParser {
public:
    explicit HgxParser(const std::string& src) : lex_(src) {}

    HgxDocument parse() {
        expect_ident("scalars");
        expect_ident("QIQ");
        HgxDocument doc;
        while (lex_.peek().kind != detail::TokKind::end) {
            const auto& t = lex_.peek();
            if (t.kind != detail::TokKind::ident)
                throw HgxParseError(t.line, t.col, "expected a block keyword");
            if (t.text == "algebra") doc.algebras.push_back(parse_algebra());
            else if (t.text == "coaction") doc.coactions.push_back(parse_coaction());
            else if (t.text == "subgroupmap") doc.subgroups.push_back(parse_subgroup());
            else if (t.text == "pairing") doc.pairings.push_back(parse_pairing());
            else throw HgxParseError(t.line, t.col, "unknown block '" + t.text + "'");
        }
        return doc;
    }

private:
    detail::Lexer lex_;

    [[noreturn]] void fail(const std::string& msg) {
        const auto& t = lex_.peek();
        throw HgxParseError(t.line, t.col, msg);
    }

    bool peek_ident(const std::string& s) {
        return lex_.peek().kind == detail::TokKind::ident && lex_.peek().text == s;
    }
    bool peek_punct(const std::string& s) {
        return lex_.peek().kind == detail::TokKind::punct && lex_.peek().text == s;
    }
    void expect_ident(const std::string& s) {
        if (!peek_ident(s)) fail("expected '" + s + "'");
        lex_.take();
    }
    void expect_punct(const std::string& s) {
        if (!peek_punct(s)) fail("expected '" + s + "'");
        lex_.take();
    }
    std::string take_name() {
        if (lex_.peek().kind != detail::TokKind::ident) fail("expected a name");
        if (detail::is_keyword(lex_.peek().text))
            fail("'" + lex_.peek().text + "' is a reserved keyword");
        return lex_.take().text;
    }
    long take_int() {
        bool neg = false;
        if (peek_punct("-")) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != detail::TokKind::integer) fail("expected an integer");
        long v = lex_.take().value;
        return neg ? -v : v;
    }

    // scalar expression: + - * / ^ ( ) over integers, i, q
    Scalar parse_scalar_expr() {
        Scalar acc = parse_scalar_term();
        while (peek_punct("+") || peek_punct("-")) {
            bool plus = lex_.take().text == "+";
            Scalar rhs = parse_scalar_term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }
    Scalar parse_scalar_term() {
        Scalar acc = parse_scalar_factor();
        while (peek_punct("*") || peek_punct("/")) {
            bool mul = lex_.take().text == "*";
            Scalar rhs = parse_scalar_factor();
            if (!mul && rhs.is_zero()) fail("division by zero in scalar literal");
            acc = mul ? acc * rhs : acc / rhs;
        }
        return acc;
    }
    Scalar parse_scalar_factor() {
        if (peek_punct("-")) {
            lex_.take();
            return -parse_scalar_factor();
        }
        Scalar base;
        if (lex_.peek().kind == detail::TokKind::integer) {
            base = Scalar(lex_.take().value);
        } else if (peek_ident("i")) {
            lex_.take();
            base = Scalar::unit_i();
        } else if (peek_ident("q")) {
            lex_.take();
            base = Scalar::q();
        } else if (peek_punct("(")) {
            lex_.take();
            base = parse_scalar_expr();
            expect_punct(")");
        } else {
            fail("expected a scalar literal");
        }
        if (peek_punct("^")) {
            lex_.take();
            base = base.pow(take_int());
        }
        return base;
    }

    bool at_scalar_atom() {
        if (lex_.peek().kind == detail::TokKind::integer) return true;
        if (peek_punct("(")) return true;
        if (lex_.peek().kind == detail::TokKind::ident)
            return lex_.peek().text == "i" || lex_.peek().text == "q";
        return false;
    }

    // one product of scalar factors and generator letters
    std::pair<Scalar, ast::AWord> parse_term() {
        Scalar coef(1);
        ast::AWord word;
        bool first = true;
        while (true) {
            if (peek_punct("-") && first) {
                lex_.take();
                coef = -coef;
                continue;
            }
            if (at_scalar_atom()) {
                coef *= parse_scalar_factor();
            } else if (lex_.peek().kind == detail::TokKind::ident &&
                       !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                long e = 1;
                if (peek_punct("^")) {
                    lex_.take();
                    e = take_int();
                    if (e < 0) fail("negative generator exponent");
                }
                for (long k = 0; k < e; ++k) word.push_back(g);
            } else if (first) {
                fail("expected a term");
            } else {
                break;
            }
            first = false;
            if (peek_punct("*")) {
                lex_.take();
                continue;
            }
            break;
        }
        return {coef, word};
    }

    ast::APoly parse_poly() {
        ast::APoly p;
        auto [c, w] = parse_term();
        p.terms.push_back({c, w});
        while (peek_punct("+") || peek_punct("-")) {
            bool plus = lex_.take().text == "+";
            auto [c2, w2] = parse_term();
            p.terms.push_back({plus ? c2 : -c2, w2});
        }
        p.canonicalize();
        return p;
    }

    ast::AWord parse_word() {
        auto [c, w] = parse_term();
        if (!(c == Scalar(1)))
            fail("expected a plain word (no coefficient)");
        return w;
    }

    ast::ATensor parse_tensorpoly() {
        ast::ATensor t;
        auto one = [&]() -> std::pair<Scalar, std::vector<ast::AWord>> {
            auto [c, w] = parse_term();
            std::vector<ast::AWord> legs{w};
            Scalar coef = c;
            while (lex_.peek().kind == detail::TokKind::tensor) {
                lex_.take();
                auto [c2, w2] = parse_term();
                coef *= c2;
                legs.push_back(w2);
            }
            return {coef, legs};
        };
        auto [c, legs] = one();
        t.terms.push_back({c, legs});
        while (peek_punct("+") || peek_punct("-")) {
            bool plus = lex_.take().text == "+";
            auto [c2, legs2] = one();
            if (legs2.size() != legs.size()) fail("tensor arity mismatch");
            t.terms.push_back({plus ? c2 : -c2, legs2});
        }
        t.canonicalize();
        return t;
    }

    ast::AlgebraBlock parse_algebra() {
        expect_ident("algebra");
        ast::AlgebraBlock b;
        b.name = take_name();
        expect_punct("{");
        expect_ident("gens");
        while (lex_.peek().kind == detail::TokKind::ident && !detail::is_keyword(lex_.peek().text))
            b.gens.push_back(lex_.take().text);
        if (b.gens.empty()) fail("algebra needs at least one generator");
        if (peek_ident("grade")) {
            lex_.take();
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct(":");
                b.grade.push_back({g, take_int()});
            }
        }
        if (peek_ident("rules")) {
            lex_.take();
            while (true) {
                ast::AWord lhs = parse_word();
                expect_punct("->");
                b.rules.push_back({lhs, parse_poly()});
                if (peek_punct(";")) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        if (peek_ident("coproduct")) {
            lex_.take();
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct("->");
                b.coproduct.push_back({g, parse_tensorpoly()});
            }
            expect_ident("counit");
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct("->");
                b.counit.push_back({g, parse_scalar_expr()});
            }
        }
        if (peek_ident("antipode")) {
            lex_.take();
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct("->");
                b.antipode.push_back({g, parse_poly()});
            }
        }
        if (peek_ident("inverse_antipode")) {
            lex_.take();
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct("->");
                b.inverse_antipode.push_back({g, parse_poly()});
            }
        }
        expect_punct("}");
        return b;
    }

    ast::CoactionBlock parse_coaction() {
        expect_ident("coaction");
        ast::CoactionBlock b;
        b.name = take_name();
        expect_punct("{");
        expect_ident("space");
        b.space = take_name();
        expect_ident("group");
        b.group = take_name();
        if (peek_ident("left")) {
            lex_.take();
            b.left = true;
        }
        if (peek_ident("map")) {
            lex_.take();
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct("->");
                b.map.push_back({g, parse_tensorpoly()});
            }
        } else if (peek_ident("grade")) {
            lex_.take();
            while (lex_.peek().kind == detail::TokKind::ident &&
                   !detail::is_keyword(lex_.peek().text)) {
                std::string g = lex_.take().text;
                expect_punct("->");
                b.grade.push_back({g, parse_word()});
            }
        } else {
            fail("coaction needs a 'map' or 'grade' section");
        }
        expect_punct("}");
        return b;
    }

    ast::SubgroupBlock parse_subgroup() {
        expect_ident("subgroupmap");
        ast::SubgroupBlock b;
        b.name = take_name();
        expect_punct("{");
        expect_ident("from");
        b.from = take_name();
        expect_ident("to");
        b.to = take_name();
        expect_ident("map");
        while (lex_.peek().kind == detail::TokKind::ident && !detail::is_keyword(lex_.peek().text)) {
            std::string g = lex_.take().text;
            expect_punct("->");
            b.map.push_back({g, parse_poly()});
        }
        expect_punct("}");
        return b;
    }

    ast::PairingBlock parse_pairing() {
        expect_ident("pairing");
        ast::PairingBlock b;
        b.name = take_name();
        expect_punct("{");
        expect_ident("left");
        b.left = take_name();
        expect_ident("right");
        b.right = take_name();
        expect_ident("values");
        while (true) {
            ast::AWord u = parse_word();
            expect_punct(",");
            ast::AWord v = parse_word();
            expect_punct("->");
            b.values.push_back({u, v, parse_scalar_expr()});
            if (peek_punct(";")) {
                lex_.take();
                continue;
            }
            break;
        }
        expect_punct("}");
        return b;
    }
};

inline HgxDocument parse_hgx(const std::string& text) { return HgxParser(text).parse(); }

// ---------------------------------------------------------------------------
// pretty printer (canonical form; parses back to an equal document)

namespace detail {

inline std::string print_word(const ast::AWord& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!out.empty()) out += "*";
        out += w[k];
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

inline std::string print_coef_word(const Scalar& c, const std::string& mono, bool lead) {
    std::string cs = c.str();
    std::string term;
    bool composite = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos ||
                     cs.find('/') != std::string::npos;
    if (mono.empty()) {
        term = composite ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
        term = mono;
    } else if (cs == "-1") {
        term = "-" + mono;
    } else {
        term = (composite ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (lead) return term;
    if (!term.empty() && term[0] == '-') return term;
    return "+" + term;
}

inline std::string print_poly(const ast::APoly& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    bool lead = true;
    for (const auto& [c, w] : p.terms) {
        out += print_coef_word(c, w.empty() ? "" : print_word(w), lead);
        lead = false;
    }
    return out;
}

inline std::string print_tensor(const ast::ATensor& t) {
    if (t.terms.empty()) return "0";
    std::string out;
    bool lead = true;
    for (const auto& [c, legs] : t.terms) {
        std::string mono;
        for (std::size_t l = 0; l < legs.size(); ++l) {
            if (l) mono += "(x)";
            mono += print_word(legs[l]);
        }
        out += print_coef_word(c, mono, lead);
        lead = false;
    }
    return out;
}

} // namespace detail

inline std::string print_hgx(const HgxDocument& doc) {
    std::ostringstream os;
    os << "scalars QIQ\n";
    for (const auto& a : doc.algebras) {
        os << "\nalgebra " << a.name << " {\n  gens";
        for (const auto& g : a.gens) os << " " << g;
        os << "\n";
        if (!a.grade.empty()) {
            os << "  grade";
            for (const auto& [g, w] : a.grade) os << " " << g << ":" << w;
            os << "\n";
        }
        if (!a.rules.empty()) {
            os << "  rules\n";
            for (std::size_t k = 0; k < a.rules.size(); ++k)
                os << "    " << detail::print_word(a.rules[k].first) << " -> "
                   << detail::print_poly(a.rules[k].second)
                   << (k + 1 < a.rules.size() ? " ;" : "") << "\n";
        }
        if (!a.coproduct.empty()) {
            os << "  coproduct\n";
            for (const auto& [g, t] : a.coproduct)
                os << "    " << g << " -> " << detail::print_tensor(t) << "\n";
            os << "  counit\n";
            for (const auto& [g, c] : a.counit) os << "    " << g << " -> " << c.str() << "\n";
        }
        if (!a.antipode.empty()) {
            os << "  antipode\n";
            for (const auto& [g, p] : a.antipode)
                os << "    " << g << " -> " << detail::print_poly(p) << "\n";
        }
        if (!a.inverse_antipode.empty()) {
            os << "  inverse_antipode\n";
            for (const auto& [g, p] : a.inverse_antipode)
                os << "    " << g << " -> " << detail::print_poly(p) << "\n";
        }
        os << "}\n";
    }
    for (const auto& c : doc.coactions) {
        os << "\ncoaction " << c.name << " {\n  space " << c.space << " group " << c.group;
        if (c.left) os << " left";
        os << "\n";
        if (!c.map.empty()) {
            os << "  map\n";
            for (const auto& [g, t] : c.map)
                os << "    " << g << " -> " << detail::print_tensor(t) << "\n";
        } else {
            os << "  grade\n";
            for (const auto& [g, w] : c.grade)
                os << "    " << g << " -> " << detail::print_word(w) << "\n";
        }
        os << "}\n";
    }
    for (const auto& s : doc.subgroups) {
        os << "\nsubgroupmap " << s.name << " {\n  from " << s.from << " to " << s.to << "\n  map\n";
        for (const auto& [g, p] : s.map)
            os << "    " << g << " -> " << detail::print_poly(p) << "\n";
        os << "}\n";
    }
    for (const auto& p : doc.pairings) {
        os << "\npairing " << p.name << " {\n  left " << p.left << " right " << p.right
           << "\n  values\n";
        for (std::size_t k = 0; k < p.values.size(); ++k) {
            const auto& [u, v, c] = p.values[k];
            os << "    " << detail::print_word(u) << " , " << detail::print_word(v) << " -> "
               << c.str() << (k + 1 < p.values.size() ? " ;" : "") << "\n";
        }
        os << "}\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// wiring: document -> live objects

/// Fully wired objects of one document.  Move-only: pairings and coactions
/// hold pointers into the algebra map (node-based, stable under move).
struct WiredDocument {
    std::map<std::string, HopfStructure> algebras;
    std::vector<std::string> algebra_order;
    std::map<std::string, Coaction> coactions;
    std::vector<std::string> coaction_order;
    struct WiredSubgroup {
        std::string from, to;
        SubgroupMap pi;
    };
    std::map<std::string, WiredSubgroup> subgroups;
    std::vector<std::string> subgroup_order;
    std::map<std::string, Pairing> pairings;
    std::vector<std::string> pairing_order;

    WiredDocument() = default;
    WiredDocument(const WiredDocument&) = delete;
    WiredDocument& operator=(const WiredDocument&) = delete;
    WiredDocument(WiredDocument&&) = default;
    WiredDocument& operator=(WiredDocument&&) = default;
};

namespace detail {

inline Word wire_word(const Presentation& P, const ast::AWord& w) {
    Word out;
    for (const auto& g : w) out.push_back(P.gen_index(g));
    return out;
}

inline NcPoly wire_poly(const Presentation& P, const ast::APoly& p, bool normalize = true) {
    NcPoly out;
    for (const auto& [c, w] : p.terms) out.add_term(wire_word(P, w), c);
    return normalize ? P.normal_form(out) : out;
}

inline TensorElement wire_tensor2(const Presentation& L, const Presentation& R,
                                  const ast::ATensor& t, bool flip) {
    TensorElement out(2);
    for (const auto& [c, legs] : t.terms) {
        if (legs.size() != 2) throw std::invalid_argument("expected an arity-2 tensor");
        const ast::AWord& lw = legs[flip ? 1 : 0];
        const ast::AWord& rw = legs[flip ? 0 : 1];
        NcPoly lp = L.normal_form(NcPoly::monomial(wire_word(L, lw), Scalar(1)));
        NcPoly rp = R.normal_form(NcPoly::monomial(wire_word(R, rw), Scalar(1)));
        for (const auto& [wl, cl] : lp.terms())
            for (const auto& [wr, cr] : rp.terms()) out.add_term({wl, wr}, c * cl * cr);
    }
    return out;
}

} // namespace detail

inline WiredDocument wire_document(const HgxDocument& doc) {
    WiredDocument out;
    for (const auto& a : doc.algebras) {
        // presentation first (names + rules + grading)
        std::optional<std::vector<long>> grading;
        if (!a.grade.empty()) {
            std::vector<long> g(a.gens.size(), 0);
            for (const auto& [name, w] : a.grade) {
                auto it = std::find(a.gens.begin(), a.gens.end(), name);
                if (it == a.gens.end())
                    throw std::invalid_argument("algebra " + a.name + ": unknown generator '" +
                                                name + "' in grade");
                g[it - a.gens.begin()] = w;
            }
            grading = std::move(g);
        }
        Presentation names(a.gens, {}, std::nullopt); // name table for wiring rule text
        std::vector<std::pair<Word, NcPoly>> rules;
        for (const auto& [lhs, rhs] : a.rules) {
            NcPoly raw;
            for (const auto& [c, w] : rhs.terms) raw.add_term(detail::wire_word(names, w), c);
            rules.push_back({detail::wire_word(names, lhs), raw});
        }
        Presentation P(a.gens, std::move(rules), grading);
        if (a.coproduct.empty()) {
            out.algebras.emplace(a.name, HopfStructure::algebra_only(std::move(P)));
            out.algebra_order.push_back(a.name);
            continue;
        }
        auto gen_table = [&](const std::vector<std::pair<std::string, ast::APoly>>& entries,
                             const char* what) {
            std::vector<NcPoly> table(P.gen_count());
            std::vector<bool> seen(P.gen_count(), false);
            for (const auto& [g, p] : entries) {
                int k = P.gen_index(g);
                table[k] = detail::wire_poly(P, p);
                seen[k] = true;
            }
            for (std::size_t k = 0; k < P.gen_count(); ++k)
                if (!seen[k])
                    throw std::invalid_argument("algebra " + a.name + ": " + what +
                                                " missing generator " + P.gen_name(k));
            return table;
        };
        std::vector<TensorElement> delta(P.gen_count());
        {
            std::vector<bool> seen(P.gen_count(), false);
            for (const auto& [g, t] : a.coproduct) {
                int k = P.gen_index(g);
                delta[k] = detail::wire_tensor2(P, P, t, false);
                seen[k] = true;
            }
            for (std::size_t k = 0; k < P.gen_count(); ++k)
                if (!seen[k])
                    throw std::invalid_argument("algebra " + a.name +
                                                ": coproduct missing generator " + P.gen_name(k));
        }
        std::vector<Scalar> eps(P.gen_count());
        {
            std::vector<bool> seen(P.gen_count(), false);
            for (const auto& [g, c] : a.counit) {
                int k = P.gen_index(g);
                eps[k] = c;
                seen[k] = true;
            }
            for (std::size_t k = 0; k < P.gen_count(); ++k)
                if (!seen[k])
                    throw std::invalid_argument("algebra " + a.name +
                                                ": counit missing generator " + P.gen_name(k));
        }
        std::optional<std::vector<NcPoly>> antipode, antipode_inv;
        if (!a.antipode.empty()) antipode = gen_table(a.antipode, "antipode");
        if (!a.inverse_antipode.empty())
            antipode_inv = gen_table(a.inverse_antipode, "inverse_antipode");
        out.algebras.emplace(a.name, HopfStructure(std::move(P), std::move(delta), std::move(eps),
                                                   std::move(antipode), std::move(antipode_inv)));
        out.algebra_order.push_back(a.name);
    }
    auto find_algebra = [&out](const std::string& name) -> const HopfStructure& {
        auto it = out.algebras.find(name);
        if (it == out.algebras.end())
            throw std::invalid_argument("unknown algebra '" + name + "'");
        return it->second;
    };
    for (const auto& c : doc.coactions) {
        const HopfStructure& A = find_algebra(c.space);
        const HopfStructure& H = find_algebra(c.group);
        if (!c.grade.empty()) {
            std::vector<Word> grade(A.pres().gen_count());
            std::vector<bool> seen(A.pres().gen_count(), false);
            for (const auto& [g, w] : c.grade) {
                int k = A.pres().gen_index(g);
                grade[k] = detail::wire_word(H.pres(), w);
                seen[k] = true;
            }
            for (std::size_t k = 0; k < A.pres().gen_count(); ++k)
                if (!seen[k])
                    throw std::invalid_argument("coaction " + c.name + ": grade missing generator " +
                                                A.pres().gen_name(k));
            out.coactions.emplace(c.name, graded_coaction(A.pres(), H, grade));
        } else {
            std::vector<TensorElement> delta(A.pres().gen_count());
            std::vector<bool> seen(A.pres().gen_count(), false);
            for (const auto& [g, t] : c.map) {
                int k = A.pres().gen_index(g);
                // left coactions are written with legs (H, A) and stored flipped
                delta[k] = detail::wire_tensor2(A.pres(), H.pres(), t, c.left);
                seen[k] = true;
            }
            for (std::size_t k = 0; k < A.pres().gen_count(); ++k)
                if (!seen[k])
                    throw std::invalid_argument("coaction " + c.name + ": map missing generator " +
                                                A.pres().gen_name(k));
            out.coactions.emplace(c.name, Coaction(A.pres(), H, std::move(delta), c.left));
        }
        out.coaction_order.push_back(c.name);
    }
    for (const auto& s : doc.subgroups) {
        const HopfStructure& from = find_algebra(s.from);
        const HopfStructure& to = find_algebra(s.to);
        SubgroupMap pi;
        pi.images.resize(from.pres().gen_count());
        std::vector<bool> seen(from.pres().gen_count(), false);
        for (const auto& [g, p] : s.map) {
            int k = from.pres().gen_index(g);
            pi.images[k] = detail::wire_poly(to.pres(), p);
            seen[k] = true;
        }
        for (std::size_t k = 0; k < from.pres().gen_count(); ++k)
            if (!seen[k])
                throw std::invalid_argument("subgroupmap " + s.name + ": missing generator " +
                                            from.pres().gen_name(k));
        out.subgroups.emplace(s.name, WiredDocument::WiredSubgroup{s.from, s.to, std::move(pi)});
        out.subgroup_order.push_back(s.name);
    }
    for (const auto& p : doc.pairings) {
        const HopfStructure& L = find_algebra(p.left);
        const HopfStructure& R = find_algebra(p.right);
        Pairing pair;
        pair.left = &out.algebras.at(p.left);
        pair.right = &out.algebras.at(p.right);
        for (const auto& [u, v, c] : p.values)
            pair.values[{detail::wire_word(L.pres(), u), detail::wire_word(R.pres(), v)}] = c;
        auto fl = finite_basis(L.pres());
        auto fr = finite_basis(R.pres());
        pair.finite = fl.has_value() && fr.has_value();
        if (pair.finite) {
            for (const auto& u : *fl)
                for (const auto& v : *fr)
                    if (!pair.values.count({u, v}))
                        throw std::invalid_argument("pairing " + p.name +
                                                    " does not cover all basis pairs");
        }
        out.pairings.emplace(p.name, std::move(pair));
        out.pairing_order.push_back(p.name);
    }
    return out;
}

/// AST reconstructed from wired structures; used by exports and reports.
inline ast::APoly poly_to_ast(const Presentation& P, const NcPoly& p) {
    ast::APoly out;
    for (const auto& [w, c] : p.terms()) {
        ast::AWord aw;
        for (int g : w) aw.push_back(P.gen_name(g));
        out.terms.push_back({c, aw});
    }
    return out;
}

} // namespace hgx
