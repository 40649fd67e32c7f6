#pragma once

#include "hgx/matrix.hpp"
#include "hgx/scalar.hpp"
#include "hgx/word.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgx {

class Presentation;

/// Element of a finitely presented algebra: finite map from normal-form
/// words to nonzero scalars, ordered deterministically by the termination
/// order.
class NcPoly {
public:
    using Terms = std::map<Word, Scalar, DeglexLess>;

    NcPoly() = default;
    static NcPoly zero() { return {}; }
    static NcPoly unit() { return monomial(Word{}, Scalar(1)); }
    static NcPoly monomial(Word w, Scalar c) {
        NcPoly p;
        if (!c.is_zero()) p.terms_[std::move(w)] = std::move(c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b) {
        NcPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b) {
        NcPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend NcPoly operator*(const Scalar& c, const NcPoly& a) {
        NcPoly r;
        for (const auto& [w, x] : a.terms_) r.add_term(w, c * x);
        return r;
    }
    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    /// Max word length among terms (0 for the zero polynomial).
    std::size_t filtration_degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }

    std::string str(const Presentation& pres) const;

private:
    Terms terms_;
};

struct RewriteRule {
    Word lhs;
    NcPoly rhs; // raw polynomial; its words are over the same generators
};

struct ConfluenceIssue {
    Word overlap;
    NcPoly left_normal;
    NcPoly right_normal;
};

/// Finitely presented associative unital algebra with an oriented, length
/// reducing (deg-lex) rewriting system.  Normal-form words of the system are
/// the working linear basis.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::vector<std::string> gens,
                 std::vector<std::pair<Word, NcPoly>> rules,
                 std::optional<std::vector<long>> grading = std::nullopt)
        : gens_(std::move(gens)), grading_(std::move(grading)) {
        for (std::size_t k = 0; k < gens_.size(); ++k) index_[gens_[k]] = static_cast<int>(k);
        if (grading_ && grading_->size() != gens_.size())
            throw std::invalid_argument("grading vector size mismatch");
        for (auto& [lhs, rhs] : rules) add_rule(lhs, rhs);
        // left-hand sides must be irreducible with respect to every other rule
        for (std::size_t i = 0; i < rules_.size(); ++i)
            for (std::size_t j = 0; j < rules_.size(); ++j) {
                if (i == j) continue;
                if (find_subword(rules_[i].lhs, rules_[j].lhs) >= 0)
                    throw std::invalid_argument(
                        "rule left-hand side " + word_str(rules_[i].lhs) +
                        " is reducible by rule " + word_str(rules_[j].lhs));
            }
    }

    std::size_t gen_count() const { return gens_.size(); }
    const std::vector<std::string>& gens() const { return gens_; }
    const std::string& gen_name(int k) const { return gens_[k]; }
    int gen_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown generator: " + name);
        return it->second;
    }
    bool has_gen(const std::string& name) const { return index_.count(name) != 0; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::optional<std::vector<long>>& grading() const { return grading_; }

    long word_grade(const Word& w) const {
        if (!grading_) return static_cast<long>(w.size());
        long g = 0;
        for (int k : w) g += (*grading_)[k];
        return g;
    }

    bool is_graded() const {
        if (!grading_) return false;
        for (const auto& rule : rules_) {
            long g = word_grade(rule.lhs);
            for (const auto& [w, c] : rule.rhs.terms())
                if (word_grade(w) != g) return false;
        }
        return true;
    }

    /// True when no rule left-hand side occurs in w.
    bool is_normal_word(const Word& w) const {
        for (const auto& rule : rules_)
            if (find_subword(w, rule.lhs) >= 0) return false;
        return true;
    }

    NcPoly normal_form(const NcPoly& raw, long step_budget = default_step_budget) const {
        NcPoly out;
        // worklist of scaled words still containing redexes
        std::vector<std::pair<Word, Scalar>> todo;
        for (const auto& [w, c] : raw.terms()) todo.emplace_back(w, c);
        long steps = 0;
        while (!todo.empty()) {
            auto [w, c] = std::move(todo.back());
            todo.pop_back();
            int pos = -1;
            const RewriteRule* hit = nullptr;
            for (std::size_t p = 0; p < w.size() && !hit; ++p) {
                // leftmost position, first matching rule in declaration order
                for (const auto& rule : rules_) {
                    if (p + rule.lhs.size() > w.size()) continue;
                    bool match = true;
                    for (std::size_t k = 0; k < rule.lhs.size(); ++k)
                        if (w[p + k] != rule.lhs[k]) {
                            match = false;
                            break;
                        }
                    if (match) {
                        pos = static_cast<int>(p);
                        hit = &rule;
                        break;
                    }
                }
            }
            if (!hit) {
                out.add_term(w, c);
                continue;
            }
            if (++steps > step_budget)
                throw std::runtime_error("rewriting step budget exceeded (non-termination?)");
            Word prefix(w.begin(), w.begin() + pos);
            Word suffix(w.begin() + pos + hit->lhs.size(), w.end());
            for (const auto& [rw, rc] : hit->rhs.terms()) {
                Word nw = prefix;
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                todo.emplace_back(std::move(nw), c * rc);
            }
        }
        return out;
    }

    NcPoly mul(const NcPoly& a, const NcPoly& b) const {
        NcPoly raw;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms())
                raw.add_term(concat(wa, wb), ca * cb);
        return normal_form(raw);
    }

    NcPoly gen_poly(int k) const { return NcPoly::monomial(Word{k}, Scalar(1)); }
    NcPoly gen_poly(const std::string& name) const { return gen_poly(gen_index(name)); }

    /// All normal-form words of length <= d, in deg-lex order.  When the
    /// irreducible language is finite and exhausted below d, the full basis
    /// is returned.
    std::vector<Word> basis_up_to(std::size_t d) const {
        std::vector<Word> all{Word{}};
        std::vector<Word> level{Word{}};
        for (std::size_t len = 1; len <= d && !level.empty(); ++len) {
            std::vector<Word> next;
            for (const auto& w : level) {
                for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
                    Word cand = w;
                    cand.push_back(g);
                    // only suffix redexes are possible: w itself is irreducible
                    bool reducible = false;
                    for (const auto& rule : rules_) {
                        if (rule.lhs.size() > cand.size()) continue;
                        bool match = true;
                        std::size_t off = cand.size() - rule.lhs.size();
                        for (std::size_t k = 0; k < rule.lhs.size(); ++k)
                            if (cand[off + k] != rule.lhs[k]) {
                                match = false;
                                break;
                            }
                        if (match) {
                            reducible = true;
                            break;
                        }
                    }
                    if (!reducible) next.push_back(std::move(cand));
                }
            }
            all.insert(all.end(), next.begin(), next.end());
            level = std::move(next);
        }
        return all;
    }

    /// Critical-pair check: all overlaps and containments of rule left-hand
    /// sides whose superposition word has length <= d must reduce to equal
    /// normal forms.  Returns the unresolved ambiguities.
    std::vector<ConfluenceIssue> check_local_confluence(std::size_t d) const {
        std::vector<ConfluenceIssue> issues;
        auto probe = [&](const Word& w, std::size_t pos_i, const RewriteRule& ri,
                         std::size_t pos_j, const RewriteRule& rj) {
            NcPoly lhs_red = apply_at(w, pos_i, ri);
            NcPoly rhs_red = apply_at(w, pos_j, rj);
            NcPoly ln = normal_form(lhs_red);
            NcPoly rn = normal_form(rhs_red);
            if (ln != rn) issues.push_back({w, ln, rn});
        };
        for (const auto& ri : rules_) {
            for (const auto& rj : rules_) {
                // proper overlap: suffix of ri.lhs = prefix of rj.lhs
                for (std::size_t o = 1; o < ri.lhs.size() && o < rj.lhs.size(); ++o) {
                    bool ok = true;
                    for (std::size_t k = 0; k < o; ++k)
                        if (ri.lhs[ri.lhs.size() - o + k] != rj.lhs[k]) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    Word w = ri.lhs;
                    w.insert(w.end(), rj.lhs.begin() + o, rj.lhs.end());
                    if (w.size() > d) continue;
                    probe(w, 0, ri, ri.lhs.size() - o, rj);
                }
                // containment: rj.lhs strictly inside ri.lhs
                if (&ri != &rj && rj.lhs.size() < ri.lhs.size()) {
                    for (int p = 0; (p = find_subword(ri.lhs, rj.lhs, p)) >= 0; ++p) {
                        if (ri.lhs.size() <= d) probe(ri.lhs, 0, ri, p, rj);
                    }
                }
            }
        }
        return issues;
    }

    /// Commutative evaluation of all defining relations at a character
    /// candidate.  True iff every relation vanishes.
    bool check_character(const std::vector<GaussRat>& assignment,
                         const GaussRat& q_value) const {
        if (assignment.size() != gens_.size())
            throw std::invalid_argument("character assignment size mismatch");
        auto eval_word = [&](const Word& w) {
            GaussRat v(1);
            for (int k : w) v *= assignment[k];
            return v;
        };
        for (const auto& rule : rules_) {
            GaussRat v = eval_word(rule.lhs);
            for (const auto& [w, c] : rule.rhs.terms())
                v -= c.eval_q(q_value) * eval_word(w);
            if (!v.is_zero()) return false;
        }
        return true;
    }

    /// Full normal-word basis when the irreducible language is finite
    /// (detected by a stabilizing enumeration), nullopt otherwise.
    std::optional<std::vector<Word>> finite_basis(std::size_t cap = 48) const {
        std::vector<Word> prev = basis_up_to(0);
        for (std::size_t d = 1; d <= cap; ++d) {
            std::vector<Word> cur = basis_up_to(d);
            if (cur.size() == prev.size()) return cur;
            prev = std::move(cur);
        }
        return std::nullopt;
    }

    Word parse_word(const std::string& text) const;
    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) s += "*";
            s += gens_[w[k]];
        }
        return s;
    }

    static constexpr long default_step_budget = 2'000'000;

private:
    NcPoly apply_at(const Word& w, std::size_t pos, const RewriteRule& rule) const {
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
        NcPoly out;
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            out.add_term(nw, rc);
        }
        return out;
    }

    void add_rule(const Word& lhs, const NcPoly& rhs) {
        if (lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
        for (const auto& [w, c] : rhs.terms())
            if (!deglex_lt(w, lhs))
                throw std::invalid_argument(
                    "non-decreasing rule: " + word_str(lhs) + " -> " + word_str(w));
        for (const auto& other : rules_)
            if (find_subword(lhs, other.lhs) >= 0)
                throw std::invalid_argument(
                    "rule left-hand side " + word_str(lhs) +
                    " is reducible by earlier rule " + word_str(other.lhs));
        rules_.push_back({lhs, rhs});
    }

    std::vector<std::string> gens_;
    std::map<std::string, int> index_;
    std::vector<RewriteRule> rules_;
    std::optional<std::vector<long>> grading_;
};

inline std::string NcPoly::str(const Presentation& pres) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string coef = c.str();
        std::string term;
        if (w.empty()) {
            term = coef.find('+') != std::string::npos || coef.find('-', 1) != std::string::npos
                       ? "(" + coef + ")"
                       : coef;
        } else if (coef == "1") {
            term = pres.word_str(w);
        } else if (coef == "-1") {
            term = "-" + pres.word_str(w);
        } else {
            bool composite = coef.find('+') != std::string::npos ||
                             coef.find('-', 1) != std::string::npos ||
                             coef.find('/') != std::string::npos;
            term = (composite ? "(" + coef + ")" : coef) + "*" + pres.word_str(w);
        }
        if (out.empty()) out = term;
        else if (term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

inline Word Presentation::parse_word(const std::string& text) const {
    Word w;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, '*')) {
        // allow surrounding spaces
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        std::string name = tok.substr(b, e - b + 1);
        if (name == "1") continue;
        w.push_back(gen_index(name));
    }
    return w;
}

} // namespace hgx
