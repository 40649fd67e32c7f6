#pragma once

#include "hgx/matrix.hpp"
#include "hgx/tensor.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgx {

struct Verdict {
    bool ok = true;
    std::string witness;
    static Verdict pass() { return {}; }
    static Verdict fail(std::string w) { return {false, std::move(w)}; }
    explicit operator bool() const { return ok; }
};

enum class ExtensionMode { algebra_morphism, structure_constants };
enum class StructureLevel { algebra, coalgebra, bialgebra, hopf };

inline const char* level_name(StructureLevel l) {
    switch (l) {
        case StructureLevel::algebra: return "algebra";
        case StructureLevel::coalgebra: return "coalgebra";
        case StructureLevel::bialgebra: return "bialgebra";
        case StructureLevel::hopf: return "hopf";
    }
    return "?";
}

/// Coalgebra / bialgebra / Hopf structure on a presented algebra.  In
/// algebra-morphism mode the structure maps are given on generators and
/// extended as (anti)morphisms; structure-constants mode carries Delta and
/// epsilon on an explicit finite basis (pure coalgebras).
class HopfStructure {
public:
    HopfStructure() = default;

    HopfStructure(Presentation pres, std::vector<TensorElement> delta_gen,
                  std::vector<Scalar> eps_gen,
                  std::optional<std::vector<NcPoly>> antipode_gen = std::nullopt,
                  std::optional<std::vector<NcPoly>> antipode_inv_gen = std::nullopt,
                  std::optional<StructureLevel> level = std::nullopt)
        : pres_(std::move(pres)),
          mode_(ExtensionMode::algebra_morphism),
          delta_gen_(std::move(delta_gen)),
          eps_gen_(std::move(eps_gen)),
          antipode_gen_(std::move(antipode_gen)),
          antipode_inv_gen_(std::move(antipode_inv_gen)) {
        if (delta_gen_.size() != pres_.gen_count() || eps_gen_.size() != pres_.gen_count())
            throw std::invalid_argument("structure map tables must cover every generator");
        level_ = level.value_or(antipode_gen_ ? StructureLevel::hopf : StructureLevel::bialgebra);
    }

    /// Plain presented algebra with no coalgebra structure.
    static HopfStructure algebra_only(Presentation pres) {
        HopfStructure h;
        std::size_t n = pres.gen_count();
        h.pres_ = std::move(pres);
        h.level_ = StructureLevel::algebra;
        h.delta_gen_.resize(n);
        h.eps_gen_.resize(n);
        return h;
    }

    static HopfStructure structure_constants(
        Presentation pres, std::vector<Word> basis,
        std::map<Word, TensorElement, DeglexLess> delta,
        std::map<Word, Scalar, DeglexLess> eps,
        std::map<Word, NcPoly, DeglexLess> antipode = {}) {
        HopfStructure h;
        h.pres_ = std::move(pres);
        h.mode_ = ExtensionMode::structure_constants;
        h.level_ = antipode.empty() ? StructureLevel::coalgebra : StructureLevel::hopf;
        h.sc_basis_ = std::move(basis);
        h.sc_delta_ = std::move(delta);
        h.sc_eps_ = std::move(eps);
        h.sc_antipode_ = std::move(antipode);
        return h;
    }

    const Presentation& pres() const { return pres_; }
    ExtensionMode mode() const { return mode_; }
    StructureLevel level() const { return level_; }
    void set_level(StructureLevel l) { level_ = l; }
    bool has_antipode() const {
        return mode_ == ExtensionMode::structure_constants ? !sc_antipode_.empty()
                                                           : antipode_gen_.has_value();
    }
    bool has_antipode_inverse() const { return antipode_inv_gen_.has_value(); }

    const std::vector<TensorElement>& delta_table() const { return delta_gen_; }
    const std::vector<Scalar>& counit_table() const { return eps_gen_; }
    const std::optional<std::vector<NcPoly>>& antipode_table() const { return antipode_gen_; }
    const std::optional<std::vector<NcPoly>>& antipode_inverse_table() const {
        return antipode_inv_gen_;
    }

    /// Basis words relevant for pointwise checks: the explicit basis in
    /// structure-constants mode, normal words of length <= d otherwise.
    std::vector<Word> basis(std::size_t d) const {
        if (mode_ == ExtensionMode::structure_constants) return sc_basis_;
        return pres_.basis_up_to(d);
    }

    TensorElement delta_word(const Word& w) const {
        if (level_ == StructureLevel::algebra)
            throw std::logic_error("no coproduct declared on this algebra");
        if (mode_ == ExtensionMode::structure_constants) {
            auto it = sc_delta_.find(w);
            if (it == sc_delta_.end())
                throw std::invalid_argument("delta not tabulated on word " + pres_.word_str(w));
            return it->second;
        }
        TensorElement acc = TensorElement::unit(2);
        std::vector<const Presentation*> legs{&pres_, &pres_};
        for (int g : w) acc = tensor_mul(acc, delta_gen_[g], legs);
        return acc;
    }

    TensorElement delta(const NcPoly& p) const {
        TensorElement acc(2);
        for (const auto& [w, c] : p.terms()) acc = acc + c * delta_word(w);
        return acc;
    }

    Scalar epsilon_word(const Word& w) const {
        if (mode_ == ExtensionMode::structure_constants) {
            auto it = sc_eps_.find(w);
            if (it == sc_eps_.end())
                throw std::invalid_argument("counit not tabulated on word " + pres_.word_str(w));
            return it->second;
        }
        Scalar acc(1);
        for (int g : w) acc *= eps_gen_[g];
        return acc;
    }

    Scalar epsilon(const NcPoly& p) const {
        Scalar acc;
        for (const auto& [w, c] : p.terms()) acc += c * epsilon_word(w);
        return acc;
    }

    /// Antimultiplicative extension of the antipode: S(uv) = S(v) S(u).
    NcPoly antipode_word(const Word& w) const {
        if (mode_ == ExtensionMode::structure_constants) {
            auto it = sc_antipode_.find(w);
            if (it == sc_antipode_.end())
                throw std::invalid_argument("antipode not tabulated on word " + pres_.word_str(w));
            return it->second;
        }
        if (!antipode_gen_) throw std::logic_error("no antipode declared");
        NcPoly acc = NcPoly::unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = pres_.mul(acc, (*antipode_gen_)[*it]);
        return acc;
    }

    NcPoly antipode_apply(const NcPoly& p) const {
        NcPoly acc;
        for (const auto& [w, c] : p.terms()) acc = acc + c * antipode_word(w);
        return acc;
    }

    NcPoly antipode_inverse_word(const Word& w) const {
        if (!antipode_inv_gen_) throw std::logic_error("no inverse antipode declared");
        NcPoly acc = NcPoly::unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = pres_.mul(acc, (*antipode_inv_gen_)[*it]);
        return acc;
    }

    NcPoly antipode_inverse_apply(const NcPoly& p) const {
        NcPoly acc;
        for (const auto& [w, c] : p.terms()) acc = acc + c * antipode_inverse_word(w);
        return acc;
    }

    NcPoly antipode_power(long n, const NcPoly& h) const {
        NcPoly acc = pres_.normal_form(h);
        for (long k = 0; k < n; ++k) acc = antipode_apply(acc);
        return acc;
    }

    HopfStructure with_antipode(std::vector<NcPoly> s,
                                std::optional<std::vector<NcPoly>> s_inv = std::nullopt) const {
        HopfStructure h = *this;
        h.antipode_gen_ = std::move(s);
        h.antipode_inv_gen_ = std::move(s_inv);
        h.level_ = StructureLevel::hopf;
        return h;
    }

    /// True when the coproduct legs of every generator are homogeneous of
    /// the generator's own grade; then every Sweedler leg of a word has the
    /// word's grade, which various checkers use to split into blocks.
    bool coproduct_leg_graded() const {
        if (mode_ != ExtensionMode::algebra_morphism || !pres_.is_graded()) return false;
        for (std::size_t g = 0; g < delta_gen_.size(); ++g) {
            long d = pres_.word_grade(Word{static_cast<int>(g)});
            for (const auto& [key, c] : delta_gen_[g].terms())
                if (pres_.word_grade(key[0]) != d || pres_.word_grade(key[1]) != d)
                    return false;
        }
        return true;
    }

private:
    Presentation pres_;
    ExtensionMode mode_ = ExtensionMode::algebra_morphism;
    StructureLevel level_ = StructureLevel::bialgebra;
    std::vector<TensorElement> delta_gen_;
    std::vector<Scalar> eps_gen_;
    std::optional<std::vector<NcPoly>> antipode_gen_;
    std::optional<std::vector<NcPoly>> antipode_inv_gen_;
    std::vector<Word> sc_basis_;
    std::map<Word, TensorElement, DeglexLess> sc_delta_;
    std::map<Word, Scalar, DeglexLess> sc_eps_;
    std::map<Word, NcPoly, DeglexLess> sc_antipode_;
};

// ---------------------------------------------------------------------------
// axiom checkers

inline Verdict check_coassoc(const HopfStructure& H, std::size_t d) {
    auto delta1 = [&](const Word& w) { return H.delta_word(w); };
    for (const auto& w : H.basis(d)) {
        TensorElement t = H.delta_word(w);
        TensorElement lhs = map_leg(t, 0, delta1, 1);
        TensorElement rhs = map_leg(t, 1, delta1, 1);
        if (lhs != rhs) return Verdict::fail(H.pres().word_str(w));
    }
    return Verdict::pass();
}

inline Verdict check_counit(const HopfStructure& H, std::size_t d) {
    for (const auto& w : H.basis(d)) {
        TensorElement t = H.delta_word(w);
        NcPoly left, right;
        for (const auto& [key, c] : t.terms()) {
            left.add_term(key[1], c * H.epsilon_word(key[0]));
            right.add_term(key[0], c * H.epsilon_word(key[1]));
        }
        NcPoly expect = NcPoly::monomial(w, Scalar(1));
        if (left != expect || right != expect) return Verdict::fail(H.pres().word_str(w));
    }
    return Verdict::pass();
}

/// Compatibility of the coalgebra maps with the product.  Since Delta and
/// eps extend multiplicatively, well-definedness on every rewrite rule
/// certifies the identities Delta(uv) = Delta(u)Delta(v) and eps(uv) =
/// eps(u)eps(v) everywhere; for finite-dimensional algebras both are also
/// verified pointwise on basis pairs of combined length <= d.
inline Verdict check_bialgebra(const HopfStructure& H, std::size_t d) {
    if (H.mode() != ExtensionMode::algebra_morphism)
        return Verdict::fail("bialgebra check requires algebra-morphism mode");
    const Presentation& P = H.pres();
    for (const auto& rule : P.rules()) {
        TensorElement dl = H.delta_word(rule.lhs);
        TensorElement dr = H.delta(rule.rhs);
        if (dl != dr)
            return Verdict::fail("rule " + P.word_str(rule.lhs) + " (coproduct)");
        Scalar el = H.epsilon_word(rule.lhs);
        if (el != H.epsilon(rule.rhs))
            return Verdict::fail("rule " + P.word_str(rule.lhs) + " (counit)");
    }
    if (P.finite_basis()) {
        std::vector<const Presentation*> legs{&P, &P};
        auto basis = H.basis(d);
        for (const auto& u : basis) {
            for (const auto& v : basis) {
                if (u.size() + v.size() > d) continue;
                NcPoly uv = P.mul(NcPoly::monomial(u, Scalar(1)), NcPoly::monomial(v, Scalar(1)));
                if (H.delta(uv) != tensor_mul(H.delta_word(u), H.delta_word(v), legs))
                    return Verdict::fail(P.word_str(u) + " * " + P.word_str(v));
                if (H.epsilon(uv) != H.epsilon_word(u) * H.epsilon_word(v))
                    return Verdict::fail(P.word_str(u) + " * " + P.word_str(v) + " (counit)");
            }
        }
    }
    return Verdict::pass();
}

/// S * id = eta eps = id * S on basis words of length <= d.
inline Verdict check_antipode(const HopfStructure& H, std::size_t d) {
    if (!H.has_antipode()) return Verdict::fail("no antipode declared");
    const Presentation& P = H.pres();
    for (const auto& w : H.basis(d)) {
        TensorElement t = H.delta_word(w);
        NcPoly left, right;
        for (const auto& [key, c] : t.terms()) {
            left = left + c * P.mul(H.antipode_word(key[0]), NcPoly::monomial(key[1], Scalar(1)));
            right = right + c * P.mul(NcPoly::monomial(key[0], Scalar(1)), H.antipode_word(key[1]));
        }
        NcPoly expect = H.epsilon_word(w) * NcPoly::unit();
        if (left != expect || right != expect) return Verdict::fail(P.word_str(w));
    }
    return Verdict::pass();
}

/// S(hh') = S(h')S(h): well-definedness of the antimultiplicative extension
/// on every rewrite rule, pointwise on basis pairs up to length d (the pair
/// sweep capped for infinite-dimensional algebras), plus eps(S(h)) = eps(h).
inline Verdict check_antihom(const HopfStructure& H, std::size_t d) {
    if (!H.has_antipode()) return Verdict::fail("no antipode declared");
    const Presentation& P = H.pres();
    if (H.mode() == ExtensionMode::algebra_morphism) {
        for (const auto& rule : P.rules()) {
            if (H.antipode_word(rule.lhs) != H.antipode_apply(rule.rhs))
                return Verdict::fail("rule " + P.word_str(rule.lhs));
        }
    }
    std::size_t pair_d = P.finite_basis() ? d : std::min<std::size_t>(d, 3);
    auto basis = H.basis(pair_d);
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            if (u.size() + v.size() > pair_d) continue;
            NcPoly uv = P.mul(NcPoly::monomial(u, Scalar(1)), NcPoly::monomial(v, Scalar(1)));
            NcPoly lhs = H.antipode_apply(uv);
            NcPoly rhs = P.mul(H.antipode_word(v), H.antipode_word(u));
            if (lhs != rhs) return Verdict::fail(P.word_str(u) + " * " + P.word_str(v));
        }
    }
    for (const auto& u : H.basis(d))
        if (H.epsilon(H.antipode_word(u)) != H.epsilon_word(u))
            return Verdict::fail(P.word_str(u) + " (counit of antipode)");
    return Verdict::pass();
}

/// (S (x) S) Delta h = tau Delta S(h) on basis words of length <= d.
inline Verdict check_anticohom(const HopfStructure& H, std::size_t d) {
    if (!H.has_antipode()) return Verdict::fail("no antipode declared");
    for (const auto& w : H.basis(d)) {
        TensorElement t = H.delta_word(w);
        TensorElement lhs(2);
        for (const auto& [key, c] : t.terms())
            lhs = lhs + c * outer({H.antipode_word(key[0]), H.antipode_word(key[1])});
        TensorElement rhs = switch_legs(H.delta(H.antipode_word(w)), 0, 1);
        if (lhs != rhs) return Verdict::fail(H.pres().word_str(w));
    }
    return Verdict::pass();
}

/// Grouplike basis words: Delta(w) = w (x) w with eps(w) = 1.  Restricted to
/// single basis words; linear combinations are out of scope.
inline std::vector<Word> find_grouplikes(const HopfStructure& H, std::size_t d) {
    std::vector<Word> out;
    for (const auto& w : H.basis(d)) {
        if (H.delta_word(w) == TensorElement::monomial({w, w}, Scalar(1)) &&
            H.epsilon_word(w) == Scalar(1))
            out.push_back(w);
    }
    return out;
}

/// Basis of the space of primitive elements inside the span of basis words
/// of length <= d: solutions of Delta(v) = v (x) 1 + 1 (x) v.
inline std::vector<NcPoly> find_primitives(const HopfStructure& H, std::size_t d) {
    auto basis = H.basis(d);
    std::map<TensorKey, std::size_t, TensorKeyLess> row_index;
    std::vector<std::vector<Scalar>> cols;
    for (const auto& w : basis) {
        TensorElement t = H.delta_word(w);
        t.add_term({w, Word{}}, Scalar(-1));
        t.add_term({Word{}, w}, Scalar(-1));
        std::vector<Scalar>& col = cols.emplace_back();
        for (const auto& [key, c] : t.terms()) {
            auto [it, fresh] = row_index.try_emplace(key, row_index.size());
            if (it->second >= col.size()) col.resize(it->second + 1);
            col[it->second] = c;
        }
    }
    SpanSolver solver(row_index.size());
    for (auto& col : cols) {
        col.resize(row_index.size());
        solver.add_column(col);
    }
    std::vector<NcPoly> out;
    for (const auto& k : solver.kernel_basis()) {
        NcPoly p;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (!k[j].is_zero()) p.add_term(basis[j], k[j]);
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// opposite / co-opposite structures

namespace detail {

/// Reorient the polynomial relation "p = 0" into a length-reducing rule.
inline std::pair<Word, NcPoly> orient_relation(NcPoly p, const Presentation& for_names) {
    if (p.is_zero()) throw std::invalid_argument("cannot orient the zero relation");
    const Word* lead = nullptr;
    for (const auto& [w, c] : p.terms())
        if (!lead || deglex_lt(*lead, w)) lead = &w;
    Word lhs = *lead;
    Scalar c_lead = p.terms().at(lhs);
    NcPoly rhs;
    for (const auto& [w, c] : p.terms()) {
        if (w == lhs) continue;
        rhs.add_term(w, -(c / c_lead));
    }
    for (const auto& [w, c] : rhs.terms())
        if (!deglex_lt(w, lhs))
            throw std::invalid_argument("relation cannot be oriented: tie at " +
                                        for_names.word_str(w));
    return {std::move(lhs), std::move(rhs)};
}

} // namespace detail

/// Opposite bialgebra: reversed multiplication (relations reversed and
/// reoriented), unchanged coproduct.  When an inverse antipode is available
/// it is installed as the antipode of the opposite.
inline HopfStructure opposite(const HopfStructure& H) {
    if (H.mode() != ExtensionMode::algebra_morphism)
        throw std::logic_error("opposite requires algebra-morphism mode");
    const Presentation& P = H.pres();
    std::vector<std::pair<Word, NcPoly>> new_rules;
    for (const auto& rule : P.rules()) {
        NcPoly rel = NcPoly::monomial(reversed(rule.lhs), Scalar(1));
        for (const auto& [w, c] : rule.rhs.terms()) rel.add_term(reversed(w), -c);
        if (rel.is_zero()) continue;
        new_rules.push_back(detail::orient_relation(rel, P));
    }
    Presentation opp(P.gens(), std::move(new_rules), P.grading());
    // convert an old-basis word to its representation in the opposite system
    auto conv = [&opp](const NcPoly& p) {
        NcPoly raw;
        for (const auto& [w, c] : p.terms()) raw.add_term(reversed(w), c);
        return opp.normal_form(raw);
    };
    std::vector<TensorElement> delta;
    for (std::size_t g = 0; g < P.gen_count(); ++g) {
        TensorElement t(2);
        for (const auto& [key, c] : H.delta_table()[g].terms()) {
            TensorElement part = outer({conv(NcPoly::monomial(key[0], Scalar(1))),
                                        conv(NcPoly::monomial(key[1], Scalar(1)))});
            t = t + c * part;
        }
        delta.push_back(std::move(t));
    }
    std::optional<std::vector<NcPoly>> s, s_inv;
    if (H.has_antipode_inverse()) {
        s.emplace();
        for (std::size_t g = 0; g < P.gen_count(); ++g)
            s->push_back(conv((*H.antipode_inverse_table())[g]));
        if (H.antipode_table()) {
            s_inv.emplace();
            for (std::size_t g = 0; g < P.gen_count(); ++g)
                s_inv->push_back(conv((*H.antipode_table())[g]));
        }
    }
    StructureLevel level = s ? StructureLevel::hopf
                             : std::min(H.level(), StructureLevel::bialgebra);
    return HopfStructure(std::move(opp), std::move(delta), H.counit_table(), std::move(s),
                         std::move(s_inv), level);
}

/// Co-opposite bialgebra: flipped coproduct on the same algebra.
inline HopfStructure coopposite(const HopfStructure& H) {
    if (H.mode() != ExtensionMode::algebra_morphism)
        throw std::logic_error("coopposite requires algebra-morphism mode");
    std::vector<TensorElement> delta;
    for (const auto& t : H.delta_table()) delta.push_back(switch_legs(t, 0, 1));
    std::optional<std::vector<NcPoly>> s, s_inv;
    if (H.has_antipode_inverse()) {
        s = *H.antipode_inverse_table();
        if (H.antipode_table()) s_inv = *H.antipode_table();
    }
    StructureLevel level = s ? StructureLevel::hopf
                             : std::min(H.level(), StructureLevel::bialgebra);
    return HopfStructure(H.pres(), std::move(delta), H.counit_table(), std::move(s),
                         std::move(s_inv), level);
}

// ---------------------------------------------------------------------------
// cancellation property

struct CancellationReport {
    Verdict left;  // (H (x) 1) Delta(H) spans
    Verdict right; // Delta(H) (1 (x) H) spans
    bool ok() const { return left.ok && right.ok; }
};

namespace detail {

inline Verdict span_covers(const HopfStructure& H, const std::vector<TensorElement>& span,
                           const std::vector<TensorKey>& targets) {
    const Presentation& P = H.pres();
    bool graded = H.coproduct_leg_graded();
    auto bidegree = [&P](const TensorKey& key) {
        return std::pair<long, long>(P.word_grade(key[0]), P.word_grade(key[1]));
    };
    // group span vectors and targets into bidegree blocks when available;
    // otherwise one dense block
    std::map<std::pair<long, long>, std::vector<const TensorElement*>> blocks;
    std::map<std::pair<long, long>, std::vector<const TensorKey*>> wanted;
    const std::pair<long, long> all{0, 0};
    for (const auto& t : span) {
        if (t.is_zero()) continue;
        blocks[graded ? bidegree(t.terms().begin()->first) : all].push_back(&t);
    }
    for (const auto& key : targets) wanted[graded ? bidegree(key) : all].push_back(&key);
    for (const auto& [deg, keys] : wanted) {
        std::map<TensorKey, std::size_t, TensorKeyLess> row_index;
        std::vector<const TensorElement*> vecs;
        if (auto it = blocks.find(deg); it != blocks.end()) vecs = it->second;
        for (const auto* t : vecs)
            for (const auto& [key, c] : t->terms()) row_index.try_emplace(key, row_index.size());
        for (const auto* key : keys) row_index.try_emplace(*key, row_index.size());
        SpanSolver solver(row_index.size());
        for (const auto* t : vecs) {
            std::vector<Scalar> v(row_index.size());
            for (const auto& [key, c] : t->terms()) v[row_index.at(key)] = c;
            solver.add_column(v);
        }
        for (const auto* key : keys) {
            std::vector<Scalar> v(row_index.size());
            v[row_index.at(*key)] = Scalar(1);
            if (!solver.contains(v))
                return Verdict::fail(P.word_str((*key)[0]) + " (x) " + P.word_str((*key)[1]));
        }
    }
    return Verdict::pass();
}

} // namespace detail

/// Algebraic cancellation property at truncation: every basis tensor u (x) v
/// with |u|+|v| <= d must lie in the span of (w (x) 1) Delta(z) (left side)
/// resp. Delta(z) (1 (x) w) (right side) with |w|+|z| <= d+slack.
inline CancellationReport check_cancellation(const HopfStructure& H, std::size_t d,
                                             std::size_t slack) {
    if (H.level() < StructureLevel::bialgebra)
        throw std::logic_error("cancellation check requires a bialgebra");
    const Presentation& P = H.pres();
    std::vector<const Presentation*> legs{&P, &P};
    auto words = P.basis_up_to(d + slack);
    std::vector<TensorKey> targets;
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > d) continue;
            targets.push_back({u, v});
        }
    std::vector<TensorElement> left_span, right_span;
    for (const auto& w : words) {
        TensorElement w_left = TensorElement::monomial({w, Word{}}, Scalar(1));
        TensorElement w_right = TensorElement::monomial({Word{}, w}, Scalar(1));
        for (const auto& z : words) {
            if (w.size() + z.size() > d + slack) continue;
            TensorElement dz = H.delta_word(z);
            left_span.push_back(tensor_mul(w_left, dz, legs));
            right_span.push_back(tensor_mul(dz, w_right, legs));
        }
    }
    CancellationReport rep;
    rep.left = detail::span_covers(H, left_span, targets);
    rep.right = detail::span_covers(H, right_span, targets);
    return rep;
}

// ---------------------------------------------------------------------------
// convolution algebra Hom(C, A)

/// Linear map from a coalgebra's truncated basis into a presented algebra.
struct LinMap {
    const HopfStructure* source = nullptr; // coalgebra C
    const Presentation* target = nullptr;  // algebra A
    std::map<Word, NcPoly, DeglexLess> values;

    NcPoly apply_word(const Word& w) const {
        auto it = values.find(w);
        if (it == values.end())
            throw std::invalid_argument("LinMap: basis mismatch at " + source->pres().word_str(w));
        return it->second;
    }
    NcPoly apply(const NcPoly& p) const {
        NcPoly acc;
        for (const auto& [w, c] : p.terms()) acc = acc + c * apply_word(w);
        return acc;
    }
};

inline bool linmap_equal(const LinMap& f, const LinMap& g) {
    return f.values == g.values;
}

/// Convolution f * g = mu (f (x) g) Delta.
inline LinMap convolution(const LinMap& f, const LinMap& g) {
    if (f.source != g.source || f.target != g.target)
        throw std::invalid_argument("convolution: mismatched algebras");
    LinMap out{f.source, f.target, {}};
    for (const auto& [w, _] : f.values) {
        if (!g.values.count(w)) throw std::invalid_argument("convolution: basis mismatch");
        TensorElement t = f.source->delta_word(w);
        NcPoly acc;
        for (const auto& [key, c] : t.terms())
            acc = acc + c * f.target->mul(f.apply_word(key[0]), g.apply_word(key[1]));
        out.values[w] = std::move(acc);
    }
    return out;
}

/// Unit of the convolution algebra: eta_A eps_C.
inline LinMap convolution_unit(const HopfStructure& C, const Presentation& A,
                               const std::vector<Word>& basis) {
    LinMap out{&C, &A, {}};
    for (const auto& w : basis) out.values[w] = C.epsilon_word(w) * NcPoly::unit();
    return out;
}

inline LinMap identity_linmap(const HopfStructure& H, std::size_t d) {
    LinMap out{&H, &H.pres(), {}};
    for (const auto& w : H.basis(d)) out.values[w] = NcPoly::monomial(w, Scalar(1));
    return out;
}

inline LinMap antipode_linmap(const HopfStructure& H, std::size_t d) {
    LinMap out{&H, &H.pres(), {}};
    for (const auto& w : H.basis(d)) out.values[w] = H.antipode_word(w);
    return out;
}

} // namespace hgx
