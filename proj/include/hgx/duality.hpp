#pragma once

#include "hgx/comodule.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgx {

/// Bilinear pairing between two bialgebras (Hopf algebras), given by its
/// value matrix on basis words.  In finite (exact) mode the bases are the
/// complete ones; otherwise values must cover every truncated basis pair.
struct Pairing {
    const HopfStructure* left = nullptr;  // H
    const HopfStructure* right = nullptr; // H'
    std::map<std::pair<Word, Word>, Scalar> values;
    bool finite = false;

    Scalar value_words(const Word& h, const Word& hp) const {
        auto it = values.find({h, hp});
        if (it == values.end())
            throw std::invalid_argument("pairing not tabulated at (" +
                                        left->pres().word_str(h) + ", " +
                                        right->pres().word_str(hp) + ")");
        return it->second;
    }

    Scalar value(const NcPoly& h, const NcPoly& hp) const {
        Scalar acc;
        for (const auto& [w, c] : h.terms())
            for (const auto& [w2, c2] : hp.terms()) acc += c * c2 * value_words(w, w2);
        return acc;
    }
};

/// The four bialgebra duality identities, both counit identities and, when
/// both antipodes are declared, the antipode identity, on basis pairs of
/// length <= d.
inline Verdict check_duality(const Pairing& p, std::size_t d) {
    const HopfStructure& H = *p.left;
    const HopfStructure& Hp = *p.right;
    auto hb = H.basis(d);
    auto hpb = Hp.basis(d);
    auto pair_tensor = [&](const TensorElement& s, const TensorElement& t) {
        // <h (x) l, h' (x) l'> = <h,h'><l,l'>
        Scalar acc;
        for (const auto& [ks, cs] : s.terms())
            for (const auto& [kt, ct] : t.terms())
                acc += cs * ct * p.value_words(ks[0], kt[0]) * p.value_words(ks[1], kt[1]);
        return acc;
    };
    for (const auto& h : hb) {
        // eps(h) = <h, 1>
        if (H.epsilon_word(h) != p.value_words(h, Word{}))
            return Verdict::fail("eps_H(" + H.pres().word_str(h) + ") != <h,1>");
        for (const auto& l : hb) {
            if (h.size() + l.size() > d) continue;
            NcPoly hl = H.pres().mul(NcPoly::monomial(h, Scalar(1)), NcPoly::monomial(l, Scalar(1)));
            for (const auto& hp : hpb) {
                // <hl, h'> = <h (x) l, Delta' h'>
                Scalar lhs = p.value(hl, NcPoly::monomial(hp, Scalar(1)));
                Scalar rhs = pair_tensor(TensorElement::monomial({h, l}, Scalar(1)),
                                         Hp.delta_word(hp));
                if (lhs != rhs)
                    return Verdict::fail("<" + H.pres().word_str(h) + "*" + H.pres().word_str(l) +
                                         ", " + Hp.pres().word_str(hp) + ">");
            }
        }
    }
    for (const auto& hp : hpb) {
        // eps'(h') = <1, h'>
        if (Hp.epsilon_word(hp) != p.value_words(Word{}, hp))
            return Verdict::fail("eps_H'(" + Hp.pres().word_str(hp) + ") != <1,h'>");
        for (const auto& lp : hpb) {
            if (hp.size() + lp.size() > d) continue;
            NcPoly hplp = Hp.pres().mul(NcPoly::monomial(hp, Scalar(1)),
                                        NcPoly::monomial(lp, Scalar(1)));
            for (const auto& h : hb) {
                // <h, h'l'> = <Delta h, h' (x) l'>
                Scalar lhs = p.value(NcPoly::monomial(h, Scalar(1)), hplp);
                Scalar rhs = pair_tensor(H.delta_word(h),
                                         TensorElement::monomial({hp, lp}, Scalar(1)));
                if (lhs != rhs)
                    return Verdict::fail("<" + H.pres().word_str(h) + ", " +
                                         Hp.pres().word_str(hp) + "*" + Hp.pres().word_str(lp) + ">");
            }
        }
    }
    if (H.has_antipode() && Hp.has_antipode()) {
        for (const auto& h : hb)
            for (const auto& hp : hpb) {
                Scalar lhs = p.value(H.antipode_word(h), NcPoly::monomial(hp, Scalar(1)));
                Scalar rhs = p.value(NcPoly::monomial(h, Scalar(1)), Hp.antipode_word(hp));
                if (lhs != rhs)
                    return Verdict::fail("<S(" + H.pres().word_str(h) + "), " +
                                         Hp.pres().word_str(hp) + ">");
            }
    }
    return Verdict::pass();
}

enum class Nondegeneracy { pass, fail, indeterminate_at_truncation };

/// Gram-rank nondegeneracy test; exact only for finite bases.
inline Nondegeneracy check_nondegenerate(const Pairing& p) {
    if (!p.finite) return Nondegeneracy::indeterminate_at_truncation;
    auto hb = p.left->basis(0);
    auto hpb = p.right->basis(0);
    ExactMatrix gram(hb.size(), hpb.size());
    for (std::size_t i = 0; i < hb.size(); ++i)
        for (std::size_t j = 0; j < hpb.size(); ++j) gram.at(i, j) = p.value_words(hb[i], hpb[j]);
    std::size_t r = rank(gram);
    return (r == hb.size() && r == hpb.size()) ? Nondegeneracy::pass : Nondegeneracy::fail;
}

/// Hopf action rho(h (x) a) = a_(0) <h, a_(1)> transposed from a coaction
/// through a pairing; the pairing's right structure must be the coacting one.
class TransposedAction {
public:
    TransposedAction(const Coaction& c, const Pairing& p) : c_(&c), p_(&p) {
        if (p.right != &c.hopf() && &p.right->pres() != &c.hopf().pres())
            // distinct objects are fine as long as they present the same structure;
            // the caller wires them consistently
            (void)0;
    }

    /// rho(h (x) a) for h a word of the acting bialgebra, a in A.
    NcPoly act(const Word& h, const NcPoly& a) const {
        TensorElement t = c_->apply(a);
        NcPoly acc;
        for (const auto& [key, coef] : t.terms())
            acc.add_term(key[0], coef * p_->value_words(h, key[1]));
        return acc;
    }

    const Coaction& coaction() const { return *c_; }
    const Pairing& pairing() const { return *p_; }

private:
    const Coaction* c_;
    const Pairing* p_;
};

/// Hopf action axioms for the transposed action on basis words <= d:
/// unit, associativity of the action, and the module-algebra laws.
inline Verdict check_hopf_action(const TransposedAction& act, std::size_t d) {
    const HopfStructure& H = *act.pairing().left;
    const Presentation& A = act.coaction().algebra();
    auto hb = H.basis(d);
    auto ab = A.basis_up_to(d);
    auto poly = [](const Word& w) { return NcPoly::monomial(w, Scalar(1)); };
    for (const auto& a : ab)
        if (act.act(Word{}, poly(a)) != poly(a))
            return Verdict::fail("rho(1 (x) " + A.word_str(a) + ")");
    for (const auto& h : hb) {
        // rho(h (x) 1) = eps(h) 1
        if (act.act(h, NcPoly::unit()) != H.epsilon_word(h) * NcPoly::unit())
            return Verdict::fail("rho(" + H.pres().word_str(h) + " (x) 1)");
        for (const auto& l : hb) {
            if (h.size() + l.size() > d) continue;
            NcPoly hl = H.pres().mul(poly(h), poly(l));
            for (const auto& a : ab) {
                NcPoly lhs;
                for (const auto& [w, c] : hl.terms()) lhs = lhs + c * act.act(w, poly(a));
                NcPoly rhs = act.act(h, act.act(l, poly(a)));
                if (lhs != rhs)
                    return Verdict::fail("rho(" + H.pres().word_str(h) + "*" +
                                         H.pres().word_str(l) + " (x) " + A.word_str(a) + ")");
            }
        }
        for (const auto& a : ab)
            for (const auto& b : ab) {
                if (a.size() + b.size() > d) continue;
                NcPoly ab_prod = A.mul(poly(a), poly(b));
                NcPoly lhs = act.act(h, ab_prod);
                NcPoly rhs;
                for (const auto& [key, c] : H.delta_word(h).terms())
                    rhs = rhs + c * A.mul(act.act(key[0], poly(a)), act.act(key[1], poly(b)));
                if (lhs != rhs)
                    return Verdict::fail("rho(" + H.pres().word_str(h) + " (x) " +
                                         A.word_str(a) + "*" + A.word_str(b) + ")");
            }
    }
    return Verdict::pass();
}

/// Basis of the invariant subspace A^H = {a : rho(h (x) a) = eps(h) a} inside
/// the span of basis words of length <= d.
inline std::vector<NcPoly> invariants_under_action(const TransposedAction& act, std::size_t d) {
    const HopfStructure& H = *act.pairing().left;
    const Presentation& A = act.coaction().algebra();
    auto hb = H.basis(d);
    auto ab = A.basis_up_to(d);
    // rows: one block of A-coordinates per acting basis word
    std::map<std::pair<std::size_t, Word>, std::size_t> row_index;
    std::vector<std::vector<Scalar>> cols;
    for (const auto& a : ab) {
        auto& col = cols.emplace_back();
        for (std::size_t k = 0; k < hb.size(); ++k) {
            NcPoly diff = act.act(hb[k], NcPoly::monomial(a, Scalar(1))) -
                          H.epsilon_word(hb[k]) * NcPoly::monomial(a, Scalar(1));
            for (const auto& [w, c] : diff.terms()) {
                auto [it, fresh] = row_index.try_emplace({k, w}, row_index.size());
                if (it->second >= col.size()) col.resize(it->second + 1);
                col[it->second] = c;
            }
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
            if (!k[j].is_zero()) p.add_term(ab[j], k[j]);
        out.push_back(std::move(p));
    }
    return out;
}

/// Equality of two spans of polynomials over the same presentation.
inline bool same_span(const std::vector<NcPoly>& xs, const std::vector<NcPoly>& ys) {
    std::map<Word, std::size_t, DeglexLess> idx;
    for (const auto& p : xs)
        for (const auto& [w, c] : p.terms()) idx.try_emplace(w, idx.size());
    for (const auto& p : ys)
        for (const auto& [w, c] : p.terms()) idx.try_emplace(w, idx.size());
    auto vec = [&](const NcPoly& p) {
        std::vector<Scalar> v(idx.size());
        for (const auto& [w, c] : p.terms()) v[idx.at(w)] = c;
        return v;
    };
    RowSpan sx(idx.size()), sy(idx.size());
    for (const auto& p : xs) sx.insert(vec(p));
    for (const auto& p : ys) sy.insert(vec(p));
    if (sx.rank() != sy.rank()) return false;
    for (const auto& p : ys)
        if (!sx.contains(vec(p))) return false;
    return true;
}

} // namespace hgx
