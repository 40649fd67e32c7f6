#pragma once

#include "hgx/hopf.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgx {

/// Right algebra coaction delta: A -> A (x) H, given on generators of A and
/// extended as an algebra morphism.  A left coaction A -> H (x) A is stored
/// right-normalized via the leg flip; its axioms are then the ones of a
/// right coaction of the co-opposite bialgebra, which check_coaction honors.
class Coaction {
public:
    Coaction() = default;
    Coaction(Presentation A, HopfStructure H, std::vector<TensorElement> delta_gen,
             bool left_oriented = false)
        : A_(std::move(A)), H_(std::move(H)), delta_gen_(std::move(delta_gen)),
          left_oriented_(left_oriented) {
        if (delta_gen_.size() != A_.gen_count())
            throw std::invalid_argument("coaction table must cover every generator of A");
    }

    const Presentation& algebra() const { return A_; }
    const HopfStructure& hopf() const { return H_; }
    bool left_oriented() const { return left_oriented_; }

    /// delta on a word, legs (A, H).
    TensorElement apply_word(const Word& w) const {
        TensorElement acc = TensorElement::unit(2);
        std::vector<const Presentation*> legs{&A_, &H_.pres()};
        for (int g : w) acc = tensor_mul(acc, delta_gen_[g], legs);
        return acc;
    }

    TensorElement apply(const NcPoly& p) const {
        TensorElement acc(2);
        for (const auto& [w, c] : p.terms()) acc = acc + c * apply_word(w);
        return acc;
    }

    /// Coproduct used on the H leg of the coassociativity axiom: the flip of
    /// a left coaction coacts for the co-opposite bialgebra.
    TensorElement h_coproduct(const Word& w) const {
        TensorElement t = H_.delta_word(w);
        return left_oriented_ ? switch_legs(t, 0, 1) : t;
    }

private:
    Presentation A_;
    HopfStructure H_;
    std::vector<TensorElement> delta_gen_;
    bool left_oriented_ = false;
};

/// Both coaction axioms plus the algebra-morphism property: rule
/// well-definedness and pointwise delta(uv) = delta(u) delta(v) on basis
/// pairs of combined length <= d.
inline Verdict check_coaction(const Coaction& c, std::size_t d) {
    const Presentation& A = c.algebra();
    const Presentation& HP = c.hopf().pres();
    std::vector<const Presentation*> legs{&A, &HP};
    for (const auto& rule : A.rules()) {
        TensorElement dl = c.apply_word(rule.lhs);
        TensorElement dr = c.apply(rule.rhs);
        if (dl != dr) return Verdict::fail("rule " + A.word_str(rule.lhs));
    }
    auto basis = A.basis_up_to(d);
    auto h_delta = [&](const Word& w) { return c.h_coproduct(w); };
    auto a_delta = [&](const Word& w) { return c.apply_word(w); };
    for (const auto& w : basis) {
        TensorElement t = c.apply_word(w);
        // (delta (x) id) delta = (id (x) Delta) delta
        TensorElement lhs = map_leg(t, 0, a_delta, 1);
        TensorElement rhs = map_leg(t, 1, h_delta, 1);
        if (lhs != rhs) return Verdict::fail(A.word_str(w) + " (coassociativity)");
        // (id (x) eps) delta = id
        NcPoly contracted;
        for (const auto& [key, coef] : t.terms())
            contracted.add_term(key[0], coef * c.hopf().epsilon_word(key[1]));
        if (contracted != NcPoly::monomial(w, Scalar(1)))
            return Verdict::fail(A.word_str(w) + " (counit law)");
    }
    // the morphism property follows from rule well-definedness for the
    // multiplicative extension; sweep pairs fully only at finite dimension
    std::size_t pair_d = A.finite_basis() ? d : std::min<std::size_t>(d, 3);
    auto pair_basis = A.basis_up_to(pair_d);
    for (const auto& u : pair_basis)
        for (const auto& v : pair_basis) {
            if (u.size() + v.size() > pair_d) continue;
            NcPoly uv = A.mul(NcPoly::monomial(u, Scalar(1)), NcPoly::monomial(v, Scalar(1)));
            if (c.apply(uv) != tensor_mul(c.apply_word(u), c.apply_word(v), legs))
                return Verdict::fail(A.word_str(u) + " * " + A.word_str(v) + " (morphism)");
        }
    return Verdict::pass();
}

struct CoinvariantBasis {
    std::size_t degree = 0;
    std::vector<NcPoly> basis;
};

/// Exact kernel of v -> delta(v) - v (x) 1, computed degree by degree on
/// basis words of length <= d and unioned.
inline CoinvariantBasis coinvariants(const Coaction& c, std::size_t d) {
    const Presentation& A = c.algebra();
    CoinvariantBasis out;
    out.degree = d;
    auto all = A.basis_up_to(d);
    for (std::size_t deg = 0; deg <= d; ++deg) {
        std::vector<Word> words;
        for (const auto& w : all)
            if (w.size() == deg) words.push_back(w);
        if (words.empty()) continue;
        std::map<TensorKey, std::size_t, TensorKeyLess> row_index;
        std::vector<TensorElement> images;
        for (const auto& w : words) {
            TensorElement t = c.apply_word(w);
            t.add_term({w, Word{}}, Scalar(-1));
            images.push_back(t);
            for (const auto& [key, coef] : t.terms()) row_index.try_emplace(key, row_index.size());
        }
        SpanSolver solver(row_index.size());
        for (const auto& t : images) {
            std::vector<Scalar> v(row_index.size());
            for (const auto& [key, coef] : t.terms()) v[row_index.at(key)] = coef;
            solver.add_column(v);
        }
        for (const auto& k : solver.kernel_basis()) {
            NcPoly p;
            for (std::size_t j = 0; j < k.size(); ++j)
                if (!k[j].is_zero()) p.add_term(words[j], k[j]);
            out.basis.push_back(std::move(p));
        }
    }
    // re-verify exactly: every returned element is coinvariant
    for (const auto& p : out.basis) {
        TensorElement t = c.apply(p);
        TensorElement expect(2);
        for (const auto& [w, coef] : p.terms()) expect.add_term({w, Word{}}, coef);
        if (t != expect) throw std::logic_error("coinvariant verification failed");
    }
    return out;
}

/// Generator map defining a bialgebra (Hopf) homomorphism pi: H -> Hp.
struct SubgroupMap {
    std::vector<NcPoly> images; // indexed by H generators, values in Hp
};

/// Validates pi as a bialgebra homomorphism (rule preservation, coproduct and
/// counit intertwining on generators; antipode intertwining when both are
/// declared) and returns the induced coaction delta = (id (x) pi) Delta.
inline Coaction induced_coaction(const HopfStructure& H, const HopfStructure& Hp,
                                 const SubgroupMap& pi) {
    const Presentation& P = H.pres();
    const Presentation& Q = Hp.pres();
    if (pi.images.size() != P.gen_count())
        throw std::invalid_argument("subgroup map must cover every generator");
    auto apply_pi_word = [&](const Word& w) {
        NcPoly acc = NcPoly::unit();
        for (int g : w) acc = Q.mul(acc, pi.images[g]);
        return acc;
    };
    auto apply_pi = [&](const NcPoly& p) {
        NcPoly acc;
        for (const auto& [w, coef] : p.terms()) acc = acc + coef * apply_pi_word(w);
        return acc;
    };
    for (const auto& rule : P.rules()) {
        NcPoly img = apply_pi_word(rule.lhs) - apply_pi(rule.rhs);
        if (!img.is_zero())
            throw std::invalid_argument("pi does not preserve rule " + P.word_str(rule.lhs) +
                                        ": image " + img.str(Q));
    }
    std::vector<const Presentation*> qq{&Q, &Q};
    for (std::size_t g = 0; g < P.gen_count(); ++g) {
        // Delta' pi = (pi (x) pi) Delta on generators
        TensorElement lhs = Hp.delta(pi.images[g]);
        TensorElement rhs(2);
        for (const auto& [key, coef] : H.delta_table()[g].terms())
            rhs = rhs + coef * outer({apply_pi_word(key[0]), apply_pi_word(key[1])});
        if (lhs != rhs)
            throw std::invalid_argument("pi fails the coproduct square at generator " +
                                        P.gen_name(static_cast<int>(g)));
        if (Hp.epsilon(pi.images[g]) != H.counit_table()[g])
            throw std::invalid_argument("pi fails the counit triangle at generator " +
                                        P.gen_name(static_cast<int>(g)));
        if (H.has_antipode() && Hp.has_antipode()) {
            NcPoly l = Hp.antipode_apply(pi.images[g]);
            NcPoly r = apply_pi(H.antipode_word({static_cast<int>(g)}));
            if (l != r)
                throw std::invalid_argument("pi fails antipode intertwining at generator " +
                                            P.gen_name(static_cast<int>(g)));
        }
    }
    std::vector<TensorElement> delta;
    for (std::size_t g = 0; g < P.gen_count(); ++g) {
        TensorElement t(2);
        for (const auto& [key, coef] : H.delta_table()[g].terms()) {
            NcPoly img = apply_pi_word(key[1]);
            for (const auto& [w, c2] : img.terms()) t.add_term({key[0], w}, coef * c2);
        }
        delta.push_back(std::move(t));
    }
    return Coaction(P, Hp, std::move(delta));
}

/// Coaction of a grouplike-spanned group bialgebra F[G] on a G-graded
/// algebra: delta(a) = a (x) g for a homogeneous of grade g.
inline Coaction graded_coaction(const Presentation& A, const HopfStructure& FG,
                                const std::vector<Word>& grade_of_gen) {
    if (grade_of_gen.size() != A.gen_count())
        throw std::invalid_argument("grade map must cover every generator");
    const Presentation& G = FG.pres();
    auto finite = G.basis_up_to(64);
    for (const auto& w : finite)
        if (FG.delta_word(w) != TensorElement::monomial({w, w}, Scalar(1)) ||
            FG.epsilon_word(w) != Scalar(1))
            throw std::invalid_argument("grading bialgebra is not grouplike-spanned at " +
                                        G.word_str(w));
    auto grade_word = [&](const Word& w) {
        NcPoly acc = NcPoly::unit();
        for (int g : w) acc = G.mul(acc, NcPoly::monomial(grade_of_gen[g], Scalar(1)));
        if (acc.term_count() != 1 || !(acc.terms().begin()->second == Scalar(1)))
            throw std::logic_error("grade of a word is not a group element");
        return acc.terms().begin()->first;
    };
    for (const auto& rule : A.rules()) {
        if (rule.rhs.is_zero()) continue;
        Word g = grade_word(rule.lhs);
        for (const auto& [w, coef] : rule.rhs.terms())
            if (grade_word(w) != g)
                throw std::invalid_argument("inhomogeneous rule " + A.word_str(rule.lhs));
    }
    std::vector<TensorElement> delta;
    for (std::size_t g = 0; g < A.gen_count(); ++g)
        delta.push_back(TensorElement::monomial(
            {Word{static_cast<int>(g)}, grade_of_gen[g]}, Scalar(1)));
    return Coaction(A, FG, std::move(delta));
}

} // namespace hgx
