#pragma once

#include "hgx/matrix.hpp"
#include "hgx/tensor.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgx {

/// Truncated balanced tensor product A (x)_B A: the span of word pairs
/// (u, v) with |u|+|v| <= bound, modulo u m (x) v - u (x) m v for m running
/// over the multiplicative closure of the B generators inside the
/// truncation.  Quotient coordinates are the non-pivot pairs of the reduced
/// relation span.
class BalancedSpace {
public:
    BalancedSpace() = default;

    BalancedSpace(const Presentation& A, std::vector<NcPoly> b_gens, std::size_t d,
                  std::size_t slack)
        : A_(&A), degree_(d), slack_(slack), bound_(d + slack) {
        auto words = A.basis_up_to(bound_);
        for (const auto& u : words)
            for (const auto& v : words) {
                if (u.size() + v.size() > bound_) continue;
                index_.try_emplace({u, v}, pairs_.size());
                pairs_.push_back({u, v});
            }
        build_b_monomials(std::move(b_gens));
        build_relations();
    }

    const Presentation& algebra() const { return *A_; }
    std::size_t degree() const { return degree_; }
    std::size_t slack() const { return slack_; }
    std::size_t bound() const { return bound_; }
    std::size_t raw_dim() const { return pairs_.size(); }
    std::size_t dimension() const { return free_pairs_.size(); }

    const std::vector<std::pair<Word, Word>>& pairs() const { return pairs_; }
    const std::vector<std::size_t>& free_pairs() const { return free_pairs_; }
    const std::vector<NcPoly>& b_monomials() const { return b_monomials_; }
    const std::vector<TensorElement>& relation_generators() const { return relation_gens_; }

    std::pair<Word, Word> representative(std::size_t coord) const {
        return pairs_[free_pairs_[coord]];
    }

    /// Quotient coordinates of a raw arity-2 element of A (x) A.
    std::vector<Scalar> project(const TensorElement& raw) const {
        if (raw.arity() != 2) throw std::invalid_argument("project expects arity 2");
        std::vector<Scalar> full(pairs_.size());
        std::vector<const Presentation*> legs{A_, A_};
        TensorElement nf = tensor_mul(raw, TensorElement::unit(2), legs);
        for (const auto& [key, c] : nf.terms()) {
            auto it = index_.find({key[0], key[1]});
            if (it == index_.end())
                throw std::invalid_argument("element exceeds the balanced truncation: " +
                                            A_->word_str(key[0]) + " (x) " + A_->word_str(key[1]));
            full[it->second] += c;
        }
        relations_.reduce(full);
        std::vector<Scalar> out(free_pairs_.size());
        for (std::size_t k = 0; k < free_pairs_.size(); ++k) out[k] = full[free_pairs_[k]];
        return out;
    }

    std::string coords_str(const std::vector<Scalar>& coords) const {
        std::string out;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k].is_zero()) continue;
            const auto& [u, v] = representative(k);
            std::string mono = A_->word_str(u) + " (x)_B " + A_->word_str(v);
            std::string c = coords[k].str();
            std::string term;
            if (c == "1") term = mono;
            else if (c == "-1") term = "-" + mono;
            else {
                bool composite = c.find('+') != std::string::npos ||
                                 c.find('-', 1) != std::string::npos ||
                                 c.find('/') != std::string::npos;
                term = (composite ? "(" + c + ")" : c) + "*" + mono;
            }
            if (out.empty()) out = term;
            else if (term[0] == '-') out += term;
            else out += "+" + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void build_b_monomials(std::vector<NcPoly> gens) {
        // multiplicative closure of the B generators inside the truncation,
        // kept linearly independent modulo the unit
        auto words = A_->basis_up_to(bound_);
        std::map<Word, std::size_t, DeglexLess> idx;
        for (const auto& w : words) idx.try_emplace(w, idx.size());
        auto vec = [&](const NcPoly& p) {
            std::vector<Scalar> v(idx.size());
            for (const auto& [w, c] : p.terms()) v[idx.at(w)] = c;
            return v;
        };
        RowSpan span(idx.size());
        span.insert(vec(NcPoly::unit()));
        std::vector<NcPoly> gen_list;
        for (auto& g : gens) {
            NcPoly nf = A_->normal_form(g);
            if (!nf.is_zero() && nf.filtration_degree() <= bound_)
                gen_list.push_back(std::move(nf));
        }
        std::vector<NcPoly> frontier;
        for (const auto& g : gen_list)
            if (span.insert(vec(g))) {
                b_monomials_.push_back(g);
                frontier.push_back(g);
            }
        while (!frontier.empty()) {
            std::vector<NcPoly> fresh;
            for (const auto& m : frontier)
                for (const auto& g : gen_list) {
                    NcPoly p = A_->mul(m, g);
                    if (p.is_zero() || p.filtration_degree() > bound_) continue;
                    if (span.insert(vec(p))) {
                        b_monomials_.push_back(p);
                        fresh.push_back(p);
                    }
                }
            frontier = std::move(fresh);
        }
    }

    void build_relations() {
        relations_ = RowSpan(pairs_.size());
        auto words = A_->basis_up_to(bound_);
        for (const auto& m : b_monomials_) {
            std::size_t fm = m.filtration_degree();
            for (const auto& u : words) {
                if (u.size() + fm > bound_) continue;
                NcPoly um = A_->mul(NcPoly::monomial(u, Scalar(1)), m);
                for (const auto& v : words) {
                    if (u.size() + fm + v.size() > bound_) continue;
                    NcPoly mv = A_->mul(m, NcPoly::monomial(v, Scalar(1)));
                    TensorElement rel(2);
                    for (const auto& [w, c] : um.terms()) rel.add_term({w, v}, c);
                    for (const auto& [w, c] : mv.terms()) rel.add_term({u, w}, -c);
                    if (rel.is_zero()) continue;
                    std::vector<Scalar> vec(pairs_.size());
                    bool inside = true;
                    for (const auto& [key, c] : rel.terms()) {
                        auto it = index_.find({key[0], key[1]});
                        if (it == index_.end()) {
                            inside = false;
                            break;
                        }
                        vec[it->second] += c;
                    }
                    if (!inside) continue;
                    if (relations_.insert(vec)) relation_gens_.push_back(rel);
                }
            }
        }
        std::vector<bool> pivot(pairs_.size(), false);
        for (std::size_t lead : relations_.leads()) pivot[lead] = true;
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if (!pivot[k]) free_pairs_.push_back(k);
    }

    const Presentation* A_ = nullptr;
    std::size_t degree_ = 0, slack_ = 0, bound_ = 0;
    std::vector<std::pair<Word, Word>> pairs_;
    std::map<std::pair<Word, Word>, std::size_t> index_;
    std::vector<NcPoly> b_monomials_;
    RowSpan relations_{0};
    std::vector<TensorElement> relation_gens_;
    std::vector<std::size_t> free_pairs_;
};

} // namespace hgx
