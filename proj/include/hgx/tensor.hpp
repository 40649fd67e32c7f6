#pragma once

#include "hgx/presentation.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgx {

/// k-fold tensor of normal-form words.
using TensorKey = std::vector<Word>;

struct TensorKeyLess {
    bool operator()(const TensorKey& a, const TensorKey& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (DeglexLess{}(a[k], b[k])) return true;
            if (DeglexLess{}(b[k], a[k])) return false;
        }
        return false;
    }
};

/// Finite sum of scalar-weighted k-fold tensors of normal-form words; the
/// carrier of all Sweedler-notation computations.
class TensorElement {
public:
    using Terms = std::map<TensorKey, Scalar, TensorKeyLess>;

    TensorElement() : arity_(0) {}
    explicit TensorElement(std::size_t arity) : arity_(arity) {}

    static TensorElement unit(std::size_t arity) {
        TensorElement t(arity);
        t.add_term(TensorKey(arity), Scalar(1));
        return t;
    }
    static TensorElement monomial(TensorKey key, Scalar c) {
        TensorElement t(key.size());
        t.add_term(std::move(key), std::move(c));
        return t;
    }

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TensorKey& key, const Scalar& c) {
        if (key.size() != arity_) throw std::invalid_argument("tensor arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("tensor arity mismatch");
        TensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("tensor arity mismatch");
        TensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    friend TensorElement operator*(const Scalar& c, const TensorElement& a) {
        TensorElement r(a.arity_);
        for (const auto& [k, x] : a.terms_) r.add_term(k, c * x);
        return r;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) {
        return !(a == b);
    }

    std::size_t filtration_degree() const {
        std::size_t d = 0;
        for (const auto& [k, c] : terms_) {
            std::size_t s = 0;
            for (const auto& w : k) s += w.size();
            d = std::max(d, s);
        }
        return d;
    }

    std::string str(const std::vector<const Presentation*>& legs) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            std::string mono;
            for (std::size_t l = 0; l < key.size(); ++l) {
                if (l) mono += "(x)";
                mono += legs[l]->word_str(key[l]);
            }
            std::string coef = c.str();
            std::string term;
            if (coef == "1") term = mono;
            else if (coef == "-1") term = "-" + mono;
            else {
                bool composite = coef.find('+') != std::string::npos ||
                                 coef.find('-', 1) != std::string::npos ||
                                 coef.find('/') != std::string::npos;
                term = (composite ? "(" + coef + ")" : coef) + "*" + mono;
            }
            if (out.empty()) out = term;
            else if (term[0] == '-') out += term;
            else out += "+" + term;
        }
        return out;
    }

private:
    std::size_t arity_;
    Terms terms_;
};

/// Componentwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2, each leg
/// normal-formed in its own presentation.
inline TensorElement tensor_mul(const TensorElement& s, const TensorElement& t,
                                const std::vector<const Presentation*>& legs) {
    if (s.arity() != t.arity()) throw std::invalid_argument("tensor arity mismatch");
    if (legs.size() != s.arity()) throw std::invalid_argument("leg presentation count mismatch");
    TensorElement out(s.arity());
    for (const auto& [ka, ca] : s.terms()) {
        for (const auto& [kb, cb] : t.terms()) {
            // per-leg normal forms, multiplied out into tensor terms
            std::vector<NcPoly> parts(s.arity());
            for (std::size_t l = 0; l < s.arity(); ++l)
                parts[l] = legs[l]->normal_form(
                    NcPoly::monomial(concat(ka[l], kb[l]), Scalar(1)));
            // distribute
            std::vector<std::pair<TensorKey, Scalar>> acc{{TensorKey{}, ca * cb}};
            for (std::size_t l = 0; l < s.arity(); ++l) {
                std::vector<std::pair<TensorKey, Scalar>> next;
                for (const auto& [key, coef] : acc)
                    for (const auto& [w, c] : parts[l].terms()) {
                        TensorKey nk = key;
                        nk.push_back(w);
                        next.emplace_back(std::move(nk), coef * c);
                    }
                acc = std::move(next);
            }
            for (auto& [key, coef] : acc) out.add_term(key, coef);
        }
    }
    return out;
}

/// Exchange of legs i and j (0-based); an involution.
inline TensorElement switch_legs(const TensorElement& t, std::size_t i, std::size_t j) {
    if (i >= t.arity() || j >= t.arity()) throw std::out_of_range("switch: leg index out of range");
    TensorElement out(t.arity());
    for (const auto& [key, c] : t.terms()) {
        TensorKey nk = key;
        std::swap(nk[i], nk[j]);
        out.add_term(nk, c);
    }
    return out;
}

/// Outer product of polynomials, one per leg.
inline TensorElement outer(const std::vector<NcPoly>& polys) {
    TensorElement out(polys.size());
    std::vector<std::pair<TensorKey, Scalar>> acc{{TensorKey{}, Scalar(1)}};
    for (const auto& p : polys) {
        std::vector<std::pair<TensorKey, Scalar>> next;
        for (const auto& [key, coef] : acc)
            for (const auto& [w, c] : p.terms()) {
                TensorKey nk = key;
                nk.push_back(w);
                next.emplace_back(std::move(nk), coef * c);
            }
        acc = std::move(next);
    }
    for (auto& [key, coef] : acc) out.add_term(key, coef);
    return out;
}

/// Apply a linear map given on single legs to leg `leg`, keeping the others.
template <typename F>
TensorElement map_leg(const TensorElement& t, std::size_t leg, F&& f, std::size_t out_arity_delta = 0) {
    TensorElement out(t.arity() + out_arity_delta);
    for (const auto& [key, c] : t.terms()) {
        TensorElement img = f(key[leg]); // arity 1 + delta
        for (const auto& [ik, ic] : img.terms()) {
            TensorKey nk;
            nk.reserve(out.arity());
            for (std::size_t l = 0; l < key.size(); ++l) {
                if (l == leg) nk.insert(nk.end(), ik.begin(), ik.end());
                else nk.push_back(key[l]);
            }
            out.add_term(nk, c * ic);
        }
    }
    return out;
}

} // namespace hgx
