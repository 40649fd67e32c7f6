#pragma once

#include "hgx/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgx {

/// Dense polynomial in q over Q(i). Coefficient k is the coefficient of q^k;
/// no trailing zero coefficients are stored.
struct QPoly {
    std::vector<GaussRat> c;

    QPoly() = default;
    explicit QPoly(GaussRat a) {
        if (!a.is_zero()) c.push_back(std::move(a));
    }

    static QPoly variable() {
        QPoly p;
        p.c = {GaussRat(0), GaussRat(1)};
        return p;
    }
    static QPoly one() { return QPoly(GaussRat(1)); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    const GaussRat& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t k = 0; k < r.c.size(); ++k) {
            if (k < a.c.size()) r.c[k] += a.c[k];
            if (k < b.c.size()) r.c[k] += b.c[k];
        }
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t k = 0; k < r.c.size(); ++k) {
            if (k < a.c.size()) r.c[k] += a.c[k];
            if (k < b.c.size()) r.c[k] -= b.c[k];
        }
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a) {
        QPoly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        QPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, GaussRat());
        for (std::size_t j = 0; j < a.c.size(); ++j) {
            if (a.c[j].is_zero()) continue;
            for (std::size_t k = 0; k < b.c.size(); ++k)
                r.c[j + k] += a.c[j] * b.c[k];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Euclidean division, valid since Q(i) is a field.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        quo = QPoly();
        rem = a;
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            GaussRat f = rem.lead() / b.lead();
            if (quo.c.size() < static_cast<std::size_t>(shift) + 1)
                quo.c.resize(shift + 1);
            quo.c[shift] += f;
            for (std::size_t k = 0; k < b.c.size(); ++k)
                rem.c[k + shift] -= f * b.c[k];
            rem.trim();
        }
        quo.trim();
    }

    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            GaussRat l = a.lead();
            for (auto& x : a.c) x = x / l;
        }
        return a;
    }

    GaussRat eval(const GaussRat& v) const {
        GaussRat acc;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * v + c[k];
        return acc;
    }

    std::string str() const;
};

inline std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        std::string coef = c[k].str();
        bool composite = coef.find('+') != std::string::npos ||
                         coef.find('-', 1) != std::string::npos;
        std::string term;
        if (k == 0) {
            term = composite ? "(" + coef + ")" : coef;
        } else {
            std::string pow = (k == 1) ? "q" : "q^" + std::to_string(k);
            if (coef == "1") term = pow;
            else if (coef == "-1") term = "-" + pow;
            else if (composite) term = "(" + coef + ")*" + pow;
            else term = coef + "*" + pow;
        }
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

/// Scalar of the ground field Q(i)(q): rational functions in the formal
/// parameter q with Gaussian-rational coefficients.  Canonical form: the
/// fraction is reduced and the denominator is monic, so equality of values
/// is equality of representations.
class Scalar {
public:
    Scalar() : num_(), den_(QPoly::one()) {}
    Scalar(long n) : num_(GaussRat(n)), den_(QPoly::one()) {}
    Scalar(GaussRat a) : num_(std::move(a)), den_(QPoly::one()) {}
    Scalar(QPoly n, QPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Scalar q() { return Scalar(QPoly::variable(), QPoly::one()); }
    static Scalar q_inverse() { return Scalar(QPoly::one(), QPoly::variable()); }
    static Scalar unit_i() { return Scalar(GaussRat::unit_i()); }
    static Scalar from_int(long n) { return Scalar(n); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly::one() && den_ == QPoly::one(); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in Q(i)(q)");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    Scalar inverse() const { return Scalar(1) / *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Exact substitution q := v.  Throws on a pole.
    GaussRat eval_q(const GaussRat& v) const {
        GaussRat d = den_.eval(v);
        if (d.is_zero()) throw std::domain_error("pole of scalar at the given q value");
        return num_.eval(v) / d;
    }

    std::string str() const {
        if (den_ == QPoly::one()) return num_.str();
        std::string n = num_.str();
        if (n.find('+') != std::string::npos || n.find('-', 1) != std::string::npos ||
            n.find('*') != std::string::npos)
            n = "(" + n + ")";
        std::string d = den_.str();
        if (d.find('+') != std::string::npos || d.find('-', 1) != std::string::npos ||
            d.find('*') != std::string::npos)
            d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator in Q(i)(q)");
        if (num_.is_zero()) {
            den_ = QPoly::one();
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            QPoly q, r;
            QPoly::divmod(num_, g, q, r);
            num_ = q;
            QPoly::divmod(den_, g, q, r);
            den_ = q;
        }
        GaussRat l = den_.lead();
        if (!l.is_one()) {
            for (auto& x : num_.c) x = x / l;
            for (auto& x : den_.c) x = x / l;
        }
    }

    QPoly num_;
    QPoly den_;
};

enum class ScalarOp { add, mul, sub, div };

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::div: return a / b;
    }
    throw std::logic_error("bad scalar op");
}

} // namespace hgx
