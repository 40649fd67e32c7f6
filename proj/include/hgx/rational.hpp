#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hgx {

using BigRat = boost::multiprecision::cpp_rational;

/// Element of Q(i): a + b*i with arbitrary-precision rational a, b.
struct GaussRat {
    BigRat re{0};
    BigRat im{0};

    GaussRat() = default;
    GaussRat(long n) : re(n) {}
    GaussRat(BigRat r) : re(std::move(r)) {}
    GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(BigRat(0), BigRat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        BigRat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRat& operator+=(const GaussRat& b) { *this = *this + b; return *this; }
    GaussRat& operator-=(const GaussRat& b) { *this = *this - b; return *this; }
    GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }
    GaussRat& operator/=(const GaussRat& b) { *this = *this / b; return *this; }

    GaussRat conj() const { return {re, -im}; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
    // total order used only for deterministic printing / pivot choice
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const;
};

inline std::string rat_str(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::string imag;
    if (im == 1) imag = "i";
    else if (im == -1) imag = "-i";
    else imag = rat_str(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return rat_str(re) + "+" + imag;
    return rat_str(re) + imag;
}

} // namespace hgx
