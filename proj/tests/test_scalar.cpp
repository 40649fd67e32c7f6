#include <catch2/catch_amalgamated.hpp>

#include "hgx/scalar.hpp"

#include <random>

using namespace hgx;

namespace {

Scalar q() { return Scalar::q(); }

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-4, 4);
    auto rand_poly = [&](bool nonzero) {
        QPoly p;
        for (int k = 0; k <= 2; ++k) {
            GaussRat c(BigRat(small(rng)), BigRat(small(rng)));
            if (!c.is_zero()) {
                if (p.c.size() < static_cast<std::size_t>(k) + 1) p.c.resize(k + 1);
                p.c[k] = c;
            }
        }
        p.trim();
        if (nonzero && p.is_zero()) p = QPoly(GaussRat(1));
        return p;
    };
    return Scalar(rand_poly(false), rand_poly(true));
}

} // namespace

TEST_CASE("i squared is -1") {
    Scalar i = Scalar::unit_i();
    CHECK(scalar_arith(i, i, ScalarOp::mul) == Scalar(-1));
}

TEST_CASE("canonical form is monic and reduced") {
    // 1/(q - q^-1) entered as q-polynomials equals q/(q^2 - 1), monic denominator
    Scalar v = Scalar(1) / (q() - q().inverse());
    Scalar expected(QPoly::variable(), QPoly::variable() * QPoly::variable() - QPoly::one());
    CHECK(v == expected);
    CHECK(v.den().lead().is_one());
    // canonical-form idempotence: re-normalizing changes nothing
    CHECK(Scalar(v.num(), v.den()) == v);
}

TEST_CASE("exact evaluation at rational points") {
    Scalar s = q() - q().inverse();
    CHECK(s.eval_q(GaussRat(2)) == GaussRat(BigRat(3, 2)));
    CHECK(Scalar(q() * q()).eval_q(GaussRat(3)) == GaussRat(9));
    // (q - q^-1) at q = i: i - 1/i = 2i
    CHECK(s.eval_q(GaussRat::unit_i()) == GaussRat(BigRat(0), BigRat(2)));
}

TEST_CASE("pole detection") {
    Scalar s = q() / (q() - Scalar(1));
    CHECK_THROWS_AS(s.eval_q(GaussRat(1)), std::domain_error);
    CHECK_THROWS_AS(scalar_arith(Scalar(1), Scalar(0), ScalarOp::div), std::domain_error);
}

TEST_CASE("field axioms on randomized scalars") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK(a / a == Scalar(1));
        }
        CHECK(a - a == Scalar(0));
    }
}

TEST_CASE("powers including negative exponents") {
    CHECK(q().pow(3) * q().pow(-3) == Scalar(1));
    CHECK(Scalar::unit_i().pow(4) == Scalar(1));
    CHECK(q().pow(-1) == Scalar::q_inverse());
}
