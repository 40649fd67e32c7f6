#include <catch2/catch_amalgamated.hpp>

#include "hgx/matrix.hpp"

#include <random>

using namespace hgx;

namespace {

ExactMatrix from_ints(std::size_t r, std::size_t c, const std::vector<long>& vals) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(vals[i * c + j]);
    return m;
}

} // namespace

TEST_CASE("rref of a rank-1 matrix") {
    ExactMatrix m = from_ints(2, 2, {1, 1, 1, 1});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    // kernel spanned by (1, -1)
    CHECK(k[0][0] * Scalar(-1) == k[0][1]);
}

TEST_CASE("identity matrix has full rank and empty kernel") {
    ExactMatrix m = ExactMatrix::identity(4);
    CHECK(rank(m) == 4);
    CHECK(kernel(m).empty());
    auto x = solve(m, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(1));
    CHECK((*x)[1] == Scalar(0));
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> small(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial * 2) % 6;
        std::vector<long> vals(r * c);
        for (auto& v : vals) v = small(rng);
        ExactMatrix m = from_ints(r, c, vals);
        RrefResult red = rref(m);
        RrefResult twice = rref(red.matrix);
        CHECK(twice.matrix == red.matrix);
        CHECK(red.rank + kernel(m).size() == c);
        for (const auto& v : kernel(m)) {
            // m v = 0 exactly
            for (std::size_t i = 0; i < r; ++i) {
                Scalar acc;
                for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("solve reports inconsistency") {
    ExactMatrix m = from_ints(2, 1, {1, 1});
    CHECK_FALSE(solve(m, {Scalar(1), Scalar(2)}).has_value());
    CHECK(solve(m, {Scalar(3), Scalar(3)}).has_value());
}

TEST_CASE("kernel of the zero map") {
    ExactMatrix m(2, 3);
    CHECK(kernel(m).size() == 3);
}

TEST_CASE("rref over rational functions in q") {
    // [[q, 1], [q^2, q]] has rank 1 over Q(i)(q)
    ExactMatrix m(2, 2);
    m.at(0, 0) = Scalar::q();
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar::q() * Scalar::q();
    m.at(1, 1) = Scalar::q();
    CHECK(rank(m) == 1);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(Scalar::q() * k[0][0] + k[0][1] * Scalar::q() * Scalar(0) + k[0][1] == Scalar(0) + k[0][1] + Scalar::q() * k[0][0]);
    // direct check m v = 0
    CHECK((m.at(0, 0) * k[0][0] + m.at(0, 1) * k[0][1]).is_zero());
}

TEST_CASE("SpanSolver tracks kernel and solves") {
    // columns: (1,0), (0,1), (1,1) -> third is dependent
    SpanSolver s(2);
    CHECK(s.add_column({Scalar(1), Scalar(0)}));
    CHECK(s.add_column({Scalar(0), Scalar(1)}));
    CHECK_FALSE(s.add_column({Scalar(1), Scalar(1)}));
    REQUIRE(s.kernel_basis().size() == 1);
    const auto& k = s.kernel_basis()[0];
    // c0*(1,0) + c1*(0,1) + c2*(1,1) = 0 with c2 = 1
    CHECK(k[2] == Scalar(1));
    CHECK(k[0] == Scalar(-1));
    CHECK(k[1] == Scalar(-1));
    auto x = s.solve({Scalar(2), Scalar(3)});
    REQUIRE(x.has_value());
    // verify M x = target
    Scalar r0 = (*x)[0] * Scalar(1) + (*x)[2] * Scalar(1);
    Scalar r1 = (*x)[1] * Scalar(1) + (*x)[2] * Scalar(1);
    CHECK(r0 == Scalar(2));
    CHECK(r1 == Scalar(3));
    CHECK_FALSE(SpanSolver(2).solve({Scalar(1), Scalar(0)}).has_value());
}
