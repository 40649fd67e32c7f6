#include <catch2/catch_amalgamated.hpp>

#include "hgx/presentation.hpp"

#include <random>

using namespace hgx;

namespace {

Scalar qq() { return Scalar::q(); }

// SL_q(2): ba=qab, ca=qac, db=qbd, dc=qcd, cb=bc, da=ad+(q-q^-1)bc, ad-q^-1 bc=1
Presentation make_slq2(Scalar q) {
    Scalar qi = q.inverse();
    std::vector<std::pair<Word, NcPoly>> rules;
    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    // generators: a=0 b=1 c=2 d=3
    rules.push_back({{1, 0}, mono({0, 1}, q)});
    rules.push_back({{2, 0}, mono({0, 2}, q)});
    rules.push_back({{3, 1}, mono({1, 3}, q)});
    rules.push_back({{3, 2}, mono({2, 3}, q)});
    rules.push_back({{2, 1}, mono({1, 2}, Scalar(1))});
    rules.push_back({{3, 0}, mono({0, 3}, Scalar(1)) + mono({1, 2}, q - qi)});
    rules.push_back({{1, 2}, mono({0, 3}, q) + mono({}, -q)});
    return Presentation({"a", "b", "c", "d"}, std::move(rules));
}

// Taft algebra H'_4: a^4 = 1, b^2 = 0, ba = -i ab
Presentation make_taft() {
    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    std::vector<std::pair<Word, NcPoly>> rules;
    rules.push_back({{0, 0, 0, 0}, mono({}, Scalar(1))});
    rules.push_back({{1, 1}, NcPoly::zero()});
    rules.push_back({{1, 0}, mono({0, 1}, -Scalar::unit_i())});
    return Presentation({"a", "b"}, std::move(rules));
}

// Sweedler H_4: g^2 = 1, x^2 = 0, xg = -gx
Presentation make_h4() {
    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    std::vector<std::pair<Word, NcPoly>> rules;
    rules.push_back({{0, 0}, mono({}, Scalar(1))});
    rules.push_back({{1, 1}, NcPoly::zero()});
    rules.push_back({{1, 0}, mono({0, 1}, Scalar(-1))});
    return Presentation({"g", "x"}, std::move(rules));
}

// quantum plane C_q[X1,X2]: x2 x1 = q^-1 x1 x2  (from x1 x2 = q x2 x1)
Presentation make_qplane(Scalar q) {
    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    std::vector<std::pair<Word, NcPoly>> rules;
    rules.push_back({{1, 0}, mono({0, 1}, q.inverse())});
    return Presentation({"x1", "x2"}, std::move(rules));
}

} // namespace

TEST_CASE("normal forms of single rewrites") {
    Presentation slq2 = make_slq2(qq());
    NcPoly ba = NcPoly::monomial({1, 0}, Scalar(1));
    NcPoly nf = slq2.normal_form(ba);
    CHECK(nf == NcPoly::monomial({0, 1}, qq()));

    Presentation taft = make_taft();
    CHECK(taft.normal_form(NcPoly::monomial({1, 0}, Scalar(1))) ==
          NcPoly::monomial({0, 1}, -Scalar::unit_i()));
    CHECK(taft.normal_form(NcPoly::monomial({0, 0, 0, 0}, Scalar(1))) == NcPoly::unit());

    CHECK(slq2.normal_form(NcPoly::unit()) == NcPoly::unit());
}

TEST_CASE("multiplication in SL_q(2): quantum determinant is the unit") {
    Presentation slq2 = make_slq2(qq());
    NcPoly det = NcPoly::monomial({0, 3}, Scalar(1)) +
                 NcPoly::monomial({1, 2}, -qq().inverse());
    NcPoly a = slq2.gen_poly("a");
    CHECK(slq2.normal_form(det) == NcPoly::unit());
    CHECK(slq2.mul(det, a) == a);
    CHECK(slq2.mul(NcPoly::unit(), det) == slq2.normal_form(det));
}

TEST_CASE("H_4 anticommutation: xg + gx = 0") {
    Presentation h4 = make_h4();
    NcPoly x = h4.gen_poly("x"), g = h4.gen_poly("g");
    CHECK((h4.mul(x, g) + h4.mul(g, x)).is_zero());
}

TEST_CASE("truncated bases") {
    Presentation taft = make_taft();
    auto b5 = taft.basis_up_to(5);
    CHECK(b5.size() == 8); // 1, a, a^2, a^3, b, ab, a^2 b, a^3 b
    auto b9 = taft.basis_up_to(9);
    CHECK(b9.size() == 8); // finite normal-word language, full basis returned

    Presentation h4 = make_h4();
    CHECK(h4.basis_up_to(3).size() == 4);

    Presentation slq2 = make_slq2(qq());
    CHECK(slq2.basis_up_to(0).size() == 1);
    // Hilbert series of SL_q(2): dim of words of length <= 2 is 1 + 4 + 9
    CHECK(slq2.basis_up_to(2).size() == 14);
}

TEST_CASE("local confluence diagnostics") {
    Presentation slq2 = make_slq2(qq());
    CHECK(slq2.check_local_confluence(4).empty());

    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    Presentation single({"a", "b"}, {{{{1, 0}}, mono({0, 1}, Scalar(1))}});
    CHECK(single.check_local_confluence(4).empty());

    // {ba -> ab, ab -> 2ba} is rejected: the second rule is non-decreasing
    std::vector<std::pair<Word, NcPoly>> bad;
    bad.push_back({{1, 0}, mono({0, 1}, Scalar(1))});
    bad.push_back({{0, 1}, mono({1, 0}, Scalar(2))});
    CHECK_THROWS_AS(Presentation({"a", "b"}, std::move(bad)), std::invalid_argument);
}

TEST_CASE("characters of the quantum plane") {
    Presentation qp = make_qplane(qq());
    CHECK(qp.check_character({GaussRat(3), GaussRat(0)}, GaussRat(2)));
    CHECK_FALSE(qp.check_character({GaussRat(1), GaussRat(1)}, GaussRat(2)));
    CHECK(qp.check_character({GaussRat(5), GaussRat(7)}, GaussRat(1)));
}

TEST_CASE("normal_form is idempotent on random polynomials") {
    Presentation slq2 = make_slq2(qq());
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 4), coef(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        NcPoly p;
        for (int t = 0; t < 3; ++t) {
            Word w;
            int l = len(rng);
            for (int k = 0; k < l; ++k) w.push_back(gen(rng));
            p.add_term(w, Scalar(coef(rng)));
        }
        NcPoly nf = slq2.normal_form(p);
        CHECK(slq2.normal_form(nf) == nf);
        for (const auto& [w, c] : nf.terms()) CHECK(slq2.is_normal_word(w));
    }
}

TEST_CASE("SL(2) at q = 1 is commutative up to length 3") {
    Presentation sl2 = make_slq2(Scalar(1));
    auto basis = sl2.basis_up_to(3);
    for (const auto& u : basis) {
        if (u.size() > 2) continue;
        for (const auto& v : basis) {
            if (u.size() + v.size() > 3) continue;
            NcPoly pu = NcPoly::monomial(u, Scalar(1));
            NcPoly pv = NcPoly::monomial(v, Scalar(1));
            CHECK(sl2.mul(pu, pv) == sl2.mul(pv, pu));
        }
    }
}

TEST_CASE("rules reducible by other rules are rejected") {
    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    std::vector<std::pair<Word, NcPoly>> bad;
    bad.push_back({{1, 0}, mono({0, 1}, Scalar(1))});
    bad.push_back({{1, 0, 0}, mono({0, 0, 1}, Scalar(2))}); // contains ba
    CHECK_THROWS_AS(Presentation({"a", "b"}, std::move(bad)), std::invalid_argument);
}

TEST_CASE("grading is reported but never drives termination") {
    auto mono = [](Word w, Scalar c) { return NcPoly::monomial(std::move(w), std::move(c)); };
    // Laurent polynomials: X=0, Y=X^-1=1 with grading (1, -1)
    std::vector<std::pair<Word, NcPoly>> rules;
    rules.push_back({{0, 1}, mono({}, Scalar(1))});
    rules.push_back({{1, 0}, mono({}, Scalar(1))});
    Presentation laurent({"X", "Y"}, std::move(rules), std::vector<long>{1, -1});
    CHECK(laurent.is_graded());
    CHECK(laurent.word_grade({1, 1, 1}) == -3);
    CHECK(laurent.basis_up_to(2).size() == 5); // 1, X, Y, X^2, Y^2
}
