#pragma once

#include "hgx/corpus_data.hpp"
#include "hgx/hgx_format.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgx {

// ---------------------------------------------------------------------------
// registry

struct CorpusEntryInfo {
    std::string file;    // key into corpus_data::files()
    std::string main;    // principal algebra block
    StructureLevel declared = StructureLevel::bialgebra;
    bool trig_constants = false; // replace by the 2-dim structure-constants form
};

inline const std::map<std::string, CorpusEntryInfo>& corpus_registry() {
    static const std::map<std::string, CorpusEntryInfo> reg = {
        {"trig", {"trig", "trig", StructureLevel::coalgebra, true}},
        {"fx", {"fx", "fx", StructureLevel::bialgebra}},
        {"laurent", {"laurent", "laurent", StructureLevel::hopf}},
        {"fbx", {"fbx", "fbx", StructureLevel::hopf}},
        {"fz2", {"fz2", "fz2", StructureLevel::hopf}},
        {"fz3", {"fz3", "fz3", StructureLevel::hopf}},
        {"fs3", {"fs3", "fs3", StructureLevel::hopf}},
        {"oz2", {"duality-z2", "oz2", StructureLevel::hopf}},
        {"oz3", {"duality-z3", "oz3", StructureLevel::hopf}},
        {"os3", {"duality-s3", "os3", StructureLevel::hopf}},
        {"sweedler-h4", {"sweedler-h4", "h4", StructureLevel::hopf}},
        {"taft-h4prime", {"taft", "taft", StructureLevel::hopf}},
        {"taft-subgroup", {"taft", "taft", StructureLevel::hopf}},
        {"slq2", {"slq2", "slq2", StructureLevel::hopf}},
        {"sl2", {"sl2", "sl2", StructureLevel::hopf}},
        {"glq2", {"glq2", "glq2", StructureLevel::hopf}},
        {"gl2", {"gl2", "gl2", StructureLevel::hopf}},
        {"glq2-over-t", {"glq2", "glq2", StructureLevel::hopf}},
        {"gl2-over-t", {"gl2", "gl2", StructureLevel::hopf}},
        {"uq-sl2", {"uqsl2", "uqsl2", StructureLevel::hopf}},
        {"u-sl2", {"usl2", "usl2", StructureLevel::hopf}},
        {"qplane", {"qplane", "qplane", StructureLevel::algebra}},
        {"qplane-sl2", {"sl2", "plane", StructureLevel::algebra}},
        {"truncpoly-z3", {"truncpoly-z3", "truncpoly", StructureLevel::algebra}},
        {"o-of-a", {"o-of-a", "oz4", StructureLevel::hopf}},
        {"tensor-z2-h4", {"tensor-z2-h4", "tzh", StructureLevel::hopf}},
        {"duality-z2", {"duality-z2", "oz2", StructureLevel::hopf}},
        {"duality-z3", {"duality-z3", "oz3", StructureLevel::hopf}},
        {"duality-s3", {"duality-s3", "os3", StructureLevel::hopf}},
    };
    return reg;
}

inline std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& [name, info] : corpus_registry()) out.push_back(name);
    return out;
}

struct LoadedEntry {
    std::string name;
    CorpusEntryInfo info;
    WiredDocument doc;
    std::optional<HopfStructure> trig; // structure-constants form when applicable

    const HopfStructure& main() const {
        if (trig) return *trig;
        return doc.algebras.at(info.main);
    }
};

inline LoadedEntry corpus_load(const std::string& name) {
    auto it = corpus_registry().find(name);
    if (it == corpus_registry().end())
        throw std::invalid_argument("unknown corpus entry '" + name + "'");
    const auto& files = corpus_data::files();
    auto fit = files.find(it->second.file);
    if (fit == files.end())
        throw std::logic_error("corpus file missing from build: " + it->second.file);
    LoadedEntry out;
    out.name = name;
    out.info = it->second;
    out.doc = wire_document(parse_hgx(fit->second));
    if (it->second.trig_constants) {
        // the paper's trigonometric coalgebra is the 2-dimensional coalgebra
        // on {sin, cos}; rebuild in structure-constants mode on that basis
        const HopfStructure& wired = out.doc.algebras.at(it->second.main);
        std::vector<Word> basis{{0}, {1}};
        std::map<Word, TensorElement, DeglexLess> delta;
        std::map<Word, Scalar, DeglexLess> eps;
        for (int g = 0; g < 2; ++g) {
            delta[{g}] = wired.delta_table()[g];
            eps[{g}] = wired.counit_table()[g];
        }
        out.trig = HopfStructure::structure_constants(wired.pres(), basis, delta, eps);
    }
    return out;
}

// ---------------------------------------------------------------------------
// structure-constant oracle (independent of the rewriting engine)

/// Dense structure constants of a finite-dimensional entry, built from
/// closed-form descriptions (group tables, exponent arithmetic).  Products,
/// coproducts and antipodes are raw tensor contractions.
struct StructureConstants {
    std::vector<Word> basis; // words of the corresponding presentation basis
    // mult[i][j] = coordinates of b_i b_j
    std::vector<std::vector<std::vector<Scalar>>> mult;
    // comult[i] = matrix of Delta(b_i): entry (j,k) is the b_j (x) b_k coord
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> comult;
    std::vector<Scalar> counit;
    std::optional<std::vector<std::vector<Scalar>>> antipode;
    bool has_mult = true;
    bool has_comult = true;

    std::size_t dim() const { return basis.size(); }

    NcPoly to_poly(const std::vector<Scalar>& coords) const {
        NcPoly p;
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero()) p.add_term(basis[k], coords[k]);
        return p;
    }

    TensorElement to_tensor(const std::map<std::pair<std::size_t, std::size_t>, Scalar>& m) const {
        TensorElement t(2);
        for (const auto& [jk, c] : m) t.add_term({basis[jk.first], basis[jk.second]}, c);
        return t;
    }

    /// (co)associativity, counit law and, when present, the antipode axiom,
    /// verified by raw tensor contraction at load time.
    void verify() const {
        const std::size_t n = dim();
        if (has_mult) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        std::vector<Scalar> lhs(n), rhs(n);
                        for (std::size_t m = 0; m < n; ++m) {
                            if (!mult[i][j][m].is_zero())
                                for (std::size_t t = 0; t < n; ++t)
                                    lhs[t] += mult[i][j][m] * mult[m][k][t];
                            if (!mult[j][k][m].is_zero())
                                for (std::size_t t = 0; t < n; ++t)
                                    rhs[t] += mult[j][k][m] * mult[i][m][t];
                        }
                        if (lhs != rhs) throw std::logic_error("oracle multiplication not associative");
                    }
        }
        if (!has_comult) return;
        for (std::size_t i = 0; i < n; ++i) {
            // (eps (x) id) Delta = id = (id (x) eps) Delta
            std::vector<Scalar> left(n), right(n);
            for (const auto& [jk, c] : comult[i]) {
                left[jk.second] += c * counit[jk.first];
                right[jk.first] += c * counit[jk.second];
            }
            std::vector<Scalar> e(n);
            e[i] = Scalar(1);
            if (left != e || right != e) throw std::logic_error("oracle counit law fails");
            // coassociativity
            std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> a, b;
            for (const auto& [jk, c] : comult[i]) {
                for (const auto& [lm, c2] : comult[jk.first]) {
                    auto key = std::make_tuple(lm.first, lm.second, jk.second);
                    a[key] += c * c2;
                    if (a[key].is_zero()) a.erase(key);
                }
                for (const auto& [lm, c2] : comult[jk.second]) {
                    auto key = std::make_tuple(jk.first, lm.first, lm.second);
                    b[key] += c * c2;
                    if (b[key].is_zero()) b.erase(key);
                }
            }
            if (a != b) throw std::logic_error("oracle comultiplication not coassociative");
        }
    }

    /// Raw canonical-map matrix for the self-coaction: can(b_i (x) b_j) =
    /// b_i Delta(b_j)_0 (x) Delta(b_j)_1, as an n^2 x n^2 matrix.
    ExactMatrix canonical_matrix() const {
        const std::size_t n = dim();
        ExactMatrix m(n * n, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& [kl, c] : comult[j]) {
                    // b_i * b_{kl.first} (x) b_{kl.second}
                    const auto& prod = mult[i][kl.first];
                    for (std::size_t t = 0; t < n; ++t)
                        if (!prod[t].is_zero())
                            m.at(t * n + kl.second, i * n + j) += c * prod[t];
                }
            }
        return m;
    }
};

namespace oracle_detail {

struct FiniteGroup {
    std::size_t n;
    std::function<std::size_t(std::size_t, std::size_t)> mul;
    std::function<std::size_t(std::size_t)> inv;
};

inline FiniteGroup cyclic(std::size_t n) {
    return {n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
            [n](std::size_t a) { return (n - a) % n; }};
}

/// S3 as permutations of {0,1,2}, indexed 0..5 in the fixed order
/// 1, r, r2, s, t = r s, u = r2 s  (matching the corpus file).
inline FiniteGroup symmetric3() {
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    // compose(p, q)(i) = p(q(i)); table index lookup
    auto index_of = [](const int p[3]) {
        for (std::size_t k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
        throw std::logic_error("not a permutation of S3");
    };
    auto mul = [index_of](std::size_t a, std::size_t b) {
        int r[3];
        for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
        return index_of(r);
    };
    auto inv = [mul](std::size_t a) {
        for (std::size_t b = 0; b < 6; ++b)
            if (mul(a, b) == 0) return b;
        throw std::logic_error("no inverse");
    };
    return {6, mul, inv};
}

// verify the t = r s, u = r2 s conventions used by the corpus text
inline void check_s3_convention() {
    FiniteGroup g = symmetric3();
    if (g.mul(1, 3) != 4 || g.mul(2, 3) != 5 || g.mul(1, 1) != 2)
        throw std::logic_error("S3 index convention broken");
}

} // namespace oracle_detail

/// Group algebra F[G].  The basis word of group element k comes from the
/// matching presentation: powers of the single generator for cyclic groups,
/// one generator per nontrivial element otherwise.
inline StructureConstants oracle_group_algebra(const oracle_detail::FiniteGroup& G,
                                               bool cyclic_single_gen) {
    StructureConstants sc;
    const std::size_t n = G.n;
    sc.basis.resize(n);
    for (std::size_t k = 1; k < n; ++k)
        sc.basis[k] = cyclic_single_gen ? Word(k, 0) : Word{static_cast<int>(k - 1)};
    sc.mult.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    sc.comult.resize(n);
    sc.counit.assign(n, Scalar(1));
    sc.antipode.emplace(n, std::vector<Scalar>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) sc.mult[a][b][G.mul(a, b)] = Scalar(1);
        sc.comult[a][{a, a}] = Scalar(1);
        (*sc.antipode)[a][G.inv(a)] = Scalar(1);
    }
    return sc;
}

/// Function algebra O(G) on the presentation basis {1, u_g for g != 1}: the
/// delta functions on nontrivial elements plus the unit, converted from the
/// e-basis by e_1 = 1 - sum u_g.
inline StructureConstants oracle_function_algebra(const oracle_detail::FiniteGroup& G) {
    const std::size_t n = G.n;
    // e-basis structure first
    auto emult = [&](std::size_t a, std::size_t b) { return a == b; };
    // change of basis: basis vector 0 is 1 = sum_g e_g; vector k (k>0) is e_k.
    // expressed in e-coordinates:
    auto to_e = [&](const std::vector<Scalar>& u) {
        std::vector<Scalar> e(n);
        for (std::size_t g = 0; g < n; ++g) e[g] += u[0];
        for (std::size_t k = 1; k < n; ++k) e[k] += u[k];
        return e;
    };
    auto from_e = [&](const std::vector<Scalar>& e) {
        // 1-coordinate is e_0's coefficient; u_k = e_k - e_0 contribution
        std::vector<Scalar> u(n);
        u[0] = e[0];
        for (std::size_t k = 1; k < n; ++k) u[k] = e[k] - e[0];
        return u;
    };
    StructureConstants sc;
    sc.basis.resize(n);
    for (std::size_t k = 1; k < n; ++k) sc.basis[k] = Word{static_cast<int>(k - 1)};
    sc.mult.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    sc.comult.resize(n);
    sc.counit.assign(n, Scalar(0));
    sc.antipode.emplace(n, std::vector<Scalar>(n));
    // basis vectors in e-coordinates
    std::vector<std::vector<Scalar>> eb(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> u(n);
        u[k] = Scalar(1);
        eb[k] = to_e(u);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<Scalar> prod(n);
            for (std::size_t g = 0; g < n; ++g)
                if (emult(g, g)) prod[g] = eb[a][g] * eb[b][g];
            sc.mult[a][b] = from_e(prod);
        }
        // counit: evaluation at the identity element
        sc.counit[a] = eb[a][0];
        // antipode: S(f)(g) = f(g^-1)
        std::vector<Scalar> s(n);
        for (std::size_t g = 0; g < n; ++g) s[g] = eb[a][G.inv(g)];
        (*sc.antipode)[a] = from_e(s);
        // coproduct: Delta(e_z) = sum_{xy=z} e_x (x) e_y; change both legs
        // via u_k = e_k - e_0-part is linear, so convert the e (x) e matrix
        std::map<std::pair<std::size_t, std::size_t>, Scalar> em;
        for (std::size_t z = 0; z < n; ++z) {
            if (eb[a][z].is_zero()) continue;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (G.mul(x, y) == z) em[{x, y}] += eb[a][z];
        }
        // convert: e_x (x) e_y into the u-basis on both legs
        // e_0 = 1 - sum_{k>0} u_k; e_k = u_k
        auto leg_coords = [&](std::size_t x) {
            std::vector<Scalar> u(n);
            if (x == 0) {
                u[0] = Scalar(1);
                for (std::size_t k = 1; k < n; ++k) u[k] = Scalar(-1);
            } else {
                u[x] = Scalar(1);
            }
            return u;
        };
        std::map<std::pair<std::size_t, std::size_t>, Scalar>& out = sc.comult[a];
        for (const auto& [xy, c] : em) {
            auto lx = leg_coords(xy.first);
            auto ly = leg_coords(xy.second);
            for (std::size_t j = 0; j < n; ++j) {
                if (lx[j].is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (ly[k].is_zero()) continue;
                    auto key = std::make_pair(j, k);
                    out[key] += c * lx[j] * ly[k];
                    if (out[key].is_zero()) out.erase(key);
                }
            }
        }
    }
    return sc;
}

/// Sweedler/Taft family: basis a^m b^n with a^N = 1, b^2 = 0, b a = zeta a b
/// for a root of unity zeta; Delta(a) = a (x) a, Delta(b) = a (x) b + b (x)
/// a^{N-1}, S(a) = a^{N-1}, S(b) = -zeta^{-1}?? -- the antipode is supplied.
inline StructureConstants oracle_taft_family(std::size_t N, const Scalar& zeta,
                                             const Scalar& s_b_coef) {
    // basis index: m + N*n for a^m b^n (n in {0,1}); words over gens a=0,b=1
    const std::size_t dim = 2 * N;
    auto idx = [N](std::size_t m, std::size_t n) { return m + N * n; };
    StructureConstants sc;
    sc.basis.resize(dim);
    for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t m = 0; m < N; ++m) {
            Word w(m, 0);
            if (n) w.push_back(1);
            sc.basis[idx(m, n)] = w;
        }
    sc.mult.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim)));
    sc.comult.resize(dim);
    sc.counit.assign(dim, Scalar(0));
    sc.antipode.emplace(dim, std::vector<Scalar>(dim));
    auto zpow = [&zeta](std::size_t e) { return zeta.pow(static_cast<long>(e)); };
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n < 2; ++n) {
            std::size_t me = idx(m, n);
            // products: (a^m b^n)(a^m' b^n') = zeta^{n m'} a^{m+m'} b^{n+n'}
            for (std::size_t m2 = 0; m2 < N; ++m2)
                for (std::size_t n2 = 0; n2 < 2; ++n2) {
                    if (n + n2 >= 2) continue; // b^2 = 0
                    sc.mult[me][idx(m2, n2)][idx((m + m2) % N, n + n2)] = zpow(n * m2);
                }
            // coproduct
            if (n == 0) {
                sc.comult[me][{idx(m, 0), idx(m, 0)}] = Scalar(1);
            } else {
                sc.comult[me][{idx((m + 1) % N, 0), idx(m, 1)}] = Scalar(1);
                sc.comult[me][{idx(m, 1), idx((m + N - 1) % N, 0)}] = Scalar(1);
            }
            // counit
            if (n == 0) sc.counit[me] = Scalar(1);
            // antipode: S(a^m b^n) = (s_b b)^n (a^{-m}) with the commutation
            if (n == 0) {
                (*sc.antipode)[me][idx((N - m) % N, 0)] = Scalar(1);
            } else {
                // S(b) S(a^m) = s_b * b * a^{N-m} = s_b zeta^{N-m} a^{N-m} b
                std::size_t mm = (N - m) % N;
                (*sc.antipode)[me][idx(mm, 1)] = s_b_coef * zpow(mm);
            }
        }
    return sc;
}

/// Sweedler's H4 directly: basis g^m x^n with Delta(x) = x (x) 1 + g (x) x.
inline StructureConstants oracle_sweedler_h4() {
    const std::size_t dim = 4;
    auto idx = [](std::size_t m, std::size_t n) { return m + 2 * n; };
    StructureConstants sc;
    sc.basis.resize(dim);
    for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t m = 0; m < 2; ++m) {
            Word w(m, 0);
            if (n) w.push_back(1);
            sc.basis[idx(m, n)] = w;
        }
    sc.mult.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim)));
    sc.comult.resize(dim);
    sc.counit.assign(dim, Scalar(0));
    sc.antipode.emplace(dim, std::vector<Scalar>(dim));
    auto sgn = [](std::size_t e) { return (e % 2) ? Scalar(-1) : Scalar(1); };
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n) {
            std::size_t me = idx(m, n);
            // (g^m x^n)(g^m2 x^n2) = (-1)^{n m2} g^{m+m2} x^{n+n2}
            for (std::size_t m2 = 0; m2 < 2; ++m2)
                for (std::size_t n2 = 0; n2 < 2; ++n2) {
                    if (n + n2 >= 2) continue;
                    sc.mult[me][idx(m2, n2)][idx((m + m2) % 2, n + n2)] = sgn(n * m2);
                }
            if (n == 0) {
                sc.comult[me][{me, me}] = Scalar(1);
                sc.counit[me] = Scalar(1);
                (*sc.antipode)[me][me] = Scalar(1); // S(g) = g
            } else {
                // Delta(g^m x) = g^m x (x) g^m + g^{m+1} (x) g^m x
                sc.comult[me][{idx(m, 1), idx(m, 0)}] += Scalar(1);
                sc.comult[me][{idx((m + 1) % 2, 0), idx(m, 1)}] += Scalar(1);
                // S(g^m x) = -(-1)^m g^{m+1} x
                (*sc.antipode)[me][idx((m + 1) % 2, 1)] = Scalar(-1) * sgn(m);
            }
        }
    return sc;
}

/// F[Z2] (x) H4 on the basis G^l g^m x^n (componentwise structure).
inline StructureConstants oracle_tensor_z2_h4() {
    const std::size_t dim = 8;
    auto idx = [](std::size_t l, std::size_t m, std::size_t n) { return l + 2 * m + 4 * n; };
    StructureConstants sc;
    sc.basis.resize(dim);
    for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t m = 0; m < 2; ++m)
            for (std::size_t l = 0; l < 2; ++l) {
                Word w;
                for (std::size_t k = 0; k < l; ++k) w.push_back(0); // G
                for (std::size_t k = 0; k < m; ++k) w.push_back(1); // g
                for (std::size_t k = 0; k < n; ++k) w.push_back(2); // x
                sc.basis[idx(l, m, n)] = w;
            }
    sc.mult.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim)));
    sc.comult.resize(dim);
    sc.counit.assign(dim, Scalar(0));
    sc.antipode.emplace(dim, std::vector<Scalar>(dim));
    auto sgn = [](std::size_t e) { return (e % 2) ? Scalar(-1) : Scalar(1); };
    for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t m = 0; m < 2; ++m)
            for (std::size_t n = 0; n < 2; ++n) {
                std::size_t me = idx(l, m, n);
                for (std::size_t l2 = 0; l2 < 2; ++l2)
                    for (std::size_t m2 = 0; m2 < 2; ++m2)
                        for (std::size_t n2 = 0; n2 < 2; ++n2) {
                            if (n + n2 >= 2) continue;
                            sc.mult[me][idx(l2, m2, n2)][idx((l + l2) % 2, (m + m2) % 2, n + n2)] =
                                sgn(n * m2);
                        }
                if (n == 0) {
                    sc.comult[me][{me, me}] += Scalar(1);
                    sc.counit[me] = Scalar(1);
                    (*sc.antipode)[me][idx(l, m, 0)] = Scalar(1);
                } else {
                    // Delta(G^l g^m x) = G^l g^m x (x) G^l g^m
                    //                  + G^l g^{m+1} (x) G^l g^m x
                    sc.comult[me][{idx(l, m, 1), idx(l, m, 0)}] += Scalar(1);
                    sc.comult[me][{idx(l, (m + 1) % 2, 0), idx(l, m, 1)}] += Scalar(1);
                    // S(G^l g^m x) = S(x) S(g^m) S(G^l) = -(-1)^m G^l g^{m+1} x
                    (*sc.antipode)[me][idx(l, (m + 1) % 2, 1)] = Scalar(-1) * sgn(m);
                }
            }
    return sc;
}

/// Trigonometric coalgebra on {sin, cos} (no multiplication).
inline StructureConstants oracle_trig() {
    StructureConstants sc;
    sc.has_mult = false;
    sc.basis = {Word{0}, Word{1}}; // sin, cos
    sc.comult.resize(2);
    sc.comult[0][{0, 1}] = Scalar(1);
    sc.comult[0][{1, 0}] = Scalar(1);
    sc.comult[1][{1, 1}] = Scalar(1);
    sc.comult[1][{0, 0}] = Scalar(-1);
    sc.counit = {Scalar(0), Scalar(1)};
    return sc;
}

/// F[X]/(X^3): multiplication only, no coalgebra structure in this entry.
inline StructureConstants oracle_truncpoly() {
    StructureConstants sc;
    sc.has_comult = false;
    sc.basis = {Word{}, Word{0}, Word{0, 0}};
    sc.mult.assign(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            if (a + b < 3) sc.mult[a][b][a + b] = Scalar(1);
    return sc;
}

/// Oracle lookup for the finite-dimensional entries.
inline std::optional<StructureConstants> corpus_oracle(const std::string& name) {
    using namespace oracle_detail;
    std::optional<StructureConstants> sc;
    if (name == "fz2") sc = oracle_group_algebra(cyclic(2), true);
    else if (name == "fz3") sc = oracle_group_algebra(cyclic(3), true);
    else if (name == "fs3") {
        check_s3_convention();
        sc = oracle_group_algebra(symmetric3(), false);
    } else if (name == "oz2") sc = oracle_function_algebra(cyclic(2));
    else if (name == "oz3") sc = oracle_function_algebra(cyclic(3));
    else if (name == "os3") {
        check_s3_convention();
        sc = oracle_function_algebra(symmetric3());
    } else if (name == "oz4" || name == "o-of-a") sc = oracle_function_algebra(cyclic(4));
    else if (name == "taft-h4prime")
        sc = oracle_taft_family(4, -Scalar::unit_i(), Scalar::unit_i());
    else if (name == "taftsub") sc = oracle_group_algebra(cyclic(2), true);
    else if (name == "sweedler-h4") sc = oracle_sweedler_h4();
    else if (name == "tensor-z2-h4") sc = oracle_tensor_z2_h4();
    else if (name == "trig") sc = oracle_trig();
    else if (name == "truncpoly-z3") sc = oracle_truncpoly();
    if (sc) sc->verify();
    return sc;
}

} // namespace hgx
