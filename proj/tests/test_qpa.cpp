#include "doctest.h"

#include <random>
#include <set>

#include "kacpal/qpa.hpp"

using namespace kacpal;

namespace {

const CheckResult* named(const QpaReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

QpaElem poly(int n, std::initializer_list<std::pair<ExpVec, long>> terms) {
    const CycContext& K = CycContext::get(n);
    QpaElem e(n);
    for (const auto& [alpha, c] : terms) e.add(alpha, K.from_rational(Rational(c)));
    return e;
}

// Orbits of ⟨s⟩ (cyclic shift) on exponent vectors in nZ^m of total degree k.
std::size_t cyclic_orbit_count(int n, int m, int k) {
    if (k % n) return 0;
    std::set<ExpVec> reps;
    for (ExpVec alpha : monomials(m, k / n)) {
        ExpVec best = alpha;
        for (int s = 0; s < m; ++s) {
            std::rotate(alpha.begin(), alpha.begin() + 1, alpha.end());
            best = std::min(best, alpha);
        }
        reps.insert(best);
    }
    return reps.size();
}

bool same_span(const std::vector<QpaElem>& x, const std::vector<QpaElem>& y) { return x == y; }

}  // namespace

TEST_CASE("r matrix") {
    for (int n : {2, 3, 4, 6}) {
        const CycContext& K = CycContext::get(n);
        for (int m : {2, 3, 4}) {
            RMatrix r = r_matrix(n, m, 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    CHECK(r[i][j] * r[j][i] == K.one());
                    if (i < j) CHECK(r[j][i] == K.p());
                }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    RMatrix s = r_matrix(n, m, a, b);
                    for (int i = 0; i < m; ++i) {
                        CHECK(s[i][i] == K.one());
                        for (int j = 0; j < m; ++j)
                            if (n % 2 == 0) CHECK(s[i][j].pow(static_cast<long>(n) * n) == K.one());
                    }
                }
        }
    }
}

TEST_CASE("monomial order") {
    CHECK(monomials(2, 2) == std::vector<ExpVec>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomials(3, 1) == std::vector<ExpVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(monomials(3, 4).size() == 15);
    CHECK(monomials(2, 0) == std::vector<ExpVec>{{0, 0}});
}

TEST_CASE("normal ordering") {
    HopfAlgebra H(2, 2);
    QuantumPolynomialAlgebra A(H, 1, 0, 4);
    const CycContext& K = CycContext::get(2);
    CHECK(A.normal_order({2, 1}) == QpaElem::monomial(2, {1, 1}, K.p()));
    CHECK(A.normal_order({1, 1}) == QpaElem::monomial(2, {2, 0}, K.one()));

    // independent rewriting: random adjacent swaps of inverted pairs
    for (int n : {3, 4}) {
        HopfAlgebra H3(n, 3);
        for (auto [a, b] : {std::pair{1, 0}, {1, 2}, {2, 1}}) {
            QuantumPolynomialAlgebra B(H3, a, b, 0);
            const CycContext& F = CycContext::get(n);
            std::mt19937 rng(a * 10 + b + n);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<int> word(1 + rng() % 8);
                for (int& x : word) x = 1 + static_cast<int>(rng() % 3);
                std::vector<int> w = word;
                CycScalar c = F.one();
                while (true) {
                    std::vector<std::size_t> inverted;
                    for (std::size_t t = 0; t + 1 < w.size(); ++t)
                        if (w[t] > w[t + 1]) inverted.push_back(t);
                    if (inverted.empty()) break;
                    std::size_t t = inverted[rng() % inverted.size()];
                    c *= B.r()[w[t] - 1][w[t + 1] - 1];
                    std::swap(w[t], w[t + 1]);
                }
                ExpVec alpha(3, 0);
                for (int x : w) ++alpha[x - 1];
                CHECK(B.normal_order(word) == QpaElem::monomial(n, alpha, c));
            }
        }
    }
}

TEST_CASE("action on quadratic monomials") {
    for (int n : {3, 4, 5}) {
        HopfAlgebra H(n, 4);
        const CycContext& K = CycContext::get(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                QuantumPolynomialAlgebra A(H, a, b, 2);
                for (int i = 1; i < 4; ++i) {
                    CAPTURE(n);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(i);
                    const HopfElem z = H.z(i);
                    CHECK(A.act(z, A.normal_order({i, i + 1})) ==
                          A.normal_order({i + 1, i}).scaled(K.root(2 * (a * b + b * b))));
                    CHECK(A.act(z, A.normal_order({i + 1, i})) ==
                          A.normal_order({i, i + 1}).scaled(K.root(2 * (a * b + a * a))));
                    for (int j = i + 2; j <= 4; ++j) {
                        CHECK(A.act(z, A.normal_order({i, j})) ==
                              A.normal_order({i + 1, j}).scaled(K.root(b * b + 2 * (a * b + b * b))));
                        CHECK(A.act(z, A.normal_order({j, i})) ==
                              A.normal_order({j, i + 1}).scaled(K.root(b * b + 4 * a * b)));
                    }
                }
            }
    }
}

TEST_CASE("unit acts trivially and degree bound is enforced") {
    HopfAlgebra H(3, 2);
    QuantumPolynomialAlgebra A(H, 1, 0, 3);
    QpaElem f = A.normal_order({2, 1, 2});
    CHECK(A.act(H.one(), f) == f);
    CHECK_THROWS_AS(A.act(H.z(1), A.normal_order({1, 1, 1, 1})), std::out_of_range);
}

TEST_CASE("module algebra") {
    struct Case {
        int n, m, a, b, d;
    };
    for (Case c : {Case{2, 2, 1, 0, 4}, Case{3, 2, 1, 0, 3}, Case{3, 2, 2, 1, 3}, Case{2, 3, 1, 0, 3},
                   Case{3, 3, 1, 2, 2}, Case{4, 2, 3, 1, 3}}) {
        CAPTURE(c.n);
        CAPTURE(c.m);
        CAPTURE(c.a);
        CAPTURE(c.b);
        HopfAlgebra H(c.n, c.m);
        QpaReport r = module_algebra_check(H, c.a, c.b, c.d, 4, 11);
        for (const auto& chk : r.checks) {
            CAPTURE(chk.name);
            CAPTURE(chk.witness);
            CHECK(chk.pass);
        }
    }
}

TEST_CASE("module algebra fails without the twist") {
    Mutation mut;
    mut.drop_twist = true;
    HopfAlgebra H(2, 2, mut);
    QpaReport r = module_algebra_check(H, 1, 0, 2, 0, 1);
    REQUIRE(named(r, "module_algebra_generators"));
    CHECK_FALSE(named(r, "module_algebra_generators")->pass);
    CHECK(named(r, "module_algebra_generators")->witness.find("z1") != std::string::npos);
}

TEST_CASE("invariants of A_{1,0} under H_{2,2}") {
    HopfAlgebra H(2, 2);
    QuantumPolynomialAlgebra A(H, 1, 0, 4);
    auto inv = invariants(A, Subalgebra::full);
    std::vector<std::size_t> dims;
    for (const auto& s : inv) dims.push_back(s.basis.size());
    CHECK(dims == std::vector<std::size_t>{1, 0, 1, 0, 2});
    CHECK(inv[2].basis == std::vector<QpaElem>{poly(2, {{{2, 0}, 1}, {{0, 2}, 1}})});
    CHECK(inv[4].basis == std::vector<QpaElem>{poly(2, {{{4, 0}, 1}, {{0, 4}, 1}}), poly(2, {{{2, 2}, 1}})});
    CHECK(same_span(inv[4].basis, reynolds_invariants(A, Subalgebra::full)[4].basis));

    // products of invariants stay invariant
    const QpaElem sq = A.mul(inv[2].basis[0], inv[2].basis[0]);
    for (const HopfElem& g : subalgebra_generators(H, Subalgebra::full)) CHECK(A.act(g, sq) == sq);

    // m = 2: the cyclic subalgebra is all of H
    auto cyc = invariants(A, Subalgebra::cyclic);
    for (int k = 0; k <= 4; ++k) CHECK(cyc[k].basis == inv[k].basis);
}

TEST_CASE("cyclic invariants match cyclic polynomials in u_i^n") {
    for (auto [n, m, d] : {std::tuple{2, 3, 4}, {2, 4, 4}, {4, 2, 8}, {4, 3, 4}}) {
        HopfAlgebra H(n, m);
        QuantumPolynomialAlgebra A(H, 1, 0, d);
        auto inv = invariants(A, Subalgebra::cyclic);
        auto rey = reynolds_invariants(A, Subalgebra::cyclic);
        for (int k = 0; k <= d; ++k) {
            CAPTURE(n);
            CAPTURE(m);
            CAPTURE(k);
            CHECK(inv[k].basis.size() == cyclic_orbit_count(n, m, k));
            CHECK(same_span(inv[k].basis, rey[k].basis));
        }
    }
    HopfAlgebra H(2, 3);
    QuantumPolynomialAlgebra A(H, 1, 0, 2);
    CHECK(invariants(A, Subalgebra::cyclic)[2].basis ==
          std::vector<QpaElem>{poly(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}})});
}

TEST_CASE("subalgebra integrals") {
    HopfAlgebra H(3, 3);
    for (Subalgebra s : {Subalgebra::full, Subalgebra::cyclic, Subalgebra::base}) {
        const HopfElem L = subalgebra_integral(H, s);
        for (const HopfElem& g : subalgebra_generators(H, s)) {
            CHECK(H.mul(g, L) == L.scaled(H.counit(g)));
            CHECK(H.mul(L, g) == L.scaled(H.counit(g)));
        }
    }
}

TEST_CASE("containment in the ring of n-th powers") {
    HopfAlgebra H(2, 2);
    QpaReport r = containment_check(H, 1, 0, 4);
    CHECK(r.passed());
    CHECK(named(r, "r_invariant_support"));
    CHECK(named(r, "h_invariant_support"));
    CHECK(named(r, "powers_commute"));

    QpaReport bad = containment_check(H, 1, 1, 2);
    const CheckResult* c = named(bad, "r_invariant_support_unasserted");
    REQUIRE(c);
    CHECK(c->witness.find("u1*u2") != std::string::npos);

    HopfAlgebra H33(3, 3);
    CHECK(containment_check(H33, 1, 0, 3).passed());
}

TEST_CASE("cyclic subalgebra acts inner-faithfully") {
    CHECK(cyclic_inner_faithful_check(2, 3).inner_faithful);
    CHECK(cyclic_inner_faithful_check(3, 2).inner_faithful);
    auto neg = cyclic_inner_faithful_check(2, 3, true);
    CHECK_FALSE(neg.inner_faithful);
    CHECK_FALSE(neg.block_structure);
    CHECK(neg.r_inner_faithful);
}
