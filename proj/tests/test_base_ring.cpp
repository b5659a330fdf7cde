#include "doctest.h"

#include <random>

#include "kacpal/base_ring.hpp"

using namespace kacpal;

namespace {

RingElem x(int n, int m, int i, int k = 1) { return RingElem::variable(n, m, i, k); }

RingElem random_elem(int n, int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, n - 1);
    RingElem r(n, m);
    const auto& F = CycContext::get(n);
    for (int t = 0; t < 4; ++t) {
        ExpVec a(m);
        for (auto& v : a) v = e(rng);
        r += RingElem::monomial(n, a, F.root(e(rng)) * Rational(c(rng)));
    }
    return r;
}

}  // namespace

TEST_CASE("group algebra arithmetic") {
    const int n = 5, m = 3;
    const auto& F = CycContext::get(n);
    CHECK(x(n, m, 1) * x(n, m, 1, n - 1) == RingElem::one(n, m));
    RingElem one = RingElem::one(n, m);
    CHECK((one + x(n, m, 1)) * (one - x(n, m, 1)) == one - x(n, m, 1, 2));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        RingElem a = random_elem(n, m, rng), b = random_elem(n, m, rng), c = random_elem(n, m, rng);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
    CHECK_THROWS(x(n, m, 1) + x(3, m, 1));
    (void)F;
}

TEST_CASE("t squared is one for n = 2, m = 2") {
    RingElem t(2, 2);
    t += RingElem::monomial(2, {0, 0}, CycContext::get(2).from_rational(Rational(1, 2)));
    t += RingElem::monomial(2, {1, 0}, CycContext::get(2).from_rational(Rational(1, 2)));
    t += RingElem::monomial(2, {0, 1}, CycContext::get(2).from_rational(Rational(1, 2)));
    t += RingElem::monomial(2, {1, 1}, CycContext::get(2).from_rational(Rational(-1, 2)));
    CHECK(t == t_of(2, 2, 1));
    CHECK(t * t == RingElem::one(2, 2));
}

TEST_CASE("idempotents") {
    const auto& F2 = CycContext::get(2);
    CHECK(idempotent(2, 0) == RingElem::monomial(2, {0}, F2.from_rational(Rational(1, 2))) +
                                  RingElem::monomial(2, {1}, F2.from_rational(Rational(1, 2))));
    CHECK(idempotent(2, 1) == RingElem::monomial(2, {0}, F2.from_rational(Rational(1, 2))) +
                                  RingElem::monomial(2, {1}, F2.from_rational(Rational(-1, 2))));
    for (int n = 2; n <= 6; ++n) {
        RingElem sum(n, 1);
        for (int j = 0; j < n; ++j) {
            sum += idempotent(n, j);
            CHECK(eps_R(idempotent(n, j)) == CycContext::get(n).from_rational(j == 0 ? 1 : 0));
            for (int k = 0; k < n; ++k)
                CHECK(idempotent(n, j) * idempotent(n, k) == (j == k ? idempotent(n, j) : RingElem(n, 1)));
        }
        CHECK(sum == RingElem::one(n, 1));
    }
}

TEST_CASE("embeddings") {
    const int n = 3, m = 3;
    CHECK(embed(m, 2, RingElem::variable(n, 1, 1)) == x(n, m, 2));
    RingElem e = embed(m, 1, idempotent(n, 1)) * embed(m, 2, idempotent(n, 2));
    RingElem expect = tensor(tensor(idempotent(n, 1), idempotent(n, 2)), RingElem::one(n, 1));
    CHECK(e == expect);
    CHECK_THROWS(embed(m, 4, idempotent(n, 0)));
}

TEST_CASE("J_s written out for m = 3") {
    const int n = 3, m = 3;
    const auto& F = CycContext::get(n);
    RingElem expect(n, 2 * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExpVec e(2 * m, 0);
            e[0] = i;
            e[m + 1] = j;
            expect += RingElem::monomial(n, e, F.root(-2 * i * j) * Rational(1, n));
        }
    CHECK(twist_Js(n, m, 1) == expect);
}

TEST_CASE("J_s for n = 2, m = 2") {
    const auto& F = CycContext::get(2);
    CycScalar h = F.from_rational(Rational(1, 2));
    RingElem expect = RingElem::monomial(2, {0, 0, 0, 0}, h) + RingElem::monomial(2, {1, 0, 0, 0}, h) +
                      RingElem::monomial(2, {0, 0, 0, 1}, h) + RingElem::monomial(2, {1, 0, 0, 1}, -h);
    CHECK(twist_Js(2, 2, 1) == expect);
}

TEST_CASE("slot permutations") {
    const int n = 3, m = 3;
    Perm s1 = Perm::generator(m, 1), s2 = Perm::generator(m, 2);
    CHECK(sigma(s1, x(n, m, 1)) == x(n, m, 2));
    CHECK(sigma(s1, RingElem::one(n, m)) == RingElem::one(n, m));
    const auto& F = CycContext::get(n);
    RingElem expect(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) expect += RingElem::monomial(n, {i, 0, j}, F.root(-2 * i * j) * Rational(1, n));
    CHECK(sigma(s1, t_of(n, m, 2)) == expect);
    CHECK(sigma(s2, t_of(n, m, 1)) == expect);

    std::mt19937_64 rng(11);
    Perm w = s1 * s2, v = s2;
    RingElem a = random_elem(n, m, rng), b = random_elem(n, m, rng);
    CHECK(sigma(w, sigma(v, a)) == sigma(v * w, a));
    CHECK(act(w, act(v, a)) == act(w * v, a));
    CHECK(act(w, a) == sigma(w.inverse(), a));
    CHECK(sigma(w, a * b) == sigma(w, a) * sigma(w, b));
    // Δσ = (σ⊗σ)Δ
    CHECK(delta_R(sigma(w, a)) == act_on_legs({w.inverse(), w.inverse()}, delta_R(a)));
}

TEST_CASE("t_k and its inverse") {
    for (int n : {2, 3, 4}) {
        for (int m : {2, 3, 4}) {
            for (int k = 1; k < m; ++k) {
                CAPTURE(n);
                CAPTURE(m);
                RingElem t = t_of(n, m, k);
                CHECK(t * t_inv_of(n, m, k) == RingElem::one(n, m));
                CHECK(eps_R(t).is_one());
                CHECK(t.is_invertible());
                CHECK(t.inverse() == t_inv_of(n, m, k));
            }
        }
    }
}

TEST_CASE("J is invertible with inverse (id ⊗ S)(J)") {
    for (int n : {2, 3}) {
        RingElem J = twist_Js(n, 3, 2);
        CHECK(J * antipode_on_leg(J, 3, 1) == RingElem::one(n, 6));
        CHECK(J.inverse() == antipode_on_leg(J, 3, 1));
    }
}

TEST_CASE("coalgebra structure of R") {
    const int n = 4, m = 2;
    RingElem a = x(n, m, 1) * x(n, m, 2);
    CHECK(delta_R(a) == tensor(a, a));
    CHECK(eps_R(a).is_one());
    CHECK(mu_R(antipode_on_leg(delta_R(x(n, m, 1)), m, 0), m) == RingElem::one(n, m));
    std::mt19937_64 rng(5);
    RingElem r = random_elem(n, m, rng);
    CHECK(counit_on_leg(delta_R(r), m, 0) == r);
    CHECK(counit_on_leg(delta_R(r), m, 1) == r);
    CHECK(delta_on_leg(delta_R(r), m, 0) == delta_on_leg(delta_R(r), m, 1));
    CHECK(antipode_R(antipode_R(r)) == r);
}

TEST_CASE("inverse via characters") {
    const int n = 3, m = 2;
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        RingElem a = random_elem(n, m, rng);
        if (!a.is_invertible()) continue;
        CHECK(a * a.inverse() == RingElem::one(n, m));
    }
    CHECK_FALSE(idempotent(3, 1).is_invertible());
    CHECK_THROWS(idempotent(3, 1).inverse());
}
