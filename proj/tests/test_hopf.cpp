#include "doctest.h"

#include "kacpal/hopf.hpp"

using namespace kacpal;

namespace {

RingElem ring(int n, int m, std::initializer_list<std::pair<ExpVec, Rational>> terms) {
    RingElem r(n, m);
    for (const auto& [e, c] : terms) r += RingElem::monomial(n, e, CycContext::get(n).from_rational(c));
    return r;
}

}  // namespace

TEST_CASE("Kac-Paljutkin algebra") {
    HopfAlgebra H(2, 2);
    CHECK(H.dim() == 8);
    HopfElem x = H.x(1), y = H.x(2), z = H.z(1);
    RingElem t = ring(2, 2, {{{0, 0}, {1, 2}}, {{1, 0}, {1, 2}}, {{0, 1}, {1, 2}}, {{1, 1}, {-1, 2}}});
    CHECK(H.mul(z, z) == H.from_ring(t));
    CHECK(H.mul(z, x) == H.mul(y, z));
    CHECK(H.mul(z, y) == H.mul(x, z));
    // Δ(z) = ½(1⊗1 + x⊗1 + 1⊗y − x⊗y)(z⊗z)
    RingElem J = ring(2, 4, {{{0, 0, 0, 0}, {1, 2}}, {{1, 0, 0, 0}, {1, 2}}, {{0, 0, 0, 1}, {1, 2}}, {{1, 0, 0, 1}, {-1, 2}}});
    HopfTensor expect = H.mul(H.tensor(H.one(), H.one()), H.tensor(z, z));
    HopfTensor dz = H.coproduct(z);
    HopfTensor lhs(2, 2, 2);
    lhs.add({static_cast<std::uint16_t>(H.group().generator_index(1)), static_cast<std::uint16_t>(H.group().generator_index(1))}, J);
    CHECK(dz == lhs);
    CHECK(dz.term_count() == 4);
    CHECK(H.coproduct(x) == H.tensor(x, x));
    CHECK(H.antipode(z) == z);
    CHECK(H.antipode(x) == H.x(1));
    (void)expect;
}

TEST_CASE("generator relations for n = 3, m = 3") {
    HopfAlgebra H(3, 3);
    CHECK(H.dim() == 162);
    for (int k = 1; k < 3; ++k) {
        Perm sk = Perm::generator(3, k);
        for (int i = 1; i <= 3; ++i) CHECK(H.mul(H.z(k), H.x(i)) == H.mul(H.x(sk(i - 1) + 1), H.z(k)));
        CHECK(H.mul(H.z(k), H.z(k)) == H.from_ring(t_of(3, 3, k)));
        CHECK(H.antipode(H.z(k)) == H.z(k));
        CHECK(H.coproduct(H.x(k)) == H.tensor(H.x(k), H.x(k)));
    }
    CHECK(H.z_word({1, 2, 1}) == H.z_word({2, 1, 2}));
    HopfAlgebra H23(2, 3);
    CHECK((H23.z_word({1, 2, 1}) - H23.z_word({2, 1, 2})).is_zero());
}

TEST_CASE("twist factors J(w)") {
    for (int n : {2, 3}) {
        HopfAlgebra H(n, 3);
        const auto& G = H.group();
        CHECK(H.twist_of(G.identity_index()) == RingElem::one(n, 6));
        CHECK(H.twist_of(G.generator_index(1)) == twist_Js(n, 3, 1));
        CHECK(H.twist_of(G.generator_index(2)) == twist_Js(n, 3, 2));
        for (std::size_t w = 0; w < G.order(); ++w) {
            CHECK(eps_R(mu_R(H.twist_of(w), 3)).is_one());
            CHECK(H.twist_of(w).is_invertible());
        }
    }
}

TEST_CASE("products of group elements reproduce the cocycle") {
    HopfAlgebra H(3, 3);
    const auto& G = H.group();
    for (std::size_t w = 0; w < G.order(); ++w)
        for (std::size_t v = 0; v < G.order(); ++v) {
            HopfElem prod = H.mul(H.z_word(G.word(w)), H.z_word(G.word(v)));
            CHECK(prod == H.element(cocycle(3, G.element(w), G.element(v)), G.mul(w, v)));
        }
}

TEST_CASE("R embeds into H") {
    HopfAlgebra H(3, 2);
    RingElem a = t_of(3, 2, 1);
    CHECK(H.from_ring(a).components().size() == 1);
    CHECK(H.from_ring(a).component({static_cast<std::uint16_t>(H.group().identity_index())}) == a);
    CHECK(H.mul(H.from_ring(a), H.from_ring(a)) == H.from_ring(a * a));
}

TEST_CASE("Hopf axioms, all pairs") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        HopfAlgebra H(n, m);
        AxiomReport rep = verify_hopf_axioms(H, Scope{});
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("Hopf axioms, sampled") {
    HopfAlgebra H(2, 3);
    Scope s;
    s.all = false;
    s.samples = 300;
    AxiomReport rep = verify_hopf_axioms(H, s);
    CHECK(rep.passed());
    AxiomReport again = verify_hopf_axioms(H, s);
    for (std::size_t i = 0; i < rep.checks.size(); ++i) CHECK(rep.checks[i].checked == again.checks[i].checked);
}

TEST_CASE("negative controls") {
    const std::size_t s1 = SymmetricGroup(3).generator_index(1);
    Scope all;
    {
        Mutation mu;
        mu.drop_gamma_cell = std::make_pair(s1, s1);
        HopfAlgebra H(2, 3, mu);
        AxiomReport rep = verify_hopf_axioms(H, all);
        CHECK_FALSE(rep.find("associativity")->pass);
        CHECK_FALSE(rep.find("associativity")->witness.empty());
    }
    {
        // with γ = 1 the product is the plain smash product: associative, but Δ is no longer multiplicative
        Mutation mu;
        mu.drop_cocycle = true;
        HopfAlgebra H(2, 2, mu);
        AxiomReport rep = verify_hopf_axioms(H, all);
        CHECK(rep.find("associativity")->pass);
        CHECK_FALSE(rep.find("coproduct_multiplicative")->pass);
    }
    {
        Mutation mu;
        mu.drop_twist = true;
        HopfAlgebra H(2, 2, mu);
        AxiomReport rep = verify_hopf_axioms(H, all);
        CHECK(rep.find("associativity")->pass);
        CHECK_FALSE(rep.find("coproduct_multiplicative")->pass);
    }
}

TEST_CASE("integral") {
    HopfAlgebra H(2, 2);
    HopfElem L = H.integral();
    CHECK(H.counit(L) == CycContext::get(2).from_rational(2));
    CHECK(H.mul(H.x(1), L) == L);
    CHECK(H.mul(H.z(1), L) == L);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        HopfAlgebra K(n, m);
        for (const auto& c : verify_integral(K)) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("cyclic subalgebra") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {2, 4}}) {
        HopfAlgebra H(n, m);
        CyclicReport rep = verify_cyclic_subalgebra(H);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(rep.dim == static_cast<std::size_t>(m) * H.ring_dim());
        if (m == 2) CHECK(rep.dim == H.dim());
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("embedding into one more strand") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        for (const auto& c : embedding_check(n, m)) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}
