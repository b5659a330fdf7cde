#include "doctest.h"

#include <numeric>

#include "kacpal/rep.hpp"

using namespace kacpal;

namespace {

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult& named(const std::vector<CheckResult>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range(name);
}

// Kernel of Z_n^m on V_{a,b}: g with a g_j + b Σ_{l≠j} g_l ≡ 0 (mod n) for all j.
std::vector<ExpVec> kernel_by_formula(int n, int m, int a, int b) {
    std::vector<ExpVec> out;
    ExpVec g(m, 0);
    while (true) {
        bool ok = true;
        const int total = std::accumulate(g.begin(), g.end(), 0);
        for (int j = 0; j < m; ++j) ok = ok && ((a * g[j] + b * (total - g[j])) % n == 0);
        if (ok) out.push_back(g);
        int pos = m - 1;
        while (pos >= 0 && g[pos] == n - 1) g[pos--] = 0;
        if (pos < 0) break;
        ++g[pos];
    }
    return out;
}

}  // namespace

TEST_CASE("matrices of V_{1,0} for n = m = 2") {
    Representation V = build_rep(2, 2, 1, 0);
    const CycContext& K = CycContext::get(2);
    CHECK(V.X[0](0, 0) == -K.one());
    CHECK(V.X[0](1, 1) == K.one());
    CHECK(V.X[0](0, 1).is_zero());
    CHECK(V.Z[0](0, 0).is_zero());
    CHECK(V.Z[0](0, 1) == K.one());
    CHECK(V.Z[0](1, 0) == K.one());
    CHECK(V.Z[0](1, 1).is_zero());
}

TEST_CASE("braid product and square of Z") {
    for (int n : {2, 3, 4})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Representation V = build_rep(n, 3, a, b);
                const CycContext& K = CycContext::get(n);
                const CycScalar p_b2 = K.root(b * b);
                Matrix expect(K, 3, 3);
                expect(0, 2) = p_b2;
                expect(1, 1) = p_b2 * K.root(2 * a * b);
                expect(2, 0) = p_b2 * K.root(4 * a * b);
                CHECK(V.Z[0] * V.Z[1] * V.Z[0] == expect);

                Matrix sq(K, 3, 3);
                sq(0, 0) = K.root(2 * a * b);
                sq(1, 1) = K.root(2 * a * b);
                sq(2, 2) = K.root(2 * b * b);
                CHECK(V.Z[0] * V.Z[0] == sq);
            }
}

TEST_CASE("defining relations hold") {
    for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(all_pass(verify_rep(build_rep(n, m, a, b))));
            }
}

TEST_CASE("mutated Z fails the square relation") {
    Representation V = build_rep(3, 3, 1, 0);
    V.Z[0](1, 0) = CycContext::get(3).root(2 * (1 * 0 + 1));
    auto checks = verify_rep(V);
    CHECK_FALSE(named(checks, "z_square").pass);
    CHECK_FALSE(named(checks, "z_square").witness.empty());
}

TEST_CASE("representation property against the Hopf product") {
    for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        HopfAlgebra H(n, m);
        for (auto [a, b] : {std::pair{1, 0}, {2 % n, 1}, {1, 1}}) {
            CAPTURE(n);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(verify_rep_homomorphism(H, build_rep(n, m, a, b), 200, 7).pass);
        }
    }
}

TEST_CASE("simplicity") {
    CHECK(is_simple(build_rep(3, 2, 1, 0)));
    CHECK(span_dimension(build_rep(2, 3, 1, 0)) == 9);
    for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 3}})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(is_simple(build_rep(n, m, a, b)) == (a != b));
            }
}

TEST_CASE("isomorphism classes") {
    Representation V10 = build_rep(3, 3, 1, 0);
    CHECK(modules_isomorphic(V10, V10));
    CHECK(intertwiner_dimension(V10, V10) == 1);
    CHECK_FALSE(modules_isomorphic(V10, build_rep(3, 3, 2, 0)));
    for (int n : {2, 3})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        CAPTURE(n);
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(c);
                        CAPTURE(d);
                        CHECK(modules_isomorphic(build_rep(n, 3, a, b), build_rep(n, 3, c, d)) ==
                              (a == c && b == d));
                    }
}

TEST_CASE("determinant of M") {
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b) {
            CHECK(det_M(2, a, b) == a * a - b * b);
            CHECK(det_M(3, a, b) == a * a * a + 2 * b * b * b - 3 * a * b * b);
            for (int m = 1; m <= 6; ++m) {
                std::int64_t expect = a + (m - 1) * b;
                for (int i = 1; i < m; ++i) expect *= a - b;
                CHECK(det_M(m, a, b) == expect);
            }
        }
    for (int n = 2; n <= 7; ++n) CHECK(inner_faithful_criterion(n, 3, 1, 0));
    CHECK_FALSE(inner_faithful_criterion(2, 2, 1, 1));
}

TEST_CASE("subgroup enumeration") {
    CHECK(inner_faithful_bruteforce(2, 2, 1, 0).subgroup_count == 5);
    CHECK(inner_faithful_bruteforce(3, 2, 1, 0).subgroup_count == 6);
    CHECK(inner_faithful_bruteforce(2, 3, 1, 0).subgroup_count == 16);
    CHECK(inner_faithful_bruteforce(4, 2, 1, 0).subgroup_count == 15);
    CHECK(inner_faithful_bruteforce(3, 3, 1, 0).subgroup_count == 28);
    CHECK(inner_faithful_bruteforce(4, 3, 1, 0).subgroup_count == 129);
    CHECK_THROWS_AS(inner_faithful_bruteforce(2, 13, 1, 0), SizeGuard);
    CHECK_THROWS_AS(inner_faithful_bruteforce(4, 3, 1, 0, 50), SizeGuard);
}

TEST_CASE("inner faithfulness by brute force") {
    auto r10 = inner_faithful_bruteforce(2, 2, 1, 0);
    CHECK(r10.inner_faithful);
    REQUIRE(r10.annihilating.size() == 1);
    CHECK(r10.annihilating[0] == std::vector<ExpVec>{{0, 0}});

    auto r11 = inner_faithful_bruteforce(2, 2, 1, 1);
    CHECK_FALSE(r11.inner_faithful);
    CHECK(std::find(r11.annihilating.begin(), r11.annihilating.end(), std::vector<ExpVec>{{0, 0}, {1, 1}}) !=
          r11.annihilating.end());

    for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}, {4, 3}})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(a);
                CAPTURE(b);
                auto res = inner_faithful_bruteforce(n, m, a, b);
                const auto kernel = kernel_by_formula(n, m, a, b);
                CHECK(res.inner_faithful == (kernel.size() == 1));
                // the largest annihilating subgroup is the whole kernel
                std::size_t largest = 0;
                for (const auto& S : res.annihilating) largest = std::max(largest, S.size());
                CHECK(largest == kernel.size());
                if (inner_faithful_criterion(n, m, a, b)) CHECK(res.inner_faithful);
            }
}
