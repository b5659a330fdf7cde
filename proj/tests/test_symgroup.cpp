#include "doctest.h"

#include <deque>
#include <map>
#include <random>
#include <set>

#include "kacpal/symgroup.hpp"

using namespace kacpal;

namespace {

// Independent rewriting: explore the braid/commutation class of the word,
// collapse a randomly chosen adjacent square s_i s_i, repeat until reduced.
RingElem rewrite_randomly(int n, int m, std::vector<int> word, std::mt19937_64& rng) {
    RingElem coeff = RingElem::one(n, m);
    while (static_cast<int>(word.size()) != Perm::from_word(m, word).length()) {
        std::set<std::vector<int>> seen{word};
        std::deque<std::vector<int>> queue{word};
        std::vector<std::pair<std::vector<int>, std::size_t>> squares;
        while (!queue.empty()) {
            std::vector<int> cur = queue.front();
            queue.pop_front();
            for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
                if (cur[p] == cur[p + 1]) squares.emplace_back(cur, p);
                std::vector<int> next = cur;
                if (std::abs(cur[p] - cur[p + 1]) > 1) {
                    std::swap(next[p], next[p + 1]);
                } else if (p + 2 < cur.size() && cur[p] == cur[p + 2] && std::abs(cur[p] - cur[p + 1]) == 1) {
                    next[p] = cur[p + 1];
                    next[p + 1] = cur[p];
                    next[p + 2] = cur[p + 1];
                } else {
                    continue;
                }
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
        REQUIRE(!squares.empty());
        auto [w, p] = squares[rng() % squares.size()];
        std::vector<int> prefix(w.begin(), w.begin() + p);
        coeff *= act(Perm::from_word(m, prefix), t_of(n, m, w[p]));
        w.erase(w.begin() + p, w.begin() + p + 2);
        word = std::move(w);
    }
    return coeff;
}

void reduced_words(int m, std::vector<int>& cur, int depth, std::map<std::vector<int>, std::vector<std::vector<int>>>& out) {
    Perm p = Perm::from_word(m, cur);
    out[p.images()].push_back(cur);
    if (depth == 0) return;
    for (int i = 1; i < m; ++i) {
        cur.push_back(i);
        if (Perm::from_word(m, cur).length() == static_cast<int>(cur.size())) reduced_words(m, cur, depth - 1, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("canonical words") {
    CHECK(canonical_word(Perm::identity(4)).empty());
    CHECK(canonical_word(Perm::generator(2, 1)) == std::vector<int>{1});
    for (int m = 2; m <= 6; ++m) {
        std::vector<int> expect;
        for (int i = 1; i < m; ++i) expect.push_back(i);
        CHECK(canonical_word(Perm::long_cycle(m)) == expect);
    }
    SymmetricGroup G(3);
    std::set<std::vector<int>> words;
    for (std::size_t w = 0; w < G.order(); ++w) words.insert(G.word(w));
    CHECK(words == std::set<std::vector<int>>{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}});
    for (int m = 1; m <= 5; ++m) {
        SymmetricGroup S(m);
        for (std::size_t w = 0; w < S.order(); ++w) {
            CHECK(Perm::from_word(m, S.word(w)) == S.element(w));
            CHECK(static_cast<int>(S.word(w).size()) == S.length(w));
        }
    }
}

TEST_CASE("normalize_word examples") {
    for (int n : {2, 3}) {
        auto r = normalize_word(n, 2, {1, 1});
        CHECK(r.coeff == t_of(n, 2, 1));
        CHECK(r.perm.is_identity());
        auto a = normalize_word(n, 3, {1, 2, 1}), b = normalize_word(n, 3, {2, 1, 2});
        CHECK(a.coeff == RingElem::one(n, 3));
        CHECK(b.coeff == RingElem::one(n, 3));
        CHECK(a.perm == b.perm);
        CHECK(a.perm == Perm::from_word(3, {1, 2, 1}));
        auto c = normalize_word(n, 3, {1, 2, 2, 1});
        CHECK(c.perm.is_identity());
        CHECK(c.coeff == t_of(n, 3, 1) * sigma(Perm::generator(3, 1), t_of(n, 3, 2)));
    }
}

TEST_CASE("every reduced word gives coefficient one") {
    for (int m = 2; m <= 4; ++m) {
        std::map<std::vector<int>, std::vector<std::vector<int>>> by_perm;
        std::vector<int> cur;
        reduced_words(m, cur, m * (m - 1) / 2, by_perm);
        for (const auto& [img, words] : by_perm)
            for (const auto& w : words) {
                auto r = normalize_word(3, m, w);
                CHECK(r.coeff == RingElem::one(3, m));
                CHECK(r.perm.images() == img);
            }
    }
}

TEST_CASE("normalize_word agrees with random-order rewriting") {
    std::mt19937_64 rng(2024);
    for (int m : {2, 3, 4}) {
        for (int n : {2, 3}) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<int> word(2 + rng() % 7);
                for (auto& l : word) l = 1 + static_cast<int>(rng() % (m - 1));
                CAPTURE(word_str(word));
                auto r = normalize_word(n, m, word);
                CHECK(r.perm == Perm::from_word(m, word));
                CHECK(rewrite_randomly(n, m, word, rng) == r.coeff);
                CHECK(rewrite_randomly(n, m, word, rng) == r.coeff);
            }
        }
    }
}

TEST_CASE("cocycle values") {
    for (int n : {2, 3, 4}) {
        const int m = 3;
        Perm s1 = Perm::generator(m, 1), s2 = Perm::generator(m, 2);
        Perm id = Perm::identity(m);
        CHECK(cocycle(n, s1, s1) == t_of(n, m, 1));
        CHECK(cocycle(n, s1 * s2, s2) == sigma(s2, t_of(n, m, 1)));
        Perm w0 = s1 * s2 * s1;
        CHECK(cocycle(n, w0, w0) == t_of(n, m, 1) * t_of(n, m, 2) * sigma(s2, t_of(n, m, 1)));
        for (const Perm& w : {id, s1, s2, w0}) {
            CHECK(cocycle(n, id, w) == RingElem::one(n, m));
            CHECK(cocycle(n, w, id) == RingElem::one(n, m));
        }
        // m = 2
        const auto& F = CycContext::get(n);
        RingElem expect(n, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) expect += RingElem::monomial(n, {i, j}, F.root(-2 * i * j) * Rational(1, n));
        CHECK(cocycle(n, Perm::generator(2, 1), Perm::generator(2, 1)) == expect);
    }
}

TEST_CASE("closed-form m = 3 table") {
    for (int n : {2, 3, 4}) {
        auto cells = compare_gamma_m3(n);
        CHECK(cells.size() == 25);
        for (const auto& c : cells) {
            CAPTURE(word_str(c.w));
            CAPTURE(word_str(c.v));
            CHECK(c.match);
        }
    }
}

TEST_CASE("cocycle identities") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}}) {
        CAPTURE(n);
        CAPTURE(m);
        SymmetricGroup G(m);
        CocycleTable gamma(n, G);
        CHECK_FALSE(cocycle_identity_violation(gamma).has_value());
        CHECK_FALSE(counit_violation(gamma).has_value());
        for (std::size_t w = 0; w < G.order(); ++w)
            for (std::size_t v = 0; v < G.order(); ++v) {
                if (G.length(G.mul(w, v)) == G.length(w) + G.length(v)) CHECK(gamma.is_trivial(w, v));
                CHECK(gamma(w, v).is_invertible());
            }
    }
}

TEST_CASE("a broken cocycle is detected") {
    SymmetricGroup G(3);
    CocycleTable gamma(2, G);
    // replacing t_1 by 1 in a single cell breaks the identity
    const std::size_t N = G.order();
    const std::size_t s1 = G.generator_index(1);
    std::vector<RingElem> cells;
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v) cells.push_back(w == s1 && v == s1 ? RingElem::one(2, 3) : gamma(w, v));
    bool violated = false;
    for (std::size_t w = 0; w < N && !violated; ++w)
        for (std::size_t v = 0; v < N && !violated; ++v)
            for (std::size_t u = 0; u < N && !violated; ++u)
                violated = act(G.element(w), cells[v * N + u]) * cells[w * N + G.mul(v, u)] !=
                           cells[w * N + v] * cells[G.mul(w, v) * N + u];
    CHECK(violated);
}
