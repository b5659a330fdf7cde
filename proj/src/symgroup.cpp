#include "kacpal/symgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace kacpal {

NormalizedWord normalize_word(int n, int m, const std::vector<int>& word) {
    std::vector<RingElem> t;
    t.reserve(m - 1);
    for (int k = 1; k < m; ++k) t.push_back(t_of(n, m, k));
    RingElem coeff = RingElem::one(n, m);
    Perm u = Perm::identity(m);
    int len = 0;
    for (int i : word) {
        if (i < 1 || i >= m) throw std::out_of_range("normalize_word: letter out of range");
        Perm next = u * Perm::generator(m, i);
        int next_len = next.length();
        if (next_len < len) coeff *= act(next, t[i - 1]);
        u = std::move(next);
        len = next_len;
    }
    return {std::move(coeff), std::move(u)};
}

RingElem cocycle(int n, const Perm& w, const Perm& v) {
    std::vector<int> word = canonical_word(w);
    std::vector<int> tail = canonical_word(v);
    word.insert(word.end(), tail.begin(), tail.end());
    return normalize_word(n, w.size(), word).coeff;
}

CocycleTable::CocycleTable(int n, const SymmetricGroup& group) : n_(n), group_(&group) {
    const std::size_t N = group.order();
    table_.reserve(N * N);
    trivial_.resize(N * N);
    const RingElem one = RingElem::one(n, group.degree());
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v) {
            table_.push_back(cocycle(n, group.element(w), group.element(v)));
            trivial_[w * N + v] = table_.back() == one;
        }
}

std::optional<std::vector<std::size_t>> cocycle_identity_violation(const CocycleTable& gamma) {
    const SymmetricGroup& G = gamma.group();
    const std::size_t N = G.order();
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v)
            for (std::size_t u = 0; u < N; ++u) {
                RingElem lhs = act(G.element(w), gamma(v, u)) * gamma(w, G.mul(v, u));
                RingElem rhs = gamma(w, v) * gamma(G.mul(w, v), u);
                if (lhs != rhs) return std::vector<std::size_t>{w, v, u};
            }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> counit_violation(const CocycleTable& gamma) {
    const std::size_t N = gamma.group().order();
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v)
            if (!eps_R(gamma(w, v)).is_one()) return std::make_pair(w, v);
    return std::nullopt;
}

std::vector<GammaCell> compare_gamma_m3(int n) {
    const int m = 3;
    const RingElem one = RingElem::one(n, m);
    const RingElem t1 = t_of(n, m, 1), t2 = t_of(n, m, 2);
    const RingElem t13 = sigma(Perm::generator(m, 1), t2);
    struct Entry {
        const char* formula;
        RingElem value;
    };
    auto e = [&](const char* f) -> Entry {
        std::string s(f);
        RingElem r = one;
        if (s == "1") return {f, r};
        std::stringstream ss(s);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor == "t1") r *= t1;
            else if (factor == "t2") r *= t2;
            else r *= t13;  // "s1(t2)" or "s2(t1)"
        }
        return {f, r};
    };
    const std::vector<std::vector<int>> words = {{1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
    const std::vector<std::vector<const char*>> table = {
        {"t1", "1", "t1", "1", "t1"},
        {"1", "t2", "1", "t2", "t2"},
        {"1", "s2(t1)", "t1", "t1*s2(t1)", "t1*s2(t1)"},
        {"s1(t2)", "1", "t2*s1(t2)", "t2", "t2*s1(t2)"},
        {"t2", "t1", "t2*s1(t2)", "t1*s2(t1)", "t1*t2*s2(t1)"},
    };
    std::vector<GammaCell> cells;
    for (std::size_t r = 0; r < words.size(); ++r)
        for (std::size_t c = 0; c < words.size(); ++c) {
            Entry ex = e(table[r][c]);
            RingElem got = cocycle(n, Perm::from_word(m, words[r]), Perm::from_word(m, words[c]));
            bool ok = got == ex.value;
            cells.push_back({words[r], words[c], ex.formula, std::move(ex.value), std::move(got), ok});
        }
    return cells;
}

std::string word_str(const std::vector<int>& word, const char* letter) {
    if (word.empty()) return "id";
    std::string s;
    for (int i : word) s += letter + std::to_string(i);
    return s;
}

}  // namespace kacpal
