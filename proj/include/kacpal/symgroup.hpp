#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kacpal/base_ring.hpp"
#include "kacpal/perm.hpp"

namespace kacpal {

/// A word rewritten to coeff · w̄ with w̄ the canonical basis element.
struct NormalizedWord {
    RingElem coeff;
    Perm perm;
};

/// Rewrites s̄_{i_1} ⋯ s̄_{i_k} (1-based letters) using the braid relations and
/// s̄_i² = t_i. Letters are absorbed one at a time into a reduced prefix u; when
/// u s_i is shorter than u the pair collapses and contributes act(u s_i)(t_i).
NormalizedWord normalize_word(int n, int m, const std::vector<int>& word);

/// γ(w, v), defined by w̄ v̄ = γ(w, v) (wv)‾.
RingElem cocycle(int n, const Perm& w, const Perm& v);

/// All values γ(w, v) for w, v in Σ_m, indexed by SymmetricGroup indices.
class CocycleTable {
public:
    CocycleTable(int n, const SymmetricGroup& group);

    int n() const { return n_; }
    const SymmetricGroup& group() const { return *group_; }
    const RingElem& operator()(std::size_t w, std::size_t v) const { return table_[w * group_->order() + v]; }
    bool is_trivial(std::size_t w, std::size_t v) const { return trivial_[w * group_->order() + v]; }

private:
    int n_;
    const SymmetricGroup* group_;
    std::vector<RingElem> table_;
    std::vector<bool> trivial_;
};

/// First triple (w, v, u) violating act(w)(γ(v,u)) γ(w,vu) = γ(w,v) γ(wv,u), if any.
std::optional<std::vector<std::size_t>> cocycle_identity_violation(const CocycleTable& gamma);

/// First pair with ε(γ(w,v)) ≠ 1, if any.
std::optional<std::pair<std::size_t, std::size_t>> counit_violation(const CocycleTable& gamma);

/// One cell of the m = 3 table written in terms of t_1, t_2 and σ_1(t_2) = σ_2(t_1).
struct GammaCell {
    std::vector<int> w, v;     // canonical words
    std::string formula;       // e.g. "t1*s1(t2)"
    RingElem expected, computed;
    bool match;
};

/// Cell-by-cell comparison of the computed cocycle against the closed-form m = 3 table.
std::vector<GammaCell> compare_gamma_m3(int n);

/// Human readable word such as "s1s2", or "id".
std::string word_str(const std::vector<int>& word, const char* letter = "s");

}  // namespace kacpal
