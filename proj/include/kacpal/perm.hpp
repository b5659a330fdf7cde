#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace kacpal {

/// A permutation of {0, ..., m-1}; composition is (w * v)(i) = w(v(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int m);
    /// The Coxeter generator s_k = (k, k+1), k in [1, m-1].
    static Perm generator(int m, int k);
    /// The m-cycle 1 -> 2 -> ... -> m -> 1.
    static Perm long_cycle(int m);
    /// Product of the letters s_{w[0]} s_{w[1]} ... (1-based letters).
    static Perm from_word(int m, const std::vector<int>& word);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    /// Coxeter length, i.e. the number of inversions.
    int length() const;
    bool is_identity() const;

    friend Perm operator*(const Perm& w, const Perm& v);
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    /// One-line notation with 1-based images, e.g. "[2,3,1]".
    std::string str() const;

private:
    std::vector<int> img_;
};

/// Canonical reduced word (1-based letters) in staircase form c_1 c_2 ... c_{m-1},
/// with c_k one of ε, s_k, s_k s_{k-1}, ..., s_k ... s_1.
std::vector<int> canonical_word(const Perm& w);

/// Σ_m with all elements enumerated and multiplication tabulated.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int m);

    int degree() const { return m_; }
    std::size_t order() const { return elems_.size(); }
    const Perm& element(std::size_t idx) const { return elems_[idx]; }
    std::size_t index_of(const Perm& w) const;
    std::size_t identity_index() const { return id_; }

    std::size_t mul(std::size_t w, std::size_t v) const { return table_[w * elems_.size() + v]; }
    std::size_t inverse(std::size_t w) const { return inv_[w]; }
    int length(std::size_t w) const { return len_[w]; }
    const std::vector<int>& word(std::size_t w) const { return words_[w]; }
    std::size_t generator_index(int k) const { return gens_[k - 1]; }

private:
    static std::uint64_t encode(const std::vector<int>& img);

    int m_;
    std::vector<Perm> elems_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::size_t> table_, inv_, gens_;
    std::vector<int> len_;
    std::vector<std::vector<int>> words_;
    std::size_t id_ = 0;
};

}  // namespace kacpal
