#include "kacpal/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kacpal {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= size() || seen[x]) throw std::invalid_argument("Perm: not a bijection");
        seen[x] = true;
    }
}

Perm Perm::identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::generator(int m, int k) {
    if (k < 1 || k >= m) throw std::out_of_range("Perm::generator: index out of range");
    Perm p = identity(m);
    std::swap(p.img_[k - 1], p.img_[k]);
    return p;
}

Perm Perm::long_cycle(int m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = (i + 1) % m;
    return Perm(std::move(img));
}

Perm Perm::from_word(int m, const std::vector<int>& word) {
    Perm p = identity(m);
    for (int k : word) p = p * generator(m, k);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Perm(std::move(inv));
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm operator*(const Perm& w, const Perm& v) {
    if (w.size() != v.size()) throw std::invalid_argument("Perm: degree mismatch");
    std::vector<int> img(v.size());
    for (int i = 0; i < v.size(); ++i) img[i] = w.img_[v.img_[i]];
    Perm r;
    r.img_ = std::move(img);
    return r;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << img_[i] + 1;
    os << "]";
    return os.str();
}

std::vector<int> canonical_word(const Perm& w) {
    const int m = w.size();
    Perm cur = w;
    std::vector<std::vector<int>> blocks;  // c_{m-1}, ..., c_1
    for (int k = m - 1; k >= 1; --k) {
        // 1-based position j with cur^{-1}(k+1) = j; c_k = s_k s_{k-1} ... s_j
        int j = cur.inverse()(k) + 1;
        std::vector<int> block;
        for (int l = k; l >= j; --l) block.push_back(l);
        cur = cur * Perm::from_word(m, block).inverse();
        blocks.push_back(std::move(block));
    }
    std::vector<int> word;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        word.insert(word.end(), it->begin(), it->end());
    return word;
}

std::uint64_t SymmetricGroup::encode(const std::vector<int>& img) {
    std::uint64_t key = 0;
    for (int x : img) key = key * 16 + static_cast<std::uint64_t>(x);
    return key;
}

SymmetricGroup::SymmetricGroup(int m) : m_(m) {
    if (m < 1 || m > 8) throw std::out_of_range("SymmetricGroup: degree must be in [1, 8]");
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    do {
        index_.emplace(encode(img), elems_.size());
        elems_.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    const std::size_t N = elems_.size();
    table_.resize(N * N);
    inv_.resize(N);
    len_.resize(N);
    words_.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) table_[a * N + b] = index_of(elems_[a] * elems_[b]);
        inv_[a] = index_of(elems_[a].inverse());
        len_[a] = elems_[a].length();
        words_[a] = canonical_word(elems_[a]);
    }
    id_ = index_of(Perm::identity(m));
    for (int k = 1; k < m; ++k) gens_.push_back(index_of(Perm::generator(m, k)));
}

std::size_t SymmetricGroup::index_of(const Perm& w) const {
    if (w.size() != m_) throw std::invalid_argument("SymmetricGroup: degree mismatch");
    return index_.at(encode(w.images()));
}

}  // namespace kacpal
