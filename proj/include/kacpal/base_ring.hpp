#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kacpal/cyclotomic.hpp"
#include "kacpal/perm.hpp"

namespace kacpal {

/// Exponent vector of a monomial x_1^{α_1} ... x_d^{α_d}, entries in [0, n).
using ExpVec = std::vector<int>;

/// A group homomorphism Z_n^src -> Z_n^dst, stored as a sparse integer matrix.
/// Every structure map of the group algebra used here (slot permutations,
/// embeddings, Δ, ε and S on tensor legs, multiplication of legs) is of this form.
class SlotMap {
public:
    SlotMap(int src, int dst);
    static SlotMap identity(int d);

    /// β_dst += coef * α_src
    SlotMap& add(int dst_slot, int src_slot, int coef = 1);

    int src() const { return src_; }
    int dst() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::pair<int, int>>& row(int dst_slot) const { return rows_[dst_slot]; }

    /// Composition: (*this) after `first`.
    SlotMap after(const SlotMap& first) const;

private:
    int src_;
    std::vector<std::vector<std::pair<int, int>>> rows_;
};

/// Element of the group algebra K[Z_n^d] with K = Q(ζ_{2n}).
///
/// With d = m this is R = (K Z_n)^{⊗m}; with d = k·m it is R^{⊗k}, leg l
/// occupying slots [l·m, (l+1)·m). Terms are kept sorted by exponent vector
/// (lexicographic) with no stored zeros, so the representation is canonical.
class RingElem {
public:
    using Key = std::uint64_t;
    using Term = std::pair<Key, CycScalar>;

    RingElem(int n, int slots);
    static RingElem one(int n, int slots);
    static RingElem scalar(int n, int slots, const CycScalar& c);
    static RingElem monomial(int n, const ExpVec& exps);
    static RingElem monomial(int n, const ExpVec& exps, const CycScalar& c);
    /// x_slot^power in K[Z_n^slots]; slot is 1-based.
    static RingElem variable(int n, int slots, int slot, int power = 1);

    int n() const { return n_; }
    int slots() const { return slots_; }
    const CycContext& field() const { return *field_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    ExpVec exponents(Key key) const;
    Key key_of(const ExpVec& exps) const;
    CycScalar coeff(const ExpVec& exps) const;

    RingElem operator-() const;
    RingElem scaled(const CycScalar& c) const;
    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
    RingElem& operator*=(const RingElem& b) { return *this = *this * b; }
    friend bool operator==(const RingElem& a, const RingElem& b);
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    /// Multiply by the monomial x^shift (cheap: relabels keys).
    RingElem shifted(const ExpVec& shift) const;

    /// Image under the algebra map induced by a group homomorphism.
    RingElem mapped(const SlotMap& map) const;

    /// Sum of all coefficients (the counit of the group algebra).
    CycScalar augmentation() const;
    /// Value of the character x^α -> q^{α·β}.
    CycScalar character(const ExpVec& beta) const;
    bool is_invertible() const;
    /// Inverse computed through the character table; throws if not a unit.
    RingElem inverse() const;

    /// Readable form, e.g. "1/2*x1^0x2^1 + ..."; slot names x1..xd.
    std::string str() const;

private:
    friend class RingAccumulator;
    void check_compatible(const RingElem& o) const;

    int n_;
    int slots_;
    const CycContext* field_;
    std::vector<Key> place_;  // place value of each slot in the key
    std::vector<Term> terms_;
};

/// Collects scaled monomials and produces a canonical RingElem.
class RingAccumulator {
public:
    RingAccumulator(int n, int slots);
    void add(RingElem::Key key, const CycScalar& c);
    void add(const RingElem& e);
    RingElem finish();

private:
    RingElem shape_;
    std::vector<RingElem::Term> pending_;
};

// --- Base Hopf algebra B = K Z_n and R = B^{⊗m} ------------------------------

/// e_k = (1/n) Σ_i q^{-ik} x^i in B.
RingElem idempotent(int n, int k);

/// Place a B-element into tensor slot `slot` (1-based) of B^{⊗m}.
RingElem embed(int m, int slot, const RingElem& b);

/// Literal slot permutation: slot i of the result holds slot w(i) of `a`.
/// Satisfies sigma(w, sigma(v, a)) == sigma(v * w, a).
RingElem sigma(const Perm& w, const RingElem& a);

/// The automorphism attached to w̄ in the crossed product: x_j -> x_{w(j)}.
/// Equals sigma(w^{-1}, ·), and act(w)∘act(v) = act(w v).
RingElem act(const Perm& w, const RingElem& a);
ExpVec act(const Perm& w, const ExpVec& exps);
SlotMap act_map(const Perm& w);

/// J = Σ_k e_k ⊗ x^k in B ⊗ B (2 slots).
RingElem twist_J(int n);
/// (e_i^m ⊗ e_j^m)(J) in R ⊗ R (2m slots), 1-based i, j.
RingElem twist_embedded(int n, int m, int i, int j);
/// J_k = (e_k^m ⊗ e_{k+1}^m)(J).
RingElem twist_Js(int n, int m, int k);
/// t_k = μ_R(J_k).
RingElem t_of(int n, int m, int k);
/// t_k^{-1} = (1/n) Σ q^{-ij} x_k^i x_{k+1}^{-j}.
RingElem t_inv_of(int n, int m, int k);

RingElem delta_R(const RingElem& a);
CycScalar eps_R(const RingElem& a);
RingElem antipode_R(const RingElem& a);
/// μ_R on R ⊗ R (2m slots) with block size m.
RingElem mu_R(const RingElem& a, int m);

// --- k-fold tensor powers of a group algebra with `block` slots per leg ------

/// a ⊗ b, concatenating slots.
RingElem tensor(const RingElem& a, const RingElem& b);
/// Apply Δ to leg `leg` of a k-fold tensor (result has k+1 legs).
RingElem delta_on_leg(const RingElem& a, int block, int leg);
/// Apply ε to leg `leg` (result has k-1 legs).
RingElem counit_on_leg(const RingElem& a, int block, int leg);
/// Apply S to leg `leg`.
RingElem antipode_on_leg(const RingElem& a, int block, int leg);
/// Place a one-leg element into leg `leg` of a k-fold tensor.
RingElem embed_leg(const RingElem& b, int k, int leg);
/// Apply act(perms[l]) on leg l; block size = perm degree.
RingElem act_on_legs(const std::vector<Perm>& perms, const RingElem& a);
SlotMap act_on_legs_map(const std::vector<Perm>& perms);

}  // namespace kacpal
