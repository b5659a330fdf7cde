#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kacpal/base_ring.hpp"
#include "kacpal/perm.hpp"
#include "kacpal/symgroup.hpp"

namespace kacpal {

/// Deliberate corruptions of the structure maps, used as negative controls.
struct Mutation {
    bool drop_cocycle = false;  // γ := 1 everywhere (the plain smash product)
    bool drop_twist = false;    // J(w) := 1⊗1, i.e. Δ(w̄) = w̄⊗w̄
    std::optional<std::pair<std::size_t, std::size_t>> drop_gamma_cell;  // γ(w,v) := 1 for one pair
};

/// Element of H^{⊗k}: Σ r_{(w_1..w_k)} (w̄_1 ⊗ ⋯ ⊗ w̄_k) with r in R^{⊗k}
/// (k·m slots) written on the left. Arity 1 is an element of H.
class HopfTensor {
public:
    using Index = std::vector<std::uint16_t>;  // SymmetricGroup indices, one per leg

    HopfTensor(int n, int m, int arity);

    int n() const { return n_; }
    int m() const { return m_; }
    int arity() const { return arity_; }
    const std::map<Index, RingElem>& components() const { return comps_; }
    RingElem component(const Index& idx) const;

    bool is_zero() const { return comps_.empty(); }
    /// Number of nonzero basis coefficients.
    std::size_t term_count() const;

    /// Adds r·(w̄_1 ⊗ ⋯ ⊗ w̄_k); zero components are dropped.
    void add(const Index& idx, const RingElem& r);
    HopfTensor scaled(const CycScalar& c) const;
    friend HopfTensor operator+(const HopfTensor& a, const HopfTensor& b);
    friend HopfTensor operator-(const HopfTensor& a, const HopfTensor& b);
    friend bool operator==(const HopfTensor& a, const HopfTensor& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const HopfTensor& a, const HopfTensor& b) { return !(a == b); }

private:
    void check_shape(const HopfTensor& o) const;

    int n_, m_, arity_;
    std::map<Index, RingElem> comps_;
};

using HopfElem = HopfTensor;

/// H_{n,m} = K Z_n^{⊗m} #_γ Σ_m with basis x^α w̄; basis index is w·n^m + key(α),
/// where w is the SymmetricGroup index and key(α) the mixed-radix exponent code.
class HopfAlgebra {
public:
    HopfAlgebra(int n, int m, Mutation mutation = {});
    HopfAlgebra(const HopfAlgebra&) = delete;
    HopfAlgebra& operator=(const HopfAlgebra&) = delete;

    int n() const { return n_; }
    int m() const { return m_; }
    std::size_t ring_dim() const { return ring_dim_; }
    std::size_t dim() const { return ring_dim_ * group_.order(); }
    const SymmetricGroup& group() const { return group_; }
    const Mutation& mutation() const { return mutation_; }

    /// γ(w,v) and J(w) as used by the structure maps (mutations applied).
    const RingElem& gamma(std::size_t w, std::size_t v) const { return gamma_[w * group_.order() + v]; }
    const RingElem& twist_of(std::size_t w) const { return J_[w]; }

    HopfElem zero(int arity = 1) const { return HopfTensor(n_, m_, arity); }
    HopfElem one() const;
    HopfElem basis(std::size_t b) const;
    HopfElem element(const RingElem& a, std::size_t w) const;
    HopfElem from_ring(const RingElem& a) const { return element(a, group_.identity_index()); }
    HopfElem x(int i) const;
    HopfElem z(int k) const;
    /// z_{i_1} ⋯ z_{i_k} computed with the product.
    HopfElem z_word(const std::vector<int>& word) const;
    std::string basis_label(std::size_t b) const;
    std::size_t perm_of_basis(std::size_t b) const { return b / ring_dim_; }
    ExpVec exponents_of_basis(std::size_t b) const;

    HopfTensor tensor(const HopfTensor& a, const HopfTensor& b) const;
    /// Product in H^{⊗k}, legwise.
    HopfTensor mul(const HopfTensor& a, const HopfTensor& b) const;
    HopfTensor coproduct(const HopfElem& h) const;
    /// Δ applied to leg `leg` of an arity-k tensor.
    HopfTensor delta_on_leg(const HopfTensor& t, int leg) const;
    HopfTensor counit_on_leg(const HopfTensor& t, int leg) const;
    CycScalar counit(const HopfElem& h) const;
    HopfElem antipode(const HopfElem& h) const;
    const HopfElem& antipode_of_perm(std::size_t w) const { return S_bar_[w]; }
    /// μ∘(S⊗id) and μ∘(id⊗S) on H⊗H.
    HopfElem mu_S_id(const HopfTensor& t) const;
    HopfElem mu_id_S(const HopfTensor& t) const;

    /// Λ = (∫_B)^{⊗m} Σ_w w̄ with ∫_B = (1/n) Σ_i x^i.
    HopfElem integral() const;

    /// Human readable form.
    std::string str(const HopfTensor& t) const;
    /// First differing coefficient of two tensors, if any.
    std::optional<std::string> difference(const HopfTensor& a, const HopfTensor& b) const;

private:
    const RingElem& gamma_leg(int arity, int leg, std::size_t w, std::size_t v, RingElem& scratch) const;

    int n_, m_;
    std::size_t ring_dim_;
    Mutation mutation_;
    SymmetricGroup group_;
    std::vector<RingElem> gamma_;
    std::vector<bool> gamma_trivial_;
    std::vector<RingElem> J_;
    std::vector<std::vector<RingElem>> gamma_legs2_;  // [leg][w*N+v] embedded in H⊗H
    std::vector<HopfElem> S_bar_;
};

// --- verification ------------------------------------------------------------

/// Outcome of one exact check.
struct CheckResult {
    std::string name;
    std::string anchor;  // identity being verified, in words
    bool pass = true;
    std::size_t checked = 0;
    std::string witness;
    double seconds = 0;
};

/// all = every pair/triple of basis elements; otherwise `samples` seeded random
/// pairs and triples plus every pair and triple of algebra generators.
struct Scope {
    bool all = true;
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    static Scope default_for(std::size_t dim, std::uint64_t seed = 42);
    std::string str() const;
};

struct AxiomReport {
    int n = 0, m = 0;
    std::size_t dim = 0;
    Scope scope;
    std::vector<CheckResult> checks;
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

AxiomReport verify_hopf_axioms(const HopfAlgebra& H, const Scope& scope);

/// hΛ = ε(h)Λ = Λh for all basis h, and ε(Λ) = m!.
std::vector<CheckResult> verify_integral(const HopfAlgebra& H);

/// Checks on H' = R #_γ ⟨s⟩ with s = (1 2 ⋯ m) and θ = s̄.
struct CyclicReport {
    std::size_t dim = 0;
    RingElem t{2, 0};  // θ^m, set by the check
    std::vector<CheckResult> checks;
    bool passed() const;
};
CyclicReport verify_cyclic_subalgebra(const HopfAlgebra& H);

/// Indices of the powers of the m-cycle in SymmetricGroup order s^0, s^1, ...
std::vector<std::size_t> cyclic_perms(const SymmetricGroup& G);

/// x_i ↦ x_i', z_i ↦ z_i' from H_{n,m} into H_{n,m+1}: intertwines product,
/// coproduct, counit and antipode on all basis elements.
std::vector<CheckResult> embedding_check(int n, int m);

}  // namespace kacpal
