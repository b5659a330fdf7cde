#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kacpal/hopf.hpp"
#include "kacpal/linalg.hpp"
#include "kacpal/rep.hpp"

namespace kacpal {

/// r_{ij} with r_{ii} = 1, r_{ij} = λ^{j-i-1} μ for i < j, r_{ji} = r_{ij}^{-1};
/// λ = q^{b²-ab}, μ = p^{b²-a²}. Indices 0-based.
using RMatrix = std::vector<std::vector<CycScalar>>;
RMatrix r_matrix(int n, int m, int a, int b);

/// Monomials ordered by degree, then lexicographically descending
/// (u_1^2 before u_1u_2 before u_2^2).
struct MonomialOrder {
    bool operator()(const ExpVec& x, const ExpVec& y) const;
};

/// Degree-k monomials of m variables in MonomialOrder.
std::vector<ExpVec> monomials(int m, int k);

/// Σ c_α u^α in normal order u_1^{α_1} ⋯ u_m^{α_m}; no stored zeros.
class QpaElem {
public:
    using Terms = std::map<ExpVec, CycScalar, MonomialOrder>;

    explicit QpaElem(int n) : n_(n) {}
    static QpaElem monomial(int n, const ExpVec& alpha, const CycScalar& c);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycScalar coeff(const ExpVec& alpha) const;

    void add(const ExpVec& alpha, const CycScalar& c);
    QpaElem scaled(const CycScalar& c) const;
    friend QpaElem operator+(const QpaElem& x, const QpaElem& y);
    friend QpaElem operator-(const QpaElem& x, const QpaElem& y);
    friend bool operator==(const QpaElem& x, const QpaElem& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const QpaElem& x, const QpaElem& y) { return !(x == y); }

    /// e.g. "u1^2 + (z^2)*u1*u2"
    std::string str() const;

private:
    int n_;
    Terms terms_;
};

/// A_{a,b} = K⟨u_1..u_m⟩ / (u_i u_j − r_{ij} u_j u_i) as a left H_{n,m}-module,
/// with action tables for all degrees up to `max_degree`.
class QuantumPolynomialAlgebra {
public:
    QuantumPolynomialAlgebra(const HopfAlgebra& H, int a, int b, int max_degree);
    QuantumPolynomialAlgebra(const QuantumPolynomialAlgebra&) = delete;
    QuantumPolynomialAlgebra& operator=(const QuantumPolynomialAlgebra&) = delete;

    const HopfAlgebra& hopf() const { return *H_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int a() const { return a_; }
    int b() const { return b_; }
    int max_degree() const { return d_; }
    const RMatrix& r() const { return r_; }

    /// Product of generators u_{word[0]} ⋯ (1-based letters) in normal order.
    QpaElem normal_order(const std::vector<int>& word) const;
    QpaElem mul(const QpaElem& f, const QpaElem& g) const;

    /// (x^β w̄)·u^α = c·u^γ, for basis index `basis` of H.
    std::pair<CycScalar, ExpVec> act_basis(std::size_t basis, const ExpVec& alpha) const;
    QpaElem act(const HopfElem& h, const QpaElem& f) const;
    /// Matrix of h on the degree-k monomial space (columns are images).
    Matrix action_matrix(const HopfElem& h, int k) const;

private:
    void check_degree(int k) const;
    CycScalar character(const ExpVec& beta, const ExpVec& gamma) const;

    const HopfAlgebra* H_;
    int n_, m_, a_, b_, d_;
    RMatrix r_;
    // [w] -> monomial α -> (c, γ) with w̄·u^α = c·u^γ
    std::vector<std::map<ExpVec, std::pair<CycScalar, ExpVec>>> perm_action_;
};

// --- checks ------------------------------------------------------------------

struct QpaReport {
    int n = 0, m = 0, a = 0, b = 0, degree = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// h·(fg) = Σ (h_(1)·f)(h_(2)·g) for all generators of H and `samples` seeded basis
/// elements over all monomial pairs with deg f + deg g ≤ degree; h·1 = ε(h)1;
/// degree-1 matrices equal those of V_{a,b}; ρ_k(h₁h₂) = ρ_k(h₁)ρ_k(h₂).
QpaReport module_algebra_check(const HopfAlgebra& H, int a, int b, int degree, std::size_t samples = 8,
                               std::uint64_t seed = 42);

enum class Subalgebra { full, cyclic, base };
std::string to_string(Subalgebra s);

/// Generators of the chosen Hopf subalgebra: x_i, z_k (full); x_i, θ (cyclic); x_i (base = R).
std::vector<HopfElem> subalgebra_generators(const HopfAlgebra& H, Subalgebra s);
/// Two-sided integral of the subalgebra: (∫_B)^{⊗m} Σ w̄ over its permutations.
HopfElem subalgebra_integral(const HopfAlgebra& H, Subalgebra s);

struct InvariantSpace {
    int degree = 0;
    std::vector<QpaElem> basis;  // rows of the reduced echelon form
};

/// Common kernel of (g − ε(g)) over the generators, degree by degree.
std::vector<InvariantSpace> invariants(const QuantumPolynomialAlgebra& A, Subalgebra s);
/// Image of the integral acting on each degree (Reynolds operator); same spaces.
std::vector<InvariantSpace> reynolds_invariants(const QuantumPolynomialAlgebra& A, Subalgebra s);

/// Every R- and H-invariant is supported on exponents divisible by n (asserted when
/// gcd(det M, n) = 1), and for n even u_i^n u_j^n = u_j^n u_i^n.
QpaReport containment_check(const HopfAlgebra& H, int a, int b, int degree);

struct CyclicFaithfulReport {
    int n = 0, m = 0;
    bool block_structure = false;  // R preserves each K u_j and θ^i u_j ∈ K u_{s^i(j)} with distinct lines
    bool r_inner_faithful = false;
    bool inner_faithful = false;
    std::string witness;
};

/// Inner-faithfulness of R #_γ ⟨s⟩ on A_{1,0}. With `theta_identity` the
/// degree-1 action of θ is replaced by the identity (negative control).
CyclicFaithfulReport cyclic_inner_faithful_check(int n, int m, bool theta_identity = false);

}  // namespace kacpal
