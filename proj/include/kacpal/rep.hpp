#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kacpal/hopf.hpp"
#include "kacpal/linalg.hpp"

namespace kacpal {

/// Refusal to run an enumeration beyond its configured size.
class SizeGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The m-dimensional module V_{a,b}: x_i acts by X_i, z_k by Z_k.
struct Representation {
    int n = 0, m = 0, a = 0, b = 0;
    std::vector<Matrix> X;  // X[i-1] for x_i
    std::vector<Matrix> Z;  // Z[k-1] for z_k
};

/// X_i = diag(q^b, ..., q^a (row i), ..., q^b); Z_k = p^{b²} on the diagonal
/// except the (k, k+1) block [[0, 1], [q^{ab}, 0]].
Representation build_rep(int n, int m, int a, int b);

/// Image of the monomial x^α.
Matrix rho_monomial(const Representation& V, const ExpVec& alpha);
/// Image of an element of R.
Matrix rho_ring(const Representation& V, const RingElem& r);
/// Image of an element of H: x^α w̄ ↦ X^α Z_{i_1} ⋯ Z_{i_k} along the canonical word.
Matrix rho(const HopfAlgebra& H, const Representation& V, const HopfElem& h);

/// Defining relations of H_{n,m} evaluated on the matrices.
std::vector<CheckResult> verify_rep(const Representation& V);

/// ρ(h₁h₂) = ρ(h₁)ρ(h₂) on seeded random basis pairs and all generator pairs.
CheckResult verify_rep_homomorphism(const HopfAlgebra& H, const Representation& V, std::size_t samples,
                                    std::uint64_t seed);

/// Dimension of the algebra generated by the X_i and Z_k.
std::size_t span_dimension(const Representation& V);
/// Burnside: simple iff the generated algebra is all of M_m(K).
bool is_simple(const Representation& V);

/// Exists an invertible T with T ρ_1(g) = ρ_2(g) T for every generator g.
bool modules_isomorphic(const Representation& V1, const Representation& V2);
/// Dimension of the intertwiner space Hom_H(V1, V2).
std::size_t intertwiner_dimension(const Representation& V1, const Representation& V2);

/// M_{m,a,b}: a on the diagonal, b elsewhere.
std::vector<std::vector<std::int64_t>> matrix_M(int m, std::int64_t a, std::int64_t b);
/// Exact integer determinant (fraction-free elimination).
std::int64_t det_M(int m, std::int64_t a, std::int64_t b);
/// gcd(det M_{m,a,b}, n) = 1.
bool inner_faithful_criterion(int n, int m, int a, int b);

struct BruteForceResult {
    bool inner_faithful = false;
    std::size_t subgroup_count = 0;
    /// Every subgroup of Z_n^m acting trivially on V, as sorted element lists.
    std::vector<std::vector<ExpVec>> annihilating;
};

/// Enumerates all subgroups of Z_n^m and reports those acting as the identity.
/// Throws SizeGuard when n^m > 4096 or the subgroup lattice exceeds `max_subgroups`.
BruteForceResult inner_faithful_bruteforce(int n, int m, int a, int b, std::size_t max_subgroups = 200000);

}  // namespace kacpal
