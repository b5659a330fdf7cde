#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kacpal/base_ring.hpp"

namespace kacpal {

/// Raised when a candidate twist is not a unit; distinct from a "false" verdict.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Verdict of one predicate. On failure `witness` names the first basis tuple
/// where the two sides differ, with both coefficients.
struct TwistResult {
    bool holds = true;
    std::string condition;
    std::optional<std::string> witness;
    explicit operator bool() const { return holds; }
};

/// First differing component of two tensors with legs of `block` slots, if any.
std::optional<std::string> first_difference(const RingElem& lhs, const RingElem& rhs, int block);

/// The twist equation (Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J) and both counit
/// normalisations for J in A⊗A with A = K[Z_n^block]. Throws NotInvertible.
TwistResult is_twist(const RingElem& J, int block = 1);

/// (e_1^2 ⊗ e_2^2)(J) is a twist for A⊗A.
TwistResult is_strong_twist(const RingElem& J, int block = 1);

/// Δ_{A⊗A}(J) = (e_1^2⊗e_2^2)(J) (e_2^2⊗e_1^2)(J) (J⊗J).
TwistResult is_superstrong(const RingElem& J, int block = 1);

/// (S⊗S)(J) = J and (S⊗id)(J) = J^{-1} = (id⊗S)(J). Throws NotInvertible.
TwistResult antipode_conditions(const RingElem& J, int block = 1);

/// is_twist for (e_i^m ⊗ e_j^m)(J) in R⊗R with the canonical J, 1 <= i < j <= m.
TwistResult embedded_twist(int n, int i, int j, int m);

/// Randomised exploration of twists on K Z_n that may or may not satisfy the
/// strong condition. Candidates are Σ χ(k,l) e_k ⊗ e_l with χ a bicharacter
/// times a coboundary, plus unstructured χ as controls. Every candidate is
/// central because K Z_n is commutative.
struct TwistSearchReport {
    int n = 0;
    std::uint64_t seed = 0;
    int candidates = 0;
    int invertible = 0;
    int twists = 0;
    int strong = 0;
    int twist_not_strong = 0;
    int strong_not_twist = 0;
    std::vector<std::string> examples;  // twists that are not strong, if any
};
TwistSearchReport twist_search(int n, int count, std::uint64_t seed);

}  // namespace kacpal
