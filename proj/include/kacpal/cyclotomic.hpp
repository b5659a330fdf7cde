#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "kacpal/rational.hpp"

namespace kacpal {

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
/// Obtained by exact division of x^N - 1 by Φ_d for every proper divisor d.
std::vector<std::int64_t> cyclotomic_polynomial(int N);

class CycScalar;

/// The field Q(ζ) with ζ a primitive N-th root of unity, N = 2n.
///
/// Contexts are interned for the lifetime of the process; scalars keep a raw
/// pointer to theirs, so `CycContext::get(n)` is the only way to make one.
class CycContext {
public:
    static const CycContext& get(int n);

    int n() const { return n_; }
    int N() const { return 2 * n_; }
    int degree() const { return degree_; }
    const std::vector<std::int64_t>& phi() const { return phi_; }
    const std::vector<int>& phi_support() const { return phi_support_; }

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar from_rational(const Rational& r) const;
    /// ζ^e; root(1) is the square root p, root(2) is q.
    CycScalar root(long e) const;
    CycScalar p() const;
    CycScalar q() const;

    CycContext(const CycContext&) = delete;
    CycContext& operator=(const CycContext&) = delete;

private:
    explicit CycContext(int n);
    friend class CycScalar;

    int n_;
    int degree_;
    std::vector<std::int64_t> phi_;
    std::vector<int> phi_support_;  // indices j < degree with phi[j] != 0
    // x^k mod Φ_N for k in [0, N), as integer coefficient vectors.
    std::vector<std::vector<std::int64_t>> powers_;
};

/// An element of Q(ζ_N) in the power basis 1, ζ, ..., ζ^{φ(N)-1}.
class CycScalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    CycScalar() = default;  // detached zero; only useful as a placeholder
    CycScalar(const CycContext& ctx, Coeffs coeffs);

    const CycContext& context() const { return *ctx_; }
    const Coeffs& coeffs() const { return c_; }
    bool attached() const { return ctx_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q.
    bool is_rational() const;

    CycScalar operator-() const;
    CycScalar inv() const;
    CycScalar pow(long e) const;

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const Rational& r);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inv(); }
    CycScalar& operator+=(const CycScalar& b);
    CycScalar& operator-=(const CycScalar& b);
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Human readable form, e.g. "1/2 - 1/2*z^2" with z = ζ_N.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CycScalar& s);

private:
    void check_same(const CycScalar& o) const;

    const CycContext* ctx_ = nullptr;
    Coeffs c_;
};

}  // namespace kacpal
