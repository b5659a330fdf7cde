#include "kacpal/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kacpal {

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("cyclotomic: bad division");
    IntPoly quo(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        std::int64_t c = num[k];
        quo[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (num[j] != 0) throw std::logic_error("cyclotomic: inexact division");
    return quo;
}

using Poly = CycScalar::Coeffs;

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    static std::mutex mu;
    static std::map<int, IntPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(N);
        if (it != memo.end()) return it->second;
    }
    IntPoly num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    IntPoly den{1};
    for (int d = 1; d < N; ++d)
        if (N % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    IntPoly result = poly_div_exact(num, den);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(N, result);
    return result;
}

// ---------------------------------------------------------------------------

CycContext::CycContext(int n) : n_(n) {
    phi_ = cyclotomic_polynomial(2 * n);
    degree_ = static_cast<int>(phi_.size()) - 1;
    for (int j = 0; j < degree_; ++j)
        if (phi_[j] != 0) phi_support_.push_back(j);
    // x^k mod Φ for k < N, built by repeated multiplication by x.
    IntPoly cur(degree_, 0);
    cur[0] = 1;
    for (int k = 0; k < 2 * n; ++k) {
        powers_.push_back(cur);
        std::int64_t top = cur[degree_ - 1];
        for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < degree_; ++j) cur[j] -= top * phi_[j];
    }
}

const CycContext& CycContext::get(int n) {
    if (n < 1) throw std::invalid_argument("CycContext: n must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[n];
    if (!slot) slot.reset(new CycContext(n));
    return *slot;
}

CycScalar CycContext::zero() const { return CycScalar(*this, Poly(degree_)); }

CycScalar CycContext::one() const { return from_rational(Rational(1)); }

CycScalar CycContext::from_rational(const Rational& r) const {
    Poly c(degree_);
    c[0] = r;
    return CycScalar(*this, std::move(c));
}

CycScalar CycContext::root(long e) const {
    long N = 2L * n_;
    long k = ((e % N) + N) % N;
    Poly c(degree_);
    for (int j = 0; j < degree_; ++j) c[j] = Rational(powers_[k][j]);
    return CycScalar(*this, std::move(c));
}

CycScalar CycContext::p() const { return root(1); }
CycScalar CycContext::q() const { return root(2); }

// ---------------------------------------------------------------------------

CycScalar::CycScalar(const CycContext& ctx, Coeffs coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ctx.degree())
        throw std::invalid_argument("CycScalar: coefficient vector has wrong length");
}

void CycScalar::check_same(const CycScalar& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("CycScalar: context mismatch");
}

bool CycScalar::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_.empty() || !c_[0].is_one()) return false;
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    CycScalar r = a;
    r += b;
    return r;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    CycScalar r = a;
    r -= b;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& b) {
    check_same(b);
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!b.c_[j].is_zero()) c_[j] += b.c_[j];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& b) {
    check_same(b);
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!b.c_[j].is_zero()) c_[j] -= b.c_[j];
    return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    a.check_same(b);
    const CycContext& ctx = *a.ctx_;
    const int D = ctx.degree();
    if (D == 1) return CycScalar(ctx, CycScalar::Coeffs{a.c_[0] * b.c_[0]});
    boost::container::small_vector<Rational, 8> prod(2 * D - 1);
    for (int i = 0; i < D; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < D; ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    for (int k = 2 * D - 2; k >= D; --k) {
        if (prod[k].is_zero()) continue;
        const Rational c = prod[k];
        for (int j : ctx.phi_support()) prod[k - D + j] -= c * Rational(ctx.phi()[j]);
    }
    CycScalar::Coeffs out(prod.begin(), prod.begin() + D);
    return CycScalar(ctx, std::move(out));
}

CycScalar operator*(const CycScalar& a, const Rational& r) {
    CycScalar out = a;
    for (auto& x : out.c_) x *= r;
    return out;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.ctx_ != b.ctx_) {
        // detached zero placeholders compare equal to any zero
        if (!a.ctx_) return b.is_zero();
        if (!b.ctx_) return a.is_zero();
        return false;
    }
    return a.c_ == b.c_;
}

CycScalar CycScalar::inv() const {
    if (!ctx_ || is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    const CycContext& ctx = *ctx_;
    const int D = ctx.degree();
    // Extended Euclid on (Φ, a) over Q[x]: track s with s*a ≡ r (mod Φ).
    std::vector<Rational> r0(ctx.phi_.begin(), ctx.phi_.end());
    std::vector<Rational> r1(c_.begin(), c_.end());
    trim(r1);
    std::vector<Rational> s0, s1{Rational(1)};
    auto sub_mul = [](std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& c,
                      std::size_t shift) {
        if (x.size() < y.size() + shift) x.resize(y.size() + shift);
        for (std::size_t j = 0; j < y.size(); ++j) x[j + shift] -= c * y[j];
    };
    while (r1.size() > 1) {
        std::vector<Rational> quo(r0.size() - r1.size() + 1);
        std::vector<Rational> rem = r0;
        const Rational lead_inv = r1.back().inv();
        const std::size_t dr = r1.size() - 1;
        for (std::size_t k = rem.size() - 1; k >= dr; --k) {
            Rational c = rem[k] * lead_inv;
            quo[k - dr] = c;
            if (!c.is_zero()) sub_mul(rem, r1, c, k - dr);
            if (k == dr) break;
        }
        rem.resize(dr);
        trim(rem);
        std::vector<Rational> s2 = s0;
        for (std::size_t i = 0; i < quo.size(); ++i)
            if (!quo[i].is_zero()) sub_mul(s2, s1, quo[i], i);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd is not a unit");
    const Rational scale = r1[0].inv();
    // s1 may have degree >= D only transiently; reduce via multiplication by one.
    std::vector<Rational> s = s1;
    s.resize(std::max<std::size_t>(s.size(), D));
    for (std::size_t k = s.size(); k-- > static_cast<std::size_t>(D);) {
        if (s[k].is_zero()) continue;
        Rational c = s[k];
        for (int j = 0; j <= D; ++j)
            if (ctx.phi_[j] != 0) s[k - D + j] -= c * Rational(ctx.phi_[j]);
    }
    Coeffs out(D);
    for (int j = 0; j < D; ++j) out[j] = s[j] * scale;
    return CycScalar(ctx, std::move(out));
}

CycScalar CycScalar::pow(long e) const {
    if (!ctx_) throw std::invalid_argument("CycScalar::pow on detached scalar");
    CycScalar base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CycScalar acc = ctx_->one();
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string CycScalar::str() const {
    if (!ctx_ || is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const Rational& c = c_[j];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << mag;
        } else {
            if (!mag.is_one()) os << mag << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.str(); }

}  // namespace kacpal
