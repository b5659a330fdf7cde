#include "kacpal/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace kacpal {

namespace {

using i128 = __int128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits(i128 v) { return v > -kSmallLimit && v < kSmallLimit; }

std::uint64_t abs_u(std::int64_t v) {
    return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(std::gcd(abs_u(a), abs_u(b)));
}

mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Rational::Rational(std::int64_t v) {
    if (fits(v)) {
        num_ = v;
    } else {
        *this = from_mpq(mpq_class(to_mpz(v)));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long nl = n.get_si();
        long dl = d.get_si();
        if (fits(nl) && fits(dl)) {
            r.num_ = nl;
            r.den_ = dl;
            return r;
        }
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return from_mpq(q);
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : to_mpz(den_); }

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return from_mpq(1 / *big_);
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Rational r;
    if (a.den_ == b.den_) {
        i128 num = i128(a.num_) + b.num_;
        if (num == 0) return r;
        std::int64_t g = static_cast<std::int64_t>(std::gcd(
            static_cast<std::uint64_t>(num < 0 ? -num : num) % std::uint64_t(a.den_),
            std::uint64_t(a.den_)));
        num /= g;
        if (!fits(num)) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = a.den_ / g;
        return r;
    }
    std::int64_t g = gcd64(a.den_, b.den_);
    i128 t = i128(a.num_) * (b.den_ / g) + i128(b.num_) * (a.den_ / g);
    if (t == 0) return r;
    i128 den = i128(a.den_ / g) * b.den_;
    if (g > 1) {
        i128 tm = t % g;
        if (tm < 0) tm = -tm;
        std::int64_t g2 = static_cast<std::int64_t>(std::gcd(std::uint64_t(tm), std::uint64_t(g)));
        if (g2 == 0) g2 = g;
        t /= g2;
        den /= g2;
    }
    if (fits(t) && fits(den)) {
        r.num_ = static_cast<std::int64_t>(t);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    Rational r;
    if (a.num_ == 0 || b.num_ == 0) return r;
    if (a.den_ == 1 && b.den_ == 1) {
        i128 p = i128(a.num_) * b.num_;
        if (fits(p)) {
            r.num_ = static_cast<std::int64_t>(p);
            return r;
        }
        return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    }
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    i128 num = i128(a.num_ / g1) * (b.num_ / g2);
    i128 den = i128(a.den_ / g2) * (b.den_ / g1);
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;  // canonical: big never fits small
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace kacpal
