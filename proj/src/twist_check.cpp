#include "kacpal/twist_check.hpp"

#include <random>
#include <sstream>

namespace kacpal {

namespace {

std::string describe_key(const RingElem& shape, RingElem::Key key, int block) {
    ExpVec e = shape.exponents(key);
    std::ostringstream os;
    for (std::size_t s = 0; s < e.size(); ++s) {
        if (s && s % block == 0) os << " ⊗ ";
        else if (s) os << ",";
        if (s % block == 0) os << "x^(";
        os << e[s];
        if ((s + 1) % block == 0) os << ")";
    }
    return os.str();
}

TwistResult verdict(std::string condition, const RingElem& lhs, const RingElem& rhs, int block) {
    TwistResult r;
    r.condition = std::move(condition);
    r.witness = first_difference(lhs, rhs, block);
    r.holds = !r.witness;
    return r;
}

void require_invertible(const RingElem& J) {
    if (!J.is_invertible()) throw NotInvertible("candidate twist is not invertible");
}

// (e_1^2 ⊗ e_2^2)(J): legs (a, 1) and (1, b) of A⊗A.
RingElem strong_embedding(const RingElem& J, int block) {
    SlotMap map(2 * block, 4 * block);
    for (int s = 0; s < block; ++s) map.add(s, s).add(3 * block + s, block + s);
    return J.mapped(map);
}

RingElem flipped_embedding(const RingElem& J, int block) {
    SlotMap map(2 * block, 4 * block);
    for (int s = 0; s < block; ++s) map.add(block + s, s).add(2 * block + s, block + s);
    return J.mapped(map);
}

}  // namespace

std::optional<std::string> first_difference(const RingElem& lhs, const RingElem& rhs, int block) {
    if (lhs == rhs) return std::nullopt;
    const auto& a = lhs.terms();
    const auto& b = rhs.terms();
    std::size_t i = 0, j = 0;
    const CycContext& F = lhs.field();
    while (i < a.size() || j < b.size()) {
        RingElem::Key key;
        CycScalar ca = F.zero(), cb = F.zero();
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            key = a[i].first;
            ca = a[i++].second;
        } else if (i == a.size() || b[j].first < a[i].first) {
            key = b[j].first;
            cb = b[j++].second;
        } else {
            key = a[i].first;
            ca = a[i++].second;
            cb = b[j++].second;
        }
        if (ca != cb) {
            std::ostringstream os;
            os << describe_key(lhs, key, block) << ": lhs " << ca.str() << ", rhs " << cb.str();
            return os.str();
        }
    }
    return std::string("shapes differ");
}

TwistResult is_twist(const RingElem& J, int block) {
    require_invertible(J);
    const int n = J.n();
    const RingElem one = RingElem::one(n, block);
    RingElem lhs = delta_on_leg(J, block, 0) * tensor(J, one);
    RingElem rhs = delta_on_leg(J, block, 1) * tensor(one, J);
    TwistResult r = verdict("twist equation", lhs, rhs, block);
    if (!r) return r;
    r = verdict("counit on first leg", counit_on_leg(J, block, 0), one, block);
    if (!r) return r;
    r = verdict("counit on second leg", counit_on_leg(J, block, 1), one, block);
    if (!r) return r;
    r.condition = "twist";
    return r;
}

TwistResult is_strong_twist(const RingElem& J, int block) {
    TwistResult r = is_twist(strong_embedding(J, block), 2 * block);
    r.condition = r ? "strong twist" : "strong twist: " + r.condition;
    return r;
}

TwistResult is_superstrong(const RingElem& J, int block) {
    RingElem lhs = delta_on_leg(J, 2 * block, 0);
    RingElem rhs = strong_embedding(J, block) * flipped_embedding(J, block) * tensor(J, J);
    return verdict("superstrong", lhs, rhs, block);
}

TwistResult antipode_conditions(const RingElem& J, int block) {
    require_invertible(J);
    const RingElem one = RingElem::one(J.n(), 2 * block);
    RingElem SS = antipode_on_leg(antipode_on_leg(J, block, 0), block, 1);
    TwistResult r = verdict("(S⊗S)(J) = J", SS, J, block);
    if (!r) return r;
    r = verdict("(S⊗id)(J) J = 1", antipode_on_leg(J, block, 0) * J, one, block);
    if (!r) return r;
    r = verdict("(id⊗S)(J) J = 1", antipode_on_leg(J, block, 1) * J, one, block);
    if (!r) return r;
    r.condition = "antipode conditions";
    return r;
}

TwistResult embedded_twist(int n, int i, int j, int m) {
    if (!(1 <= i && i < j && j <= m)) throw std::out_of_range("embedded_twist: need 1 <= i < j <= m");
    TwistResult r = is_twist(twist_embedded(n, m, i, j), m);
    r.condition = "embedded twist (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return r;
}

TwistSearchReport twist_search(int n, int count, std::uint64_t seed) {
    TwistSearchReport rep;
    rep.n = n;
    rep.seed = seed;
    const CycContext& F = CycContext::get(n);
    std::mt19937_64 rng(seed);
    std::vector<RingElem> e;
    for (int k = 0; k < n; ++k) e.push_back(idempotent(n, k));
    auto rand_unit = [&]() {
        // a root of unity times a nonzero rational in [-3, 3]
        std::int64_t num = static_cast<std::int64_t>(rng() % 3) + 1;
        if (rng() % 2) num = -num;
        std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;
        return F.root(static_cast<long>(rng() % F.N())) * Rational(num, den);
    };
    for (int c = 0; c < count; ++c) {
        std::vector<CycScalar> chi(n * n, F.one());
        if (rng() % 4 == 0) {
            for (auto& v : chi) v = rand_unit();
        } else {
            long bichar = static_cast<long>(rng() % n);
            std::vector<CycScalar> f(n, F.one());
            for (int k = 1; k < n; ++k) f[k] = rand_unit();
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    chi[k * n + l] = F.root(2 * bichar * k * l) * f[k] * f[l] * f[(k + l) % n].inv();
        }
        RingElem J(n, 2);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) J += tensor(e[k], e[l]).scaled(chi[k * n + l]);
        ++rep.candidates;
        if (!J.is_invertible()) continue;
        ++rep.invertible;
        bool tw = is_twist(J).holds;
        bool st = is_strong_twist(J).holds;
        rep.twists += tw;
        rep.strong += st;
        if (tw && !st) {
            ++rep.twist_not_strong;
            if (rep.examples.size() < 5) rep.examples.push_back(J.str());
        }
        if (st && !tw) ++rep.strong_not_twist;
    }
    return rep;
}

}  // namespace kacpal
