#include "kacpal/hopf.hpp"

#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kacpal/parallel.hpp"
#include "kacpal/twist_check.hpp"
#include "check_util.hpp"

namespace kacpal {

// --- HopfTensor -------------------------------------------------------------

HopfTensor::HopfTensor(int n, int m, int arity) : n_(n), m_(m), arity_(arity) {
    if (arity < 1) throw std::invalid_argument("HopfTensor: arity must be positive");
}

RingElem HopfTensor::component(const Index& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? RingElem(n_, m_ * arity_) : it->second;
}

std::size_t HopfTensor::term_count() const {
    std::size_t c = 0;
    for (const auto& [idx, r] : comps_) c += r.size();
    return c;
}

void HopfTensor::add(const Index& idx, const RingElem& r) {
    if (static_cast<int>(idx.size()) != arity_ || r.slots() != m_ * arity_ || r.n() != n_)
        throw std::invalid_argument("HopfTensor::add: shape mismatch");
    if (r.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(idx, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

HopfTensor HopfTensor::scaled(const CycScalar& c) const {
    HopfTensor out(n_, m_, arity_);
    if (c.is_zero()) return out;
    for (const auto& [idx, r] : comps_) out.comps_.emplace(idx, r.scaled(c));
    return out;
}

void HopfTensor::check_shape(const HopfTensor& o) const {
    if (n_ != o.n_ || m_ != o.m_ || arity_ != o.arity_) throw std::invalid_argument("HopfTensor: shape mismatch");
}

HopfTensor operator+(const HopfTensor& a, const HopfTensor& b) {
    a.check_shape(b);
    HopfTensor out = a;
    for (const auto& [idx, r] : b.comps_) out.add(idx, r);
    return out;
}

HopfTensor operator-(const HopfTensor& a, const HopfTensor& b) {
    a.check_shape(b);
    HopfTensor out = a;
    for (const auto& [idx, r] : b.comps_) out.add(idx, -r);
    return out;
}

// --- HopfAlgebra ------------------------------------------------------------

namespace {

using detail::Clock;
using detail::run_check;

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

SlotMap place_legs(int m, int src_legs, int dst_legs, int first_leg) {
    SlotMap map(src_legs * m, dst_legs * m);
    for (int s = 0; s < src_legs * m; ++s) map.add(first_leg * m + s, s);
    return map;
}

}  // namespace

HopfAlgebra::HopfAlgebra(int n, int m, Mutation mutation)
    : n_(n), m_(m), ring_dim_(ipow(static_cast<std::size_t>(n), m)), mutation_(mutation), group_(m) {
    if (n < 2 || m < 2) throw std::invalid_argument("HopfAlgebra: need n, m >= 2");
    const std::size_t N = group_.order();
    const RingElem one_R = RingElem::one(n, m);

    CocycleTable table(n, group_);
    gamma_.reserve(N * N);
    gamma_trivial_.resize(N * N);
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v) {
            bool drop = mutation_.drop_cocycle ||
                        (mutation_.drop_gamma_cell && mutation_.drop_gamma_cell->first == w &&
                         mutation_.drop_gamma_cell->second == v);
            gamma_.push_back(drop ? one_R : table(w, v));
            gamma_trivial_[w * N + v] = gamma_.back() == one_R;
        }

    // J(s_i v) = J_i · (act(s_i)⊗act(s_i))(J(v)), processed by increasing length
    J_.assign(N, RingElem::one(n, 2 * m));
    if (!mutation_.drop_twist) {
        std::vector<std::size_t> order(N);
        for (std::size_t w = 0; w < N; ++w) order[w] = w;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return group_.length(a) < group_.length(b); });
        for (std::size_t w : order) {
            const auto& word = group_.word(w);
            if (word.empty()) continue;
            const int i = word.front();
            const Perm si = Perm::generator(m, i);
            const std::size_t v = group_.mul(group_.generator_index(i), w);
            J_[w] = twist_Js(n, m, i) * act_on_legs({si, si}, J_[v]);
        }
    }

    gamma_legs2_.assign(2, std::vector<RingElem>());
    for (int leg = 0; leg < 2; ++leg) {
        gamma_legs2_[leg].reserve(N * N);
        for (std::size_t k = 0; k < N * N; ++k) gamma_legs2_[leg].push_back(embed_leg(gamma_[k], 2, leg));
    }

    S_bar_.reserve(N);
    for (std::size_t w = 0; w < N; ++w) {
        std::vector<int> rev(group_.word(w).rbegin(), group_.word(w).rend());
        S_bar_.push_back(z_word(rev));
    }
}

HopfElem HopfAlgebra::one() const { return element(RingElem::one(n_, m_), group_.identity_index()); }

HopfElem HopfAlgebra::element(const RingElem& a, std::size_t w) const {
    HopfElem h(n_, m_, 1);
    h.add({static_cast<std::uint16_t>(w)}, a);
    return h;
}

HopfElem HopfAlgebra::basis(std::size_t b) const {
    if (b >= dim()) throw std::out_of_range("HopfAlgebra::basis: index out of range");
    return element(RingElem::monomial(n_, exponents_of_basis(b)), perm_of_basis(b));
}

ExpVec HopfAlgebra::exponents_of_basis(std::size_t b) const {
    return RingElem(n_, m_).exponents(b % ring_dim_);
}

HopfElem HopfAlgebra::x(int i) const { return from_ring(RingElem::variable(n_, m_, i)); }

HopfElem HopfAlgebra::z(int k) const {
    return element(RingElem::one(n_, m_), group_.generator_index(k));
}

HopfElem HopfAlgebra::z_word(const std::vector<int>& word) const {
    HopfElem h = one();
    for (int k : word) h = mul(h, z(k));
    return h;
}

std::string HopfAlgebra::basis_label(std::size_t b) const {
    ExpVec e = exponents_of_basis(b);
    std::ostringstream os;
    os << "x^(";
    for (int i = 0; i < m_; ++i) os << (i ? "," : "") << e[i];
    os << ")*" << word_str(group_.word(perm_of_basis(b)), "z");
    return os.str();
}

HopfTensor HopfAlgebra::tensor(const HopfTensor& a, const HopfTensor& b) const {
    HopfTensor out(n_, m_, a.arity() + b.arity());
    for (const auto& [ia, ra] : a.components())
        for (const auto& [ib, rb] : b.components()) {
            HopfTensor::Index idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add(idx, kacpal::tensor(ra, rb));
        }
    return out;
}

const RingElem& HopfAlgebra::gamma_leg(int arity, int leg, std::size_t w, std::size_t v, RingElem& scratch) const {
    const std::size_t k = w * group_.order() + v;
    if (arity == 1) return gamma_[k];
    if (arity == 2) return gamma_legs2_[leg][k];
    scratch = embed_leg(gamma_[k], arity, leg);
    return scratch;
}

HopfTensor HopfAlgebra::mul(const HopfTensor& a, const HopfTensor& b) const {
    if (a.arity() != b.arity() || a.n() != n_ || b.n() != n_ || a.m() != m_ || b.m() != m_)
        throw std::invalid_argument("HopfAlgebra::mul: shape mismatch");
    const int k = a.arity();
    const std::size_t N = group_.order();
    HopfTensor out(n_, m_, k);
    RingElem scratch(n_, m_);
    std::vector<Perm> perms(k);
    for (const auto& [ws, A] : a.components()) {
        bool identity = true;
        for (int l = 0; l < k; ++l) {
            perms[l] = group_.element(ws[l]);
            identity = identity && ws[l] == group_.identity_index();
        }
        const SlotMap acting = act_on_legs_map(perms);
        for (const auto& [vs, B] : b.components()) {
            RingElem prod = A * (identity ? B : B.mapped(acting));
            HopfTensor::Index idx(k);
            for (int l = 0; l < k; ++l) {
                if (!gamma_trivial_[ws[l] * N + vs[l]]) prod *= gamma_leg(k, l, ws[l], vs[l], scratch);
                idx[l] = static_cast<std::uint16_t>(group_.mul(ws[l], vs[l]));
            }
            out.add(idx, prod);
        }
    }
    return out;
}

HopfTensor HopfAlgebra::coproduct(const HopfElem& h) const {
    HopfTensor out(n_, m_, 2);
    for (const auto& [idx, r] : h.components()) out.add({idx[0], idx[0]}, delta_R(r) * J_[idx[0]]);
    return out;
}

HopfTensor HopfAlgebra::delta_on_leg(const HopfTensor& t, int leg) const {
    const int k = t.arity();
    if (leg < 0 || leg >= k) throw std::out_of_range("HopfAlgebra::delta_on_leg: bad leg");
    HopfTensor out(n_, m_, k + 1);
    const SlotMap place = place_legs(m_, 2, k + 1, leg);
    for (const auto& [idx, r] : t.components()) {
        HopfTensor::Index ni = idx;
        ni.insert(ni.begin() + leg + 1, idx[leg]);
        RingElem d = kacpal::delta_on_leg(r, m_, leg);
        const RingElem& J = J_[idx[leg]];
        if (J.size() != 1 || !J.terms()[0].second.is_one() || J.terms()[0].first != 0) d *= J.mapped(place);
        out.add(ni, d);
    }
    return out;
}

HopfTensor HopfAlgebra::counit_on_leg(const HopfTensor& t, int leg) const {
    const int k = t.arity();
    if (k < 2 || leg < 0 || leg >= k) throw std::out_of_range("HopfAlgebra::counit_on_leg: bad leg");
    HopfTensor out(n_, m_, k - 1);
    for (const auto& [idx, r] : t.components()) {
        HopfTensor::Index ni = idx;
        ni.erase(ni.begin() + leg);
        out.add(ni, kacpal::counit_on_leg(r, m_, leg));
    }
    return out;
}

CycScalar HopfAlgebra::counit(const HopfElem& h) const {
    CycScalar s = CycContext::get(n_).zero();
    for (const auto& [idx, r] : h.components()) s += eps_R(r);
    return s;
}

HopfElem HopfAlgebra::antipode(const HopfElem& h) const {
    HopfElem out = zero();
    for (const auto& [idx, r] : h.components()) out = out + mul(S_bar_[idx[0]], from_ring(antipode_R(r)));
    return out;
}

HopfElem HopfAlgebra::mu_S_id(const HopfTensor& t) const {
    if (t.arity() != 2) throw std::invalid_argument("mu_S_id: expected an element of H⊗H");
    HopfElem out = zero();
    for (const auto& [idx, r] : t.components()) {
        // S(x^β w̄1) x^γ w̄2 = S(w̄1) x^{γ-β} w̄2
        RingElem a = mu_R(antipode_on_leg(r, m_, 0), m_);
        out = out + mul(S_bar_[idx[0]], element(a, idx[1]));
    }
    return out;
}

HopfElem HopfAlgebra::mu_id_S(const HopfTensor& t) const {
    if (t.arity() != 2) throw std::invalid_argument("mu_id_S: expected an element of H⊗H");
    HopfElem out = zero();
    const RingElem one_R = RingElem::one(n_, m_);
    for (const auto& [idx, r] : t.components()) {
        // x^β w̄1 S(w̄2) x^{-γ} = Σ_u x^β p_u act(u)(x^{-γ}) ū  where w̄1 S(w̄2) = Σ p_u ū
        HopfElem P = mul(element(one_R, idx[0]), S_bar_[idx[1]]);
        for (const auto& [u, p] : P.components()) {
            const Perm& perm = group_.element(u[0]);
            SlotMap map(2 * m_, m_);
            for (int j = 0; j < m_; ++j) map.add(j, j).add(perm(j), m_ + j, -1);
            out.add(u, r.mapped(map) * p);
        }
    }
    return out;
}

HopfElem HopfAlgebra::integral() const {
    const CycContext& F = CycContext::get(n_);
    RingAccumulator acc(n_, m_);
    const CycScalar c = F.from_rational(Rational(1) / Rational(static_cast<std::int64_t>(ring_dim_)));
    for (std::size_t key = 0; key < ring_dim_; ++key) acc.add(key, c);
    RingElem integral_R = acc.finish();
    HopfElem out = zero();
    for (std::size_t w = 0; w < group_.order(); ++w) out.add({static_cast<std::uint16_t>(w)}, integral_R);
    return out;
}

std::string HopfAlgebra::str(const HopfTensor& t) const {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, r] : t.components()) {
        if (!first) os << " + ";
        first = false;
        os << "[" << r.str() << "]";
        for (std::size_t l = 0; l < idx.size(); ++l)
            os << (l ? " ⊗ " : " ") << word_str(group_.word(idx[l]), "z");
    }
    return os.str();
}

std::optional<std::string> HopfAlgebra::difference(const HopfTensor& a, const HopfTensor& b) const {
    if (a == b) return std::nullopt;
    std::vector<HopfTensor::Index> keys;
    for (const auto& [idx, r] : a.components()) keys.push_back(idx);
    for (const auto& [idx, r] : b.components()) keys.push_back(idx);
    std::sort(keys.begin(), keys.end());
    for (const auto& idx : keys) {
        auto diff = first_difference(a.component(idx), b.component(idx), m_);
        if (!diff) continue;
        std::string label;
        for (std::size_t l = 0; l < idx.size(); ++l)
            label += (l ? " ⊗ " : "") + word_str(group_.word(idx[l]), "z");
        return "component " + label + " at " + *diff;
    }
    return std::string("arity differs");
}

// --- verification -------------------------------------------------------------

Scope Scope::default_for(std::size_t dim, std::uint64_t seed) {
    Scope s;
    s.all = dim <= 64;
    s.seed = seed;
    return s;
}

std::string Scope::str() const { return all ? "all" : "sampled:" + std::to_string(samples); }

bool AxiomReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::vector<std::size_t> generator_basis(const HopfAlgebra& H) {
    std::vector<std::size_t> gens;
    RingElem shape(H.n(), H.m());
    for (int i = 1; i <= H.m(); ++i) {
        ExpVec e(H.m(), 0);
        e[i - 1] = 1;
        gens.push_back(H.group().identity_index() * H.ring_dim() + shape.key_of(e));
    }
    for (int k = 1; k < H.m(); ++k) gens.push_back(H.group().generator_index(k) * H.ring_dim());
    return gens;
}

std::vector<std::vector<std::size_t>> tuples(const HopfAlgebra& H, const Scope& scope, int arity) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t d = H.dim();
    if (scope.all) {
        std::size_t total = 1;
        for (int a = 0; a < arity; ++a) total *= d;
        out.reserve(total);
        for (std::size_t t = 0; t < total; ++t) {
            std::vector<std::size_t> tup(arity);
            std::size_t rest = t;
            for (int a = arity - 1; a >= 0; --a) {
                tup[a] = rest % d;
                rest /= d;
            }
            out.push_back(std::move(tup));
        }
        return out;
    }
    const auto gens = generator_basis(H);
    std::size_t gtotal = 1;
    for (int a = 0; a < arity; ++a) gtotal *= gens.size();
    for (std::size_t t = 0; t < gtotal; ++t) {
        std::vector<std::size_t> tup(arity);
        std::size_t rest = t;
        for (int a = arity - 1; a >= 0; --a) {
            tup[a] = gens[rest % gens.size()];
            rest /= gens.size();
        }
        out.push_back(std::move(tup));
    }
    std::mt19937_64 rng(scope.seed + static_cast<std::uint64_t>(arity));
    for (std::size_t s = 0; s < scope.samples; ++s) {
        std::vector<std::size_t> tup(arity);
        for (auto& x : tup) x = rng() % d;
        out.push_back(std::move(tup));
    }
    return out;
}

std::string labels(const HopfAlgebra& H, const std::vector<std::size_t>& tup) {
    std::string s;
    for (std::size_t i = 0; i < tup.size(); ++i) s += (i ? ", " : "") + H.basis_label(tup[i]);
    return s;
}

std::size_t factorial(int m) {
    std::size_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

}  // namespace

AxiomReport verify_hopf_axioms(const HopfAlgebra& H, const Scope& scope) {
    AxiomReport rep;
    rep.n = H.n();
    rep.m = H.m();
    rep.dim = H.dim();
    rep.scope = scope;

    const std::size_t d = H.dim();
    std::vector<HopfElem> basis;
    basis.reserve(d);
    for (std::size_t b = 0; b < d; ++b) basis.push_back(H.basis(b));
    std::vector<HopfTensor> delta;
    delta.reserve(d);
    for (std::size_t b = 0; b < d; ++b) delta.push_back(H.coproduct(basis[b]));
    const HopfElem one = H.one();
    const auto pairs = tuples(H, scope, 2);
    const auto triples = tuples(H, scope, 3);

    {
        CheckResult c;
        c.name = "dimension";
        c.anchor = "dim H = n^m m!";
        c.checked = 1;
        std::size_t expect = factorial(H.m());
        for (int i = 0; i < H.m(); ++i) expect *= static_cast<std::size_t>(H.n());
        c.pass = d == expect && H.group().order() == factorial(H.m());
        if (!c.pass) c.witness = "basis count " + std::to_string(d) + ", expected " + std::to_string(expect);
        rep.checks.push_back(c);
    }

    rep.checks.push_back(run_check("unit", "1h = h = h1", d, [&](std::size_t b) -> std::optional<std::string> {
        if (H.mul(one, basis[b]) != basis[b] || H.mul(basis[b], one) != basis[b]) return H.basis_label(b);
        return std::nullopt;
    }));

    rep.checks.push_back(
        run_check("associativity", "(ab)c = a(bc)", triples.size(), [&](std::size_t i) -> std::optional<std::string> {
            const auto& t = triples[i];
            HopfElem lhs = H.mul(H.mul(basis[t[0]], basis[t[1]]), basis[t[2]]);
            HopfElem rhs = H.mul(basis[t[0]], H.mul(basis[t[1]], basis[t[2]]));
            if (auto diff = H.difference(lhs, rhs)) return labels(H, t) + ": " + *diff;
            return std::nullopt;
        }));

    rep.checks.push_back(run_check(
        "coproduct_multiplicative", "Δ(ab) = Δ(a)Δ(b) and Δ(1) = 1⊗1", pairs.size() + 1,
        [&](std::size_t i) -> std::optional<std::string> {
            if (i == pairs.size()) {
                if (H.coproduct(one) != H.tensor(one, one)) return std::string("Δ(1) ≠ 1⊗1");
                return std::nullopt;
            }
            const auto& p = pairs[i];
            HopfTensor lhs = H.coproduct(H.mul(basis[p[0]], basis[p[1]]));
            HopfTensor rhs = H.mul(delta[p[0]], delta[p[1]]);
            if (auto diff = H.difference(lhs, rhs)) return labels(H, p) + ": " + *diff;
            return std::nullopt;
        }));

    rep.checks.push_back(
        run_check("counit_multiplicative", "ε(ab) = ε(a)ε(b)", pairs.size(), [&](std::size_t i) -> std::optional<std::string> {
            const auto& p = pairs[i];
            if (H.counit(H.mul(basis[p[0]], basis[p[1]])) != H.counit(basis[p[0]]) * H.counit(basis[p[1]]))
                return labels(H, p);
            return std::nullopt;
        }));

    rep.checks.push_back(
        run_check("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", d, [&](std::size_t b) -> std::optional<std::string> {
            if (auto diff = H.difference(H.delta_on_leg(delta[b], 0), H.delta_on_leg(delta[b], 1)))
                return H.basis_label(b) + ": " + *diff;
            return std::nullopt;
        }));

    rep.checks.push_back(
        run_check("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ", d, [&](std::size_t b) -> std::optional<std::string> {
            if (auto diff = H.difference(H.counit_on_leg(delta[b], 0), basis[b]))
                return H.basis_label(b) + " (ε⊗id): " + *diff;
            if (auto diff = H.difference(H.counit_on_leg(delta[b], 1), basis[b]))
                return H.basis_label(b) + " (id⊗ε): " + *diff;
            return std::nullopt;
        }));

    rep.checks.push_back(run_check(
        "antipode", "μ(S⊗id)Δ = ηε = μ(id⊗S)Δ", d, [&](std::size_t b) -> std::optional<std::string> {
            HopfElem target = one.scaled(H.counit(basis[b]));
            if (auto diff = H.difference(H.mu_S_id(delta[b]), target)) return H.basis_label(b) + " μ(S⊗id)Δ: " + *diff;
            if (auto diff = H.difference(H.mu_id_S(delta[b]), target)) return H.basis_label(b) + " μ(id⊗S)Δ: " + *diff;
            return std::nullopt;
        }));

    rep.checks.push_back(run_check("antipode_involutive", "S² = id", d, [&](std::size_t b) -> std::optional<std::string> {
        if (auto diff = H.difference(H.antipode(H.antipode(basis[b])), basis[b])) return H.basis_label(b) + ": " + *diff;
        return std::nullopt;
    }));

    rep.checks.push_back(run_check(
        "antipode_antimultiplicative", "S(ab) = S(b)S(a)", pairs.size(), [&](std::size_t i) -> std::optional<std::string> {
            const auto& p = pairs[i];
            HopfElem lhs = H.antipode(H.mul(basis[p[0]], basis[p[1]]));
            HopfElem rhs = H.mul(H.antipode(basis[p[1]]), H.antipode(basis[p[0]]));
            if (auto diff = H.difference(lhs, rhs)) return labels(H, p) + ": " + *diff;
            return std::nullopt;
        }));

    return rep;
}

std::vector<CheckResult> verify_integral(const HopfAlgebra& H) {
    std::vector<CheckResult> out;
    const HopfElem L = H.integral();
    const std::size_t d = H.dim();
    out.push_back(run_check("left_integral", "hΛ = ε(h)Λ", d, [&](std::size_t b) -> std::optional<std::string> {
        HopfElem h = H.basis(b);
        if (auto diff = H.difference(H.mul(h, L), L.scaled(H.counit(h)))) return H.basis_label(b) + ": " + *diff;
        return std::nullopt;
    }));
    out.push_back(run_check("right_integral", "Λh = ε(h)Λ", d, [&](std::size_t b) -> std::optional<std::string> {
        HopfElem h = H.basis(b);
        if (auto diff = H.difference(H.mul(L, h), L.scaled(H.counit(h)))) return H.basis_label(b) + ": " + *diff;
        return std::nullopt;
    }));
    CheckResult c;
    c.name = "integral_counit";
    c.anchor = "ε(Λ) = m! ≠ 0";
    c.checked = 1;
    CycScalar e = H.counit(L);
    c.pass = e == CycContext::get(H.n()).from_rational(static_cast<std::int64_t>(factorial(H.m())));
    if (!c.pass) c.witness = "ε(Λ) = " + e.str();
    out.push_back(c);
    return out;
}

bool CyclicReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::size_t> cyclic_perms(const SymmetricGroup& G) {
    const std::size_t s = G.index_of(Perm::long_cycle(G.degree()));
    std::vector<std::size_t> out{G.identity_index()};
    for (std::size_t p = s; p != G.identity_index(); p = G.mul(p, s)) out.push_back(p);
    return out;
}

CyclicReport verify_cyclic_subalgebra(const HopfAlgebra& H) {
    CyclicReport rep;
    const int m = H.m();
    const SymmetricGroup& G = H.group();
    const std::vector<std::size_t> powers = cyclic_perms(G);
    const std::size_t s = powers.at(1 % powers.size());
    const RingElem one_R = RingElem::one(H.n(), m);
    auto in_sub = [&](std::size_t w) { return std::find(powers.begin(), powers.end(), w) != powers.end(); };
    auto single = [&](std::string name, std::string anchor, bool pass, std::string witness) {
        CheckResult c;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.checked = 1;
        c.pass = pass;
        if (!pass) c.witness = std::move(witness);
        rep.checks.push_back(std::move(c));
    };

    rep.dim = powers.size() * H.ring_dim();
    std::size_t expect = static_cast<std::size_t>(m) * H.ring_dim();
    single("dimension", "dim H' = m n^m", rep.dim == expect && (m != 2 || rep.dim == H.dim()),
           "got " + std::to_string(rep.dim) + ", expected " + std::to_string(expect));

    const HopfElem theta = H.element(one_R, s);
    std::vector<int> word;
    for (int i = 1; i < m; ++i) word.push_back(i);
    HopfElem prod = H.z_word(word);
    single("theta_is_product", "θ = z_1 ⋯ z_{m-1} = s̄", prod == theta, H.str(prod));

    // θ^k = (Π_{i<k} γ(s^i, s)) s̄^k
    RingElem c = one_R;
    HopfElem power = theta;
    bool powers_ok = true;
    std::string power_witness;
    for (int k = 2; k <= m; ++k) {
        c *= H.gamma(powers[(k - 1) % powers.size()], s);
        power = H.mul(power, theta);
        HopfElem expect_k = H.element(c, powers[k % powers.size()]);
        if (power != expect_k && powers_ok) {
            powers_ok = false;
            power_witness = "k = " + std::to_string(k) + ": " + H.difference(power, expect_k).value_or("");
        }
    }
    rep.t = c;
    single("theta_power", "θ^m = t = Π γ(s^i, s)", powers_ok && power == H.from_ring(c), power_witness);
    single("t_invertible", "t ∈ R^×", c.is_invertible(), "t = " + c.str());

    bool comm_ok = true;
    std::string comm_witness;
    const Perm& sp = G.element(s);
    for (int i = 1; i <= m; ++i) {
        if (H.mul(theta, H.x(i)) != H.mul(H.x(sp(i - 1) + 1), theta)) {
            comm_ok = false;
            comm_witness = "i = " + std::to_string(i);
            break;
        }
    }
    single("theta_commutation", "θ x_i = x_{s(i)} θ", comm_ok, comm_witness);

    if (c.is_invertible()) {
        HopfElem theta_pow = H.one();
        for (int k = 1; k < m; ++k) theta_pow = H.mul(theta_pow, theta);
        RingElem coef = c.inverse() * H.gamma(powers[(m - 1) % powers.size()], s);
        HopfElem expect_S = H.mul(H.from_ring(coef), theta_pow);
        HopfElem got = H.antipode(theta);
        single("antipode_theta", "S(θ) = t^{-1} γ(s^{m-1}, s) θ^{m-1}", got == expect_S,
               H.difference(got, expect_S).value_or(""));
    } else {
        single("antipode_theta", "S(θ) = t^{-1} γ(s^{m-1}, s) θ^{m-1}", false, "t is not invertible");
    }

    HopfTensor gen_delta = H.tensor(H.one(), H.one());
    for (int k = 1; k < m; ++k) gen_delta = H.mul(gen_delta, H.coproduct(H.z(k)));
    HopfTensor dtheta = H.coproduct(theta);
    single("coproduct_theta", "Δ(θ) = Δ(z_1) ⋯ Δ(z_{m-1}) = J(s)(θ⊗θ)",
           dtheta == gen_delta && dtheta.components().size() == 1 &&
               dtheta.components().begin()->first == HopfTensor::Index{static_cast<std::uint16_t>(s),
                                                                       static_cast<std::uint16_t>(s)},
           H.difference(dtheta, gen_delta).value_or("unexpected components"));

    bool closed = true;
    std::string closed_witness;
    for (std::size_t a : powers) {
        HopfElem ea = H.element(one_R, a);
        const HopfTensor dea = H.coproduct(ea);
        for (const auto& [idx, r] : dea.components())
            if (!in_sub(idx[0]) || !in_sub(idx[1])) {
                closed = false;
                closed_witness = "Δ(s̄^k) leaves H'⊗H'";
            }
        const HopfElem sea = H.antipode(ea);
        for (const auto& [idx, r] : sea.components())
            if (!in_sub(idx[0])) {
                closed = false;
                closed_witness = "S(s̄^k) leaves H'";
            }
        for (std::size_t b : powers) {
            const HopfElem prod_ab = H.mul(ea, H.element(one_R, b));
            for (const auto& [idx, r] : prod_ab.components())
                if (!in_sub(idx[0])) {
                    closed = false;
                    closed_witness = "product leaves H'";
                }
        }
    }
    single("hopf_subalgebra", "H' is closed under product, Δ and S", closed, closed_witness);
    return rep;
}

std::vector<CheckResult> embedding_check(int n, int m) {
    HopfAlgebra H(n, m), H2(n, m + 1);
    std::vector<std::uint16_t> perm_map(H.group().order());
    for (std::size_t w = 0; w < perm_map.size(); ++w) {
        std::vector<int> img = H.group().element(w).images();
        img.push_back(m);
        perm_map[w] = static_cast<std::uint16_t>(H2.group().index_of(Perm(img)));
    }
    auto phi = [&](const HopfTensor& t) {
        const int k = t.arity();
        SlotMap map(k * m, k * (m + 1));
        for (int l = 0; l < k; ++l)
            for (int i = 0; i < m; ++i) map.add(l * (m + 1) + i, l * m + i);
        HopfTensor out(n, m + 1, k);
        for (const auto& [idx, r] : t.components()) {
            HopfTensor::Index ni(idx.size());
            for (std::size_t l = 0; l < idx.size(); ++l) ni[l] = perm_map[idx[l]];
            out.add(ni, r.mapped(map));
        }
        return out;
    };
    std::vector<CheckResult> out;
    const std::size_t d = H.dim();
    std::vector<HopfElem> basis, image;
    for (std::size_t b = 0; b < d; ++b) {
        basis.push_back(H.basis(b));
        image.push_back(phi(basis.back()));
    }

    {
        CheckResult c;
        c.name = "generators";
        c.anchor = "x_i ↦ x_i', z_i ↦ z_i', 1 ↦ 1";
        c.checked = static_cast<std::size_t>(2 * m);
        c.pass = phi(H.one()) == H2.one();
        for (int i = 1; i <= m; ++i) c.pass = c.pass && phi(H.x(i)) == H2.x(i);
        for (int k = 1; k < m; ++k) c.pass = c.pass && phi(H.z(k)) == H2.z(k);
        if (!c.pass) c.witness = "generator image mismatch";
        out.push_back(c);
    }
    out.push_back(run_check("product", "φ(ab) = φ(a)φ(b)", d * d, [&](std::size_t i) -> std::optional<std::string> {
        std::size_t a = i / d, b = i % d;
        if (auto diff = H2.difference(phi(H.mul(basis[a], basis[b])), H2.mul(image[a], image[b])))
            return H.basis_label(a) + ", " + H.basis_label(b) + ": " + *diff;
        return std::nullopt;
    }));
    out.push_back(run_check("coproduct", "Δ'φ = (φ⊗φ)Δ", d, [&](std::size_t b) -> std::optional<std::string> {
        if (auto diff = H2.difference(H2.coproduct(image[b]), phi(H.coproduct(basis[b]))))
            return H.basis_label(b) + ": " + *diff;
        return std::nullopt;
    }));
    out.push_back(run_check("counit", "ε'φ = ε", d, [&](std::size_t b) -> std::optional<std::string> {
        if (H2.counit(image[b]) != H.counit(basis[b])) return H.basis_label(b);
        return std::nullopt;
    }));
    out.push_back(run_check("antipode", "S'φ = φS", d, [&](std::size_t b) -> std::optional<std::string> {
        if (auto diff = H2.difference(H2.antipode(image[b]), phi(H.antipode(basis[b]))))
            return H.basis_label(b) + ": " + *diff;
        return std::nullopt;
    }));
    return out;
}

}  // namespace kacpal
