#include "kacpal/base_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kacpal {

// --- SlotMap ----------------------------------------------------------------

SlotMap::SlotMap(int src, int dst) : src_(src), rows_(dst) {}

SlotMap SlotMap::identity(int d) {
    SlotMap m(d, d);
    for (int i = 0; i < d; ++i) m.add(i, i);
    return m;
}

SlotMap& SlotMap::add(int dst_slot, int src_slot, int coef) {
    if (dst_slot < 0 || dst_slot >= dst() || src_slot < 0 || src_slot >= src_)
        throw std::out_of_range("SlotMap: slot out of range");
    rows_[dst_slot].emplace_back(src_slot, coef);
    return *this;
}

SlotMap SlotMap::after(const SlotMap& first) const {
    if (first.dst() != src_) throw std::invalid_argument("SlotMap: cannot compose");
    SlotMap r(first.src(), dst());
    for (int j = 0; j < dst(); ++j)
        for (auto [mid, c] : rows_[j])
            for (auto [s, c2] : first.rows_[mid]) r.add(j, s, c * c2);
    return r;
}

// --- RingElem ---------------------------------------------------------------

RingElem::RingElem(int n, int slots)
    : n_(n), slots_(slots), field_(&CycContext::get(n)), place_(slots) {
    if (n < 2) throw std::invalid_argument("RingElem: n must be at least 2");
    if (slots < 0) throw std::invalid_argument("RingElem: negative slot count");
    Key pv = 1;
    for (int i = slots - 1; i >= 0; --i) {
        place_[i] = pv;
        if (pv > (Key{1} << 62) / static_cast<Key>(n))
            throw std::length_error("RingElem: n^slots exceeds the key range");
        pv *= static_cast<Key>(n);
    }
}

RingElem RingElem::one(int n, int slots) { return scalar(n, slots, CycContext::get(n).one()); }

RingElem RingElem::scalar(int n, int slots, const CycScalar& c) {
    RingElem r(n, slots);
    if (!c.is_zero()) r.terms_.emplace_back(0, c);
    return r;
}

RingElem RingElem::monomial(int n, const ExpVec& exps) {
    return monomial(n, exps, CycContext::get(n).one());
}

RingElem RingElem::monomial(int n, const ExpVec& exps, const CycScalar& c) {
    RingElem r(n, static_cast<int>(exps.size()));
    if (!c.is_zero()) r.terms_.emplace_back(r.key_of(exps), c);
    return r;
}

RingElem RingElem::variable(int n, int slots, int slot, int power) {
    if (slot < 1 || slot > slots) throw std::out_of_range("RingElem::variable: slot out of range");
    ExpVec e(slots, 0);
    e[slot - 1] = power;
    return monomial(n, e);
}

ExpVec RingElem::exponents(Key key) const {
    ExpVec e(slots_);
    for (int i = 0; i < slots_; ++i) {
        e[i] = static_cast<int>(key / place_[i]);
        key %= place_[i];
    }
    return e;
}

RingElem::Key RingElem::key_of(const ExpVec& exps) const {
    if (static_cast<int>(exps.size()) != slots_)
        throw std::invalid_argument("RingElem: exponent vector has wrong length");
    Key k = 0;
    for (int i = 0; i < slots_; ++i) {
        int a = ((exps[i] % n_) + n_) % n_;
        k += static_cast<Key>(a) * place_[i];
    }
    return k;
}

CycScalar RingElem::coeff(const ExpVec& exps) const {
    Key k = key_of(exps);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return field_->zero();
}

void RingElem::check_compatible(const RingElem& o) const {
    if (n_ != o.n_ || slots_ != o.slots_) throw std::invalid_argument("RingElem: context mismatch");
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

RingElem RingElem::scaled(const CycScalar& c) const {
    RingElem r(n_, slots_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) r.terms_.emplace_back(k, v * c);
    return r;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    a.check_compatible(b);
    RingElem r(a.n_, a.slots_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            r.terms_.push_back(*j++);
        } else {
            CycScalar s = i->second + j->second;
            if (!s.is_zero()) r.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

RingElem operator*(const RingElem& a, const RingElem& b) {
    a.check_compatible(b);
    RingElem r(a.n_, a.slots_);
    if (a.is_zero() || b.is_zero()) return r;
    const int d = a.slots_;
    const int n = a.n_;
    if (a.size() == 1 || b.size() == 1) {
        const RingElem& mono = a.size() == 1 ? a : b;
        const RingElem& other = a.size() == 1 ? b : a;
        return other.shifted(mono.exponents(mono.terms_[0].first)).scaled(mono.terms_[0].second);
    }
    std::vector<int> da(a.size() * d), db(b.size() * d);
    for (std::size_t t = 0; t < a.size(); ++t) {
        ExpVec e = a.exponents(a.terms_[t].first);
        std::copy(e.begin(), e.end(), da.begin() + t * d);
    }
    for (std::size_t t = 0; t < b.size(); ++t) {
        ExpVec e = b.exponents(b.terms_[t].first);
        std::copy(e.begin(), e.end(), db.begin() + t * d);
    }
    std::unordered_map<RingElem::Key, CycScalar> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 16));
    for (std::size_t s = 0; s < a.size(); ++s) {
        const int* ea = &da[s * d];
        const CycScalar& ca = a.terms_[s].second;
        for (std::size_t t = 0; t < b.size(); ++t) {
            const int* eb = &db[t * d];
            RingElem::Key k = 0;
            for (int i = 0; i < d; ++i) {
                int x = ea[i] + eb[i];
                if (x >= n) x -= n;
                k += static_cast<RingElem::Key>(x) * a.place_[i];
            }
            CycScalar prod = ca * b.terms_[t].second;
            auto [it, inserted] = acc.try_emplace(k, prod);
            if (!inserted) it->second += prod;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [k, v] : acc)
        if (!v.is_zero()) r.terms_.emplace_back(k, std::move(v));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const RingElem::Term& x, const RingElem::Term& y) { return x.first < y.first; });
    return r;
}

bool operator==(const RingElem& a, const RingElem& b) {
    return a.n_ == b.n_ && a.slots_ == b.slots_ && a.terms_ == b.terms_;
}

RingElem RingElem::shifted(const ExpVec& shift) const {
    RingElem r(n_, slots_);
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) {
        ExpVec e = exponents(k);
        for (int i = 0; i < slots_; ++i) e[i] += shift[i];
        r.terms_.emplace_back(key_of(e), v);
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
}

RingElem RingElem::mapped(const SlotMap& map) const {
    if (map.src() != slots_) throw std::invalid_argument("RingElem::mapped: source size mismatch");
    RingAccumulator acc(n_, map.dst());
    RingElem target(n_, map.dst());
    ExpVec out(map.dst());
    for (const auto& [k, v] : terms_) {
        ExpVec e = exponents(k);
        for (int j = 0; j < map.dst(); ++j) {
            long s = 0;
            for (auto [src, c] : map.row(j)) s += static_cast<long>(c) * e[src];
            out[j] = static_cast<int>(((s % n_) + n_) % n_);
        }
        acc.add(target.key_of(out), v);
    }
    return acc.finish();
}

CycScalar RingElem::augmentation() const {
    CycScalar s = field_->zero();
    for (const auto& t : terms_) s += t.second;
    return s;
}

CycScalar RingElem::character(const ExpVec& beta) const {
    CycScalar s = field_->zero();
    for (const auto& [k, v] : terms_) {
        ExpVec e = exponents(k);
        long dot = 0;
        for (int i = 0; i < slots_; ++i) dot += static_cast<long>(e[i]) * beta[i];
        s += v * field_->root(2 * (dot % n_));
    }
    return s;
}

namespace {

// Calls f(beta) for every beta in Z_n^d in lexicographic order.
template <class F>
void for_each_exp(int n, int d, F&& f) {
    ExpVec beta(d, 0);
    while (true) {
        f(beta);
        int i = d - 1;
        while (i >= 0 && ++beta[i] == n) beta[i--] = 0;
        if (i < 0) return;
    }
}

}  // namespace

bool RingElem::is_invertible() const {
    if (is_zero()) return false;
    bool ok = true;
    for_each_exp(n_, slots_, [&](const ExpVec& beta) {
        if (ok && character(beta).is_zero()) ok = false;
    });
    return ok;
}

RingElem RingElem::inverse() const {
    std::vector<ExpVec> betas;
    std::vector<CycScalar> inv_chars;
    for_each_exp(n_, slots_, [&](const ExpVec& beta) {
        CycScalar c = character(beta);
        if (c.is_zero()) throw std::domain_error("RingElem::inverse: element is not a unit");
        betas.push_back(beta);
        inv_chars.push_back(c.inv());
    });
    // coefficient of x^α is (1/|G|) Σ_β χ_β(a)^{-1} q^{-α·β}
    Rational norm = Rational(1) / Rational(static_cast<std::int64_t>(betas.size()));
    RingAccumulator acc(n_, slots_);
    RingElem shape(n_, slots_);
    for_each_exp(n_, slots_, [&](const ExpVec& alpha) {
        CycScalar s = field_->zero();
        for (std::size_t b = 0; b < betas.size(); ++b) {
            long dot = 0;
            for (int i = 0; i < slots_; ++i) dot += static_cast<long>(alpha[i]) * betas[b][i];
            s += inv_chars[b] * field_->root(-2 * (dot % n_));
        }
        acc.add(shape.key_of(alpha), s * norm);
    });
    return acc.finish();
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        ExpVec e = exponents(k);
        for (int i = 0; i < slots_; ++i)
            if (e[i]) os << "*x" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
}

// --- RingAccumulator --------------------------------------------------------

RingAccumulator::RingAccumulator(int n, int slots) : shape_(n, slots) {}

void RingAccumulator::add(RingElem::Key key, const CycScalar& c) {
    if (!c.is_zero()) pending_.emplace_back(key, c);
}

void RingAccumulator::add(const RingElem& e) {
    shape_.check_compatible(e);
    pending_.insert(pending_.end(), e.terms_.begin(), e.terms_.end());
}

RingElem RingAccumulator::finish() {
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const RingElem::Term& x, const RingElem::Term& y) { return x.first < y.first; });
    RingElem r = shape_;
    for (std::size_t i = 0; i < pending_.size();) {
        std::size_t j = i + 1;
        CycScalar s = pending_[i].second;
        while (j < pending_.size() && pending_[j].first == pending_[i].first) s += pending_[j++].second;
        if (!s.is_zero()) r.terms_.emplace_back(pending_[i].first, std::move(s));
        i = j;
    }
    pending_.clear();
    return r;
}

// --- B and R ----------------------------------------------------------------

RingElem idempotent(int n, int k) {
    if (k < 0 || k >= n) throw std::out_of_range("idempotent: index out of range");
    const CycContext& F = CycContext::get(n);
    Rational inv_n = Rational(1) / Rational(n);
    RingElem e(n, 1);
    for (int i = 0; i < n; ++i) e += RingElem::monomial(n, {i}, F.root(-2L * i * k) * inv_n);
    return e;
}

RingElem embed(int m, int slot, const RingElem& b) {
    if (b.slots() != 1) throw std::invalid_argument("embed: expected an element of B");
    if (slot < 1 || slot > m) throw std::out_of_range("embed: slot out of range");
    return b.mapped(SlotMap(1, m).add(slot - 1, 0));
}

RingElem sigma(const Perm& w, const RingElem& a) {
    const int m = w.size();
    if (a.slots() != m) throw std::invalid_argument("sigma: degree mismatch");
    SlotMap map(m, m);
    for (int i = 0; i < m; ++i) map.add(i, w(i));
    return a.mapped(map);
}

SlotMap act_map(const Perm& w) {
    const int m = w.size();
    SlotMap map(m, m);
    for (int j = 0; j < m; ++j) map.add(w(j), j);
    return map;
}

RingElem act(const Perm& w, const RingElem& a) {
    if (a.slots() != w.size()) throw std::invalid_argument("act: degree mismatch");
    return a.mapped(act_map(w));
}

ExpVec act(const Perm& w, const ExpVec& exps) {
    ExpVec out(exps.size());
    for (int j = 0; j < w.size(); ++j) out[w(j)] = exps[j];
    return out;
}

RingElem twist_J(int n) {
    RingElem J(n, 2);
    for (int k = 0; k < n; ++k) J += tensor(idempotent(n, k), RingElem::variable(n, 1, 1, k));
    return J;
}

RingElem twist_embedded(int n, int m, int i, int j) {
    if (i < 1 || j < 1 || i > m || j > m) throw std::out_of_range("twist_embedded: slot out of range");
    return twist_J(n).mapped(SlotMap(2, 2 * m).add(i - 1, 0).add(m + j - 1, 1));
}

RingElem twist_Js(int n, int m, int k) {
    if (k < 1 || k >= m) throw std::out_of_range("twist_Js: index out of range");
    return twist_embedded(n, m, k, k + 1);
}

RingElem t_of(int n, int m, int k) { return mu_R(twist_Js(n, m, k), m); }

RingElem t_inv_of(int n, int m, int k) {
    if (k < 1 || k >= m) throw std::out_of_range("t_inv_of: index out of range");
    const CycContext& F = CycContext::get(n);
    Rational inv_n = Rational(1) / Rational(n);
    RingAccumulator acc(n, m);
    RingElem shape(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExpVec e(m, 0);
            e[k - 1] = i;
            e[k] = (n - j) % n;
            acc.add(shape.key_of(e), F.root(-2L * i * j) * inv_n);
        }
    return acc.finish();
}

RingElem delta_R(const RingElem& a) { return delta_on_leg(a, a.slots(), 0); }

CycScalar eps_R(const RingElem& a) { return a.augmentation(); }

RingElem antipode_R(const RingElem& a) { return antipode_on_leg(a, a.slots(), 0); }

RingElem mu_R(const RingElem& a, int m) {
    if (a.slots() != 2 * m) throw std::invalid_argument("mu_R: expected an element of R ⊗ R");
    SlotMap map(2 * m, m);
    for (int i = 0; i < m; ++i) map.add(i, i).add(i, m + i);
    return a.mapped(map);
}

// --- tensor legs ------------------------------------------------------------

RingElem tensor(const RingElem& a, const RingElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("tensor: n mismatch");
    const int da = a.slots(), db = b.slots();
    SlotMap left(da, da + db), right(db, da + db);
    for (int i = 0; i < da; ++i) left.add(i, i);
    for (int i = 0; i < db; ++i) right.add(da + i, i);
    return a.mapped(left) * b.mapped(right);
}

RingElem delta_on_leg(const RingElem& a, int block, int leg) {
    const int k = a.slots() / block;
    if (leg < 0 || leg >= k || a.slots() % block) throw std::out_of_range("delta_on_leg: bad leg");
    SlotMap map(a.slots(), a.slots() + block);
    for (int l = 0; l < k; ++l)
        for (int i = 0; i < block; ++i) {
            int src = l * block + i;
            if (l < leg) {
                map.add(src, src);
            } else if (l == leg) {
                map.add(src, src).add(src + block, src);
            } else {
                map.add(src + block, src);
            }
        }
    return a.mapped(map);
}

RingElem counit_on_leg(const RingElem& a, int block, int leg) {
    const int k = a.slots() / block;
    if (leg < 0 || leg >= k || a.slots() % block) throw std::out_of_range("counit_on_leg: bad leg");
    SlotMap map(a.slots(), a.slots() - block);
    for (int l = 0; l < k; ++l) {
        if (l == leg) continue;
        int dst_leg = l < leg ? l : l - 1;
        for (int i = 0; i < block; ++i) map.add(dst_leg * block + i, l * block + i);
    }
    return a.mapped(map);
}

RingElem antipode_on_leg(const RingElem& a, int block, int leg) {
    const int k = a.slots() / block;
    if (leg < 0 || leg >= k || a.slots() % block) throw std::out_of_range("antipode_on_leg: bad leg");
    SlotMap map(a.slots(), a.slots());
    for (int s = 0; s < a.slots(); ++s) map.add(s, s, s / block == leg ? -1 : 1);
    return a.mapped(map);
}

RingElem embed_leg(const RingElem& b, int k, int leg) {
    const int block = b.slots();
    if (leg < 0 || leg >= k) throw std::out_of_range("embed_leg: bad leg");
    SlotMap map(block, k * block);
    for (int i = 0; i < block; ++i) map.add(leg * block + i, i);
    return b.mapped(map);
}

SlotMap act_on_legs_map(const std::vector<Perm>& perms) {
    const int m = perms.empty() ? 0 : perms[0].size();
    const int k = static_cast<int>(perms.size());
    SlotMap map(k * m, k * m);
    for (int l = 0; l < k; ++l)
        for (int j = 0; j < m; ++j) map.add(l * m + perms[l](j), l * m + j);
    return map;
}

RingElem act_on_legs(const std::vector<Perm>& perms, const RingElem& a) {
    return a.mapped(act_on_legs_map(perms));
}

}  // namespace kacpal
