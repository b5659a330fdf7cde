#include "kacpal/qpa.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "check_util.hpp"

namespace kacpal {

using detail::run_check;

RMatrix r_matrix(int n, int m, int a, int b) {
    const CycContext& K = CycContext::get(n);
    RMatrix r(m, std::vector<CycScalar>(m, K.one()));
    // exponents in p-units: λ = p^{2(b²-ab)}, μ = p^{b²-a²}
    const long lam = 2L * (static_cast<long>(b) * b - static_cast<long>(a) * b);
    const long mu = static_cast<long>(b) * b - static_cast<long>(a) * a;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const long e = lam * (j - i - 1) + mu;
            r[i][j] = K.root(e);
            r[j][i] = K.root(-e);
        }
    return r;
}

bool MonomialOrder::operator()(const ExpVec& x, const ExpVec& y) const {
    const int dx = std::accumulate(x.begin(), x.end(), 0), dy = std::accumulate(y.begin(), y.end(), 0);
    if (dx != dy) return dx < dy;
    return x > y;
}

std::vector<ExpVec> monomials(int m, int k) {
    std::vector<ExpVec> out;
    ExpVec cur(m, 0);
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == m - 1) {
            cur[slot] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[slot] = e;
            self(self, slot + 1, left - e);
        }
    };
    if (m > 0) rec(rec, 0, k);
    return out;
}

// --- QpaElem -------------------------------------------------------------------

QpaElem QpaElem::monomial(int n, const ExpVec& alpha, const CycScalar& c) {
    QpaElem e(n);
    e.add(alpha, c);
    return e;
}

CycScalar QpaElem::coeff(const ExpVec& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? CycContext::get(n_).zero() : it->second;
}

void QpaElem::add(const ExpVec& alpha, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QpaElem QpaElem::scaled(const CycScalar& c) const {
    QpaElem out(n_);
    if (c.is_zero()) return out;
    for (const auto& [alpha, v] : terms_) out.terms_.emplace(alpha, v * c);
    return out;
}

QpaElem operator+(const QpaElem& x, const QpaElem& y) {
    QpaElem out = x;
    for (const auto& [alpha, v] : y.terms_) out.add(alpha, v);
    return out;
}

QpaElem operator-(const QpaElem& x, const QpaElem& y) {
    QpaElem out = x;
    for (const auto& [alpha, v] : y.terms_) out.add(alpha, -v);
    return out;
}

std::string QpaElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (!alpha[i]) continue;
            mono << (any ? "*" : "") << "u" << i + 1;
            if (alpha[i] > 1) mono << "^" << alpha[i];
            any = true;
        }
        if (!any) {
            os << c.str();
        } else if (c.is_one()) {
            os << mono.str();
        } else {
            os << "(" << c.str() << ")*" << mono.str();
        }
    }
    return os.str();
}

// --- QuantumPolynomialAlgebra --------------------------------------------------

namespace {

std::vector<int> word_of(const ExpVec& alpha) {
    std::vector<int> w;
    for (std::size_t i = 0; i < alpha.size(); ++i) w.insert(w.end(), alpha[i], static_cast<int>(i) + 1);
    return w;
}

int degree_of(const ExpVec& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

}  // namespace

QuantumPolynomialAlgebra::QuantumPolynomialAlgebra(const HopfAlgebra& H, int a, int b, int max_degree)
    : H_(&H), n_(H.n()), m_(H.m()), a_(((a % H.n()) + H.n()) % H.n()), b_(((b % H.n()) + H.n()) % H.n()),
      d_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("QuantumPolynomialAlgebra: negative degree bound");
    r_ = r_matrix(n_, m_, a_, b_);
    const CycContext& K = CycContext::get(n_);
    const SymmetricGroup& G = H.group();
    const RingElem one_R = RingElem::one(n_, m_);

    // degree 1: z_k u_k = q^{ab} u_{k+1}, z_k u_{k+1} = u_k, z_k u_j = p^{b²} u_j
    auto z_on = [&](int k, int j, CycScalar& c) {
        if (j == k) {
            c *= K.root(2L * a_ * b_);
            return k + 1;
        }
        if (j == k + 1) return k;
        c *= K.root(static_cast<long>(b_) * b_);
        return j;
    };

    perm_action_.resize(G.order());
    std::vector<ExpVec> all;
    for (int k = 0; k <= d_; ++k)
        for (auto& mono : monomials(m_, k)) all.push_back(std::move(mono));

    for (std::size_t w = 0; w < G.order(); ++w) {
        const std::vector<int>& word = G.word(w);
        std::vector<std::pair<CycScalar, int>> single(m_ + 1, {K.one(), 0});
        for (int j = 1; j <= m_; ++j) {
            CycScalar c = K.one();
            int img = j;
            for (auto it = word.rbegin(); it != word.rend(); ++it) img = z_on(*it, img, c);
            single[j] = {c, img};
        }
        const HopfTensor dw = H.coproduct(H.element(one_R, w));
        const RingElem J = dw.component({static_cast<std::uint16_t>(w), static_cast<std::uint16_t>(w)});
        if (dw.components().size() != 1) throw std::logic_error("coproduct of a group element has extra legs");

        // J(w) on u_j ⊗ (word with letter counts cnt), cached
        std::map<std::pair<int, ExpVec>, CycScalar> jcache;
        auto J_on = [&](int j, const ExpVec& cnt) -> const CycScalar& {
            auto key = std::make_pair(j, cnt);
            auto it = jcache.find(key);
            if (it != jcache.end()) return it->second;
            const int len = degree_of(cnt);
            ExpVec beta(2 * m_);
            for (int i = 0; i < m_; ++i) {
                beta[i] = (i + 1 == j) ? a_ : b_;
                beta[m_ + i] = (a_ - b_) * cnt[i] + b_ * len;
                beta[m_ + i] = ((beta[m_ + i] % n_) + n_) % n_;
            }
            return jcache.emplace(std::move(key), J.character(beta)).first->second;
        };

        for (const ExpVec& alpha : all) {
            const std::vector<int> letters = word_of(alpha);
            CycScalar s = K.one();
            ExpVec cnt(m_, 0);
            std::vector<int> image(letters.size());
            for (int pos = static_cast<int>(letters.size()) - 1; pos >= 0; --pos) {
                const auto& [c1, j] = single[letters[pos]];
                s *= c1;
                if (pos + 1 < static_cast<int>(letters.size())) s *= J_on(j, cnt);
                image[pos] = j;
                ++cnt[j - 1];
            }
            QpaElem ordered = normal_order(image);
            const auto& [gamma, c] = *ordered.terms().begin();
            perm_action_[w].emplace(alpha, std::make_pair(s * c, gamma));
        }
    }
}

void QuantumPolynomialAlgebra::check_degree(int k) const {
    if (k > d_)
        throw std::out_of_range("degree " + std::to_string(k) + " exceeds the bound " + std::to_string(d_));
}

QpaElem QuantumPolynomialAlgebra::normal_order(const std::vector<int>& word) const {
    const CycContext& K = CycContext::get(n_);
    ExpVec alpha(m_, 0);
    CycScalar c = K.one();
    // one factor r_{ji} per inversion u_j ... u_i with j > i (u_j u_i = r_{ji} u_i u_j)
    for (std::size_t p = 0; p < word.size(); ++p) {
        if (word[p] < 1 || word[p] > m_) throw std::out_of_range("normal_order: generator index out of range");
        ++alpha[word[p] - 1];
        for (std::size_t q = p + 1; q < word.size(); ++q)
            if (word[p] > word[q]) c *= r_[word[p] - 1][word[q] - 1];
    }
    return QpaElem::monomial(n_, alpha, c);
}

QpaElem QuantumPolynomialAlgebra::mul(const QpaElem& f, const QpaElem& g) const {
    QpaElem out(n_);
    for (const auto& [x, cx] : f.terms())
        for (const auto& [y, cy] : g.terms()) {
            std::vector<int> w = word_of(x);
            const std::vector<int> wy = word_of(y);
            w.insert(w.end(), wy.begin(), wy.end());
            const QpaElem p = normal_order(w);
            const auto& [gamma, c] = *p.terms().begin();
            out.add(gamma, c * cx * cy);
        }
    return out;
}

CycScalar QuantumPolynomialAlgebra::character(const ExpVec& beta, const ExpVec& gamma) const {
    const long len = degree_of(gamma);
    long e = 0;
    for (int i = 0; i < m_; ++i) e += static_cast<long>(beta[i]) * ((a_ - b_) * gamma[i] + b_ * len);
    return CycContext::get(n_).root(2 * (((e % n_) + n_) % n_));
}

std::pair<CycScalar, ExpVec> QuantumPolynomialAlgebra::act_basis(std::size_t basis, const ExpVec& alpha) const {
    check_degree(degree_of(alpha));
    const auto& [c, gamma] = perm_action_[H_->perm_of_basis(basis)].at(alpha);
    return {c * character(H_->exponents_of_basis(basis), gamma), gamma};
}

QpaElem QuantumPolynomialAlgebra::act(const HopfElem& h, const QpaElem& f) const {
    QpaElem out(n_);
    for (const auto& [alpha, cf] : f.terms()) {
        check_degree(degree_of(alpha));
        for (const auto& [idx, r] : h.components()) {
            const auto& [c, gamma] = perm_action_[idx[0]].at(alpha);
            for (const auto& [key, cr] : r.terms())
                out.add(gamma, cf * cr * c * character(r.exponents(key), gamma));
        }
    }
    return out;
}

Matrix QuantumPolynomialAlgebra::action_matrix(const HopfElem& h, int k) const {
    check_degree(k);
    const CycContext& K = CycContext::get(n_);
    const std::vector<ExpVec> mono = monomials(m_, k);
    std::map<ExpVec, std::size_t> pos;
    for (std::size_t i = 0; i < mono.size(); ++i) pos[mono[i]] = i;
    Matrix M(K, mono.size(), mono.size());
    for (std::size_t col = 0; col < mono.size(); ++col) {
        const QpaElem img = act(h, QpaElem::monomial(n_, mono[col], K.one()));
        for (const auto& [gamma, c] : img.terms()) M(pos.at(gamma), col) = c;
    }
    return M;
}

// --- checks ------------------------------------------------------------------

bool QpaReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
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

std::string pair_label(const HopfAlgebra& H, std::size_t b, const ExpVec& f, const ExpVec& g) {
    const CycContext& K = CycContext::get(H.n());
    return "h = " + H.basis_label(b) + ", f = " + QpaElem::monomial(H.n(), f, K.one()).str() +
           ", g = " + QpaElem::monomial(H.n(), g, K.one()).str();
}

}  // namespace

QpaReport module_algebra_check(const HopfAlgebra& H, int a, int b, int degree, std::size_t samples,
                               std::uint64_t seed) {
    QuantumPolynomialAlgebra A(H, a, b, degree);
    const CycContext& K = CycContext::get(H.n());
    const int m = H.m();
    QpaReport rep;
    rep.n = H.n();
    rep.m = m;
    rep.a = A.a();
    rep.b = A.b();
    rep.degree = degree;

    const std::vector<std::size_t> gens = generator_basis(H);
    std::vector<std::size_t> sampled;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) sampled.push_back(rng() % H.dim());

    std::vector<std::pair<ExpVec, ExpVec>> pairs;
    for (int k = 0; k <= degree; ++k)
        for (int kf = 0; kf <= k; ++kf)
            for (const ExpVec& f : monomials(m, kf))
                for (const ExpVec& g : monomials(m, k - kf)) pairs.emplace_back(f, g);

    if (degree >= 1) {
        const Representation V = build_rep(H.n(), m, A.a(), A.b());
        rep.checks.push_back(run_check("degree_one_rep", "degree-1 action is V_{a,b}", gens.size(),
                                       [&](std::size_t i) -> std::optional<std::string> {
            const std::size_t bi = gens[i];
            const Matrix& expect = i < static_cast<std::size_t>(m) ? V.X[i] : V.Z[i - m];
            if (A.action_matrix(H.basis(bi), 1) == expect) return std::nullopt;
            return "matrix of " + H.basis_label(bi) + " differs from V_{a,b}";
        }));
    }

    rep.checks.push_back(run_check("unit_action", "h·1 = ε(h)1", H.dim(), [&](std::size_t bi) -> std::optional<std::string> {
        const HopfElem h = H.basis(bi);
        const QpaElem one = QpaElem::monomial(H.n(), ExpVec(m, 0), K.one());
        if (A.act(h, one) == one.scaled(H.counit(h))) return std::nullopt;
        return "h = " + H.basis_label(bi);
    }));

    auto compatibility = [&](std::size_t bi, const ExpVec& f, const ExpVec& g) -> std::optional<std::string> {
        const HopfElem h = H.basis(bi);
        const QpaElem uf = QpaElem::monomial(H.n(), f, K.one());
        const QpaElem ug = QpaElem::monomial(H.n(), g, K.one());
        const QpaElem lhs = A.act(h, A.mul(uf, ug));
        QpaElem rhs(H.n());
        const HopfTensor dh = H.coproduct(h);
        for (const auto& [idx, r] : dh.components()) {
            for (const auto& [key, c] : r.terms()) {
                const ExpVec e = r.exponents(key);
                const auto [c1, g1] = A.act_basis(idx[0] * H.ring_dim() + RingElem(H.n(), m).key_of(ExpVec(e.begin(), e.begin() + m)), f);
                const auto [c2, g2] = A.act_basis(idx[1] * H.ring_dim() + RingElem(H.n(), m).key_of(ExpVec(e.begin() + m, e.end())), g);
                rhs = rhs + A.mul(QpaElem::monomial(H.n(), g1, c * c1), QpaElem::monomial(H.n(), g2, c2));
            }
        }
        if (lhs == rhs) return std::nullopt;
        return pair_label(H, bi, f, g) + ": h·(fg) = " + lhs.str() + " but Σ(h1·f)(h2·g) = " + rhs.str();
    };

    rep.checks.push_back(run_check("module_algebra_generators", "h·(fg) = Σ (h_(1)·f)(h_(2)·g), h a generator",
                                   gens.size() * pairs.size(), [&](std::size_t i) {
        const auto& [f, g] = pairs[i % pairs.size()];
        return compatibility(gens[i / pairs.size()], f, g);
    }));
    rep.checks.push_back(run_check("module_algebra_sampled", "h·(fg) = Σ (h_(1)·f)(h_(2)·g), h sampled",
                                   sampled.size() * pairs.size(), [&](std::size_t i) {
        const auto& [f, g] = pairs[i % pairs.size()];
        return compatibility(sampled[i / pairs.size()], f, g);
    }));

    // ρ_k(h₁h₂) = ρ_k(h₁)ρ_k(h₂) on every degree k ≤ degree
    std::vector<std::pair<std::size_t, std::size_t>> hpairs;
    for (std::size_t x : gens)
        for (std::size_t y : gens) hpairs.emplace_back(x, y);
    for (std::size_t s = 0; s < samples; ++s) hpairs.emplace_back(rng() % H.dim(), rng() % H.dim());
    const std::size_t nk = static_cast<std::size_t>(degree) + 1;
    rep.checks.push_back(run_check("action_homomorphism", "ρ_k(h₁h₂) = ρ_k(h₁)ρ_k(h₂)", hpairs.size() * nk,
                                   [&](std::size_t i) -> std::optional<std::string> {
        const auto [x, y] = hpairs[i / nk];
        const int k = static_cast<int>(i % nk);
        if (A.action_matrix(H.mul(H.basis(x), H.basis(y)), k) ==
            A.action_matrix(H.basis(x), k) * A.action_matrix(H.basis(y), k))
            return std::nullopt;
        return "degree " + std::to_string(k) + ", h1 = " + H.basis_label(x) + ", h2 = " + H.basis_label(y);
    }));
    return rep;
}

std::string to_string(Subalgebra s) {
    switch (s) {
        case Subalgebra::full: return "full";
        case Subalgebra::cyclic: return "cyclic";
        case Subalgebra::base: return "base";
    }
    return "?";
}

std::vector<HopfElem> subalgebra_generators(const HopfAlgebra& H, Subalgebra s) {
    std::vector<HopfElem> gens;
    for (int i = 1; i <= H.m(); ++i) gens.push_back(H.x(i));
    if (s == Subalgebra::full) {
        for (int k = 1; k < H.m(); ++k) gens.push_back(H.z(k));
    } else if (s == Subalgebra::cyclic && H.m() >= 2) {
        std::vector<int> word(H.m() - 1);
        std::iota(word.begin(), word.end(), 1);
        gens.push_back(H.z_word(word));
    }
    return gens;
}

HopfElem subalgebra_integral(const HopfAlgebra& H, Subalgebra s) {
    if (s == Subalgebra::full) return H.integral();
    const HopfElem full = H.integral();
    const RingElem intR = full.component({static_cast<std::uint16_t>(H.group().identity_index())});
    std::vector<std::size_t> perms{H.group().identity_index()};
    if (s == Subalgebra::cyclic) perms = cyclic_perms(H.group());
    HopfElem out = H.zero();
    for (std::size_t w : perms) out.add({static_cast<std::uint16_t>(w)}, intR);
    return out;
}

namespace {

std::vector<QpaElem> rows_as_elems(Matrix M, const std::vector<ExpVec>& mono, int n) {
    const auto pivots = rref(M);
    std::vector<QpaElem> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        QpaElem e(n);
        for (std::size_t c = 0; c < mono.size(); ++c) e.add(mono[c], M(r, c));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<InvariantSpace> invariants(const QuantumPolynomialAlgebra& A, Subalgebra s) {
    const HopfAlgebra& H = A.hopf();
    const CycContext& K = CycContext::get(A.n());
    const std::vector<HopfElem> gens = subalgebra_generators(H, s);
    std::vector<InvariantSpace> out;
    for (int k = 0; k <= A.max_degree(); ++k) {
        const std::vector<ExpVec> mono = monomials(A.m(), k);
        const std::size_t dim = mono.size();
        Matrix system(K, gens.size() * dim, dim);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Matrix M = A.action_matrix(gens[g], k) - Matrix::identity(K, dim).scaled(H.counit(gens[g]));
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) system(g * dim + r, c) = M(r, c);
        }
        const auto kernel = nullspace(system);
        Matrix rows(K, kernel.size(), dim);
        for (std::size_t r = 0; r < kernel.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) rows(r, c) = kernel[r][c];
        out.push_back({k, rows_as_elems(std::move(rows), mono, A.n())});
    }
    return out;
}

std::vector<InvariantSpace> reynolds_invariants(const QuantumPolynomialAlgebra& A, Subalgebra s) {
    const CycContext& K = CycContext::get(A.n());
    const HopfElem lambda = subalgebra_integral(A.hopf(), s);
    std::vector<InvariantSpace> out;
    for (int k = 0; k <= A.max_degree(); ++k) {
        const std::vector<ExpVec> mono = monomials(A.m(), k);
        const Matrix M = A.action_matrix(lambda, k);
        Matrix T(K, M.cols(), M.rows());
        for (std::size_t r = 0; r < M.rows(); ++r)
            for (std::size_t c = 0; c < M.cols(); ++c) T(c, r) = M(r, c);
        out.push_back({k, rows_as_elems(std::move(T), mono, A.n())});
    }
    return out;
}

QpaReport containment_check(const HopfAlgebra& H, int a, int b, int degree) {
    QuantumPolynomialAlgebra A(H, a, b, degree);
    const int n = H.n(), m = H.m();
    QpaReport rep;
    rep.n = n;
    rep.m = m;
    rep.a = A.a();
    rep.b = A.b();
    rep.degree = degree;
    const bool criterion = inner_faithful_criterion(n, m, A.a(), A.b());

    auto support_check = [&](Subalgebra s, std::string name, std::string anchor) {
        const auto spaces = invariants(A, s);
        CheckResult c;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        for (const auto& sp : spaces)
            for (const auto& e : sp.basis) {
                ++c.checked;
                for (const auto& [alpha, v] : e.terms())
                    if (std::any_of(alpha.begin(), alpha.end(), [&](int x) { return x % n != 0; }) && c.pass) {
                        c.pass = false;
                        c.witness = "degree " + std::to_string(sp.degree) + ": " + e.str();
                    }
            }
        return c;
    };

    CheckResult base = support_check(Subalgebra::base, "r_invariant_support", "n | α_i on A^R");
    CheckResult full = support_check(Subalgebra::full, "h_invariant_support", "n | α_i on A^H");
    if (!criterion) {
        // hypothesis fails: record the observation as a passing informational check
        base.name += "_unasserted";
        base.anchor += " (gcd(det M, n) != 1, not asserted)";
        base.pass = true;
        full.name += "_unasserted";
        full.anchor += " (gcd(det M, n) != 1, not asserted)";
        full.pass = true;
    }
    rep.checks.push_back(std::move(base));
    if (n % 2 == 0) rep.checks.push_back(std::move(full));

    if (n % 2 == 0) {
        rep.checks.push_back(run_check("powers_commute", "u_i^n u_j^n = u_j^n u_i^n", static_cast<std::size_t>(m * m),
                                       [&](std::size_t c) -> std::optional<std::string> {
            const int i = static_cast<int>(c / m) + 1, j = static_cast<int>(c % m) + 1;
            std::vector<int> w1(n, i), w2(n, j);
            std::vector<int> ij = w1, ji = w2;
            ij.insert(ij.end(), w2.begin(), w2.end());
            ji.insert(ji.end(), w1.begin(), w1.end());
            if (A.normal_order(ij) == A.normal_order(ji)) return std::nullopt;
            return "u" + std::to_string(i) + "^n u" + std::to_string(j) + "^n";
        }));
    }
    return rep;
}

CyclicFaithfulReport cyclic_inner_faithful_check(int n, int m, bool theta_identity) {
    HopfAlgebra H(n, m);
    QuantumPolynomialAlgebra A(H, 1, 0, 1);
    const CycContext& K = CycContext::get(n);
    CyclicFaithfulReport rep;
    rep.n = n;
    rep.m = m;

    bool ok = true;
    for (int i = 1; i <= m && ok; ++i) {
        const Matrix X = A.action_matrix(H.x(i), 1);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                if (r != c && !X(r, c).is_zero()) {
                    ok = false;
                    rep.witness = "x_" + std::to_string(i) + " does not preserve the lines K u_j";
                }
    }

    const HopfElem theta = subalgebra_generators(H, Subalgebra::cyclic).back();
    HopfElem power = H.one();
    std::vector<std::vector<int>> target(m);  // target[j][i]: line of θ^i u_j
    for (int i = 0; i < m && ok; ++i) {
        const Matrix M = theta_identity ? Matrix::identity(K, m) : A.action_matrix(power, 1);
        for (int c = 0; c < m && ok; ++c) {
            int line = -1, count = 0;
            for (int r = 0; r < m; ++r)
                if (!M(r, c).is_zero()) {
                    line = r;
                    ++count;
                }
            if (count != 1) {
                ok = false;
                rep.witness = "θ^" + std::to_string(i) + " u_" + std::to_string(c + 1) + " is not on a single line";
            } else if (std::find(target[c].begin(), target[c].end(), line) != target[c].end()) {
                ok = false;
                rep.witness = "θ^" + std::to_string(i) + " u_" + std::to_string(c + 1) + " lands on the line of a lower power";
            } else {
                target[c].push_back(line);
            }
        }
        power = H.mul(power, theta);
    }
    rep.block_structure = ok;
    rep.r_inner_faithful = inner_faithful_bruteforce(n, m, 1, 0).inner_faithful;
    if (!rep.r_inner_faithful && rep.witness.empty()) rep.witness = "R does not act inner-faithfully";
    rep.inner_faithful = rep.block_structure && rep.r_inner_faithful;
    return rep;
}

}  // namespace kacpal
