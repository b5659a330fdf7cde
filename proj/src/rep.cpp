#include "kacpal/rep.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "check_util.hpp"

namespace kacpal {

namespace {

using detail::run_check;

// Exponent of q in p-units: q^e = p^{2e}.
CycScalar qpow(const CycContext& K, long e) { return K.root(2 * e); }

std::string mat_str(const Matrix& M) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < M.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < M.cols(); ++c) os << (c ? ", " : "") << M(r, c).str();
    }
    os << "]";
    return os.str();
}

std::optional<std::string> compare(const std::string& what, const Matrix& lhs, const Matrix& rhs) {
    if (lhs == rhs) return std::nullopt;
    return what + ": " + mat_str(lhs) + " != " + mat_str(rhs);
}

}  // namespace

Representation build_rep(int n, int m, int a, int b) {
    if (n < 2 || m < 1) throw std::invalid_argument("build_rep: need n >= 2, m >= 1");
    const CycContext& K = CycContext::get(n);
    Representation V;
    V.n = n;
    V.m = m;
    V.a = ((a % n) + n) % n;
    V.b = ((b % n) + n) % n;
    for (int i = 0; i < m; ++i) {
        Matrix X(K, m, m);
        for (int r = 0; r < m; ++r) X(r, r) = qpow(K, r == i ? V.a : V.b);
        V.X.push_back(std::move(X));
    }
    const CycScalar diag = K.root(static_cast<long>(V.b) * V.b);
    for (int k = 0; k + 1 < m; ++k) {
        Matrix Z(K, m, m);
        for (int r = 0; r < m; ++r)
            if (r != k && r != k + 1) Z(r, r) = diag;
        Z(k, k + 1) = K.one();
        Z(k + 1, k) = qpow(K, static_cast<long>(V.a) * V.b);
        V.Z.push_back(std::move(Z));
    }
    return V;
}

Matrix rho_monomial(const Representation& V, const ExpVec& alpha) {
    const CycContext& K = CycContext::get(V.n);
    Matrix M = Matrix::identity(K, V.m);
    for (int i = 0; i < V.m; ++i)
        if (alpha[i]) M = M * V.X[i].pow(static_cast<unsigned>(alpha[i]));
    return M;
}

Matrix rho_ring(const Representation& V, const RingElem& r) {
    const CycContext& K = CycContext::get(V.n);
    Matrix M(K, V.m, V.m);
    for (const auto& [key, c] : r.terms()) M = M + rho_monomial(V, r.exponents(key)).scaled(c);
    return M;
}

Matrix rho(const HopfAlgebra& H, const Representation& V, const HopfElem& h) {
    const CycContext& K = CycContext::get(V.n);
    Matrix M(K, V.m, V.m);
    for (const auto& [idx, r] : h.components()) {
        Matrix W = Matrix::identity(K, V.m);
        for (int k : H.group().word(idx[0])) W = W * V.Z[k - 1];
        M = M + rho_ring(V, r) * W;
    }
    return M;
}

std::vector<CheckResult> verify_rep(const Representation& V) {
    const CycContext& K = CycContext::get(V.n);
    const int m = V.m;
    const Matrix I = Matrix::identity(K, m);
    std::vector<CheckResult> out;

    out.push_back(run_check("x_order", "X_i^n = I", m, [&](std::size_t i) {
        return compare("X_" + std::to_string(i + 1) + "^n", V.X[i].pow(V.n), I);
    }));
    out.push_back(run_check("x_commute", "X_i X_j = X_j X_i", m * m, [&](std::size_t c) {
        const std::size_t i = c / m, j = c % m;
        return compare("X_" + std::to_string(i + 1) + "X_" + std::to_string(j + 1), V.X[i] * V.X[j], V.X[j] * V.X[i]);
    }));
    const std::size_t nz = V.Z.size();
    out.push_back(run_check("zx_relation", "Z_k X_i = X_{s_k(i)} Z_k", nz * m, [&](std::size_t c) {
        const int k = static_cast<int>(c / m), i = static_cast<int>(c % m);
        const int si = i == k ? k + 1 : (i == k + 1 ? k : i);
        return compare("Z_" + std::to_string(k + 1) + "X_" + std::to_string(i + 1), V.Z[k] * V.X[i], V.X[si] * V.Z[k]);
    }));
    out.push_back(run_check("braid", "Z_k Z_{k+1} Z_k = Z_{k+1} Z_k Z_{k+1}", nz ? nz - 1 : 0, [&](std::size_t k) {
        return compare("braid at " + std::to_string(k + 1), V.Z[k] * V.Z[k + 1] * V.Z[k],
                       V.Z[k + 1] * V.Z[k] * V.Z[k + 1]);
    }));
    out.push_back(run_check("far_commute", "Z_k Z_l = Z_l Z_k for |k-l| > 1", nz * nz, [&](std::size_t c) {
        const std::size_t k = c / nz, l = c % nz;
        if (k + 1 >= l && l + 1 >= k) return std::optional<std::string>{};
        return compare("Z_" + std::to_string(k + 1) + "Z_" + std::to_string(l + 1), V.Z[k] * V.Z[l], V.Z[l] * V.Z[k]);
    }));
    out.push_back(run_check("z_square", "Z_k^2 = ρ(t_k)", nz, [&](std::size_t k) {
        return compare("Z_" + std::to_string(k + 1) + "^2", V.Z[k] * V.Z[k],
                       rho_ring(V, t_of(V.n, m, static_cast<int>(k) + 1)));
    }));
    return out;
}

CheckResult verify_rep_homomorphism(const HopfAlgebra& H, const Representation& V, std::size_t samples,
                                    std::uint64_t seed) {
    if (H.n() != V.n || H.m() != V.m) throw std::invalid_argument("verify_rep_homomorphism: shape mismatch");
    std::vector<std::size_t> gens;
    RingElem shape(H.n(), H.m());
    for (int i = 1; i <= H.m(); ++i) {
        ExpVec e(H.m(), 0);
        e[i - 1] = 1;
        gens.push_back(H.group().identity_index() * H.ring_dim() + shape.key_of(e));
    }
    for (int k = 1; k < H.m(); ++k) gens.push_back(H.group().generator_index(k) * H.ring_dim());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t g : gens)
        for (std::size_t h : gens) pairs.emplace_back(g, h);
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) pairs.emplace_back(rng() % H.dim(), rng() % H.dim());

    std::vector<Matrix> images;
    images.reserve(H.dim());
    for (std::size_t b = 0; b < H.dim(); ++b) images.push_back(rho(H, V, H.basis(b)));

    return run_check("representation", "ρ(h₁h₂) = ρ(h₁)ρ(h₂)", pairs.size(), [&](std::size_t i) {
        const auto [b1, b2] = pairs[i];
        return compare("ρ(" + H.basis_label(b1) + " * " + H.basis_label(b2) + ")",
                       rho(H, V, H.mul(H.basis(b1), H.basis(b2))), images[b1] * images[b2]);
    });
}

std::size_t span_dimension(const Representation& V) {
    const CycContext& K = CycContext::get(V.n);
    const std::size_t m = V.m;
    std::vector<Matrix> gens;
    for (const auto& X : V.X) gens.push_back(X);
    for (const auto& Z : V.Z) gens.push_back(Z);

    SpanBuilder span(K, m * m);
    std::vector<Matrix> frontier{Matrix::identity(K, m)};
    span.insert(frontier[0].flatten());
    while (!frontier.empty() && span.dimension() < m * m) {
        std::vector<Matrix> next;
        for (const auto& A : frontier)
            for (const auto& G : gens) {
                Matrix P = A * G;
                if (span.insert(P.flatten())) next.push_back(std::move(P));
            }
        frontier = std::move(next);
    }
    return span.dimension();
}

bool is_simple(const Representation& V) {
    return span_dimension(V) == static_cast<std::size_t>(V.m) * V.m;
}

namespace {

// Rows of the system T ρ₁(g) − ρ₂(g) T = 0 in the m² unknowns T(r,c) (row-major).
Matrix intertwiner_system(const Representation& V1, const Representation& V2) {
    if (V1.n != V2.n || V1.m != V2.m) throw std::invalid_argument("intertwiner: shape mismatch");
    const CycContext& K = CycContext::get(V1.n);
    const std::size_t m = V1.m;
    std::vector<std::pair<const Matrix*, const Matrix*>> gens;
    for (int i = 0; i < V1.m; ++i) gens.emplace_back(&V1.X[i], &V2.X[i]);
    for (std::size_t k = 0; k < V1.Z.size(); ++k) gens.emplace_back(&V1.Z[k], &V2.Z[k]);

    Matrix S(K, gens.size() * m * m, m * m);
    std::size_t row = 0;
    for (const auto& [A, B] : gens) {
        // (T A)(i,j) = Σ_l T(i,l) A(l,j);  (B T)(i,j) = Σ_l B(i,l) T(l,j)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j, ++row) {
                for (std::size_t l = 0; l < m; ++l) {
                    if (!(*A)(l, j).is_zero()) S(row, i * m + l) += (*A)(l, j);
                    if (!(*B)(i, l).is_zero()) S(row, l * m + j) -= (*B)(i, l);
                }
            }
    }
    return S;
}

Matrix as_matrix(const CycContext& K, std::size_t m, const std::vector<CycScalar>& v) {
    Matrix T(K, m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) T(r, c) = v[r * m + c];
    return T;
}

}  // namespace

std::size_t intertwiner_dimension(const Representation& V1, const Representation& V2) {
    return nullspace(intertwiner_system(V1, V2)).size();
}

bool modules_isomorphic(const Representation& V1, const Representation& V2) {
    const CycContext& K = CycContext::get(V1.n);
    const std::size_t m = V1.m;
    const auto basis = nullspace(intertwiner_system(V1, V2));
    if (basis.empty()) return false;
    for (const auto& v : basis)
        if (!determinant(as_matrix(K, m, v)).is_zero()) return true;
    // det(Σ c_i T_i) is a polynomial in the c_i of degree m; if it is not
    // identically zero it is nonzero on some point of {0..m}^d.
    const std::size_t d = basis.size();
    std::vector<int> c(d, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < d && c[pos] == static_cast<int>(m)) c[pos++] = 0;
        if (pos == d) break;
        ++c[pos];
        std::vector<CycScalar> v(m * m, K.zero());
        for (std::size_t i = 0; i < d; ++i)
            if (c[i])
                for (std::size_t j = 0; j < m * m; ++j) v[j] += basis[i][j] * Rational(c[i]);
        if (!determinant(as_matrix(K, m, v)).is_zero()) return true;
    }
    return false;
}

std::vector<std::vector<std::int64_t>> matrix_M(int m, std::int64_t a, std::int64_t b) {
    std::vector<std::vector<std::int64_t>> M(m, std::vector<std::int64_t>(m, b));
    for (int i = 0; i < m; ++i) M[i][i] = a;
    return M;
}

std::int64_t det_M(int m, std::int64_t a, std::int64_t b) {
    const auto M0 = matrix_M(m, a, b);
    std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M[i][j] = static_cast<long>(M0[i][j]);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < m; ++k) {
        if (M[k][k] == 0) {
            int r = k + 1;
            while (r < m && M[r][k] == 0) ++r;
            if (r == m) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j) {
                M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = M[k][k];
    }
    mpz_class det = sign * M[m - 1][m - 1];
    if (!det.fits_slong_p()) throw std::overflow_error("det_M: determinant exceeds 64 bits");
    return det.get_si();
}

bool inner_faithful_criterion(int n, int m, int a, int b) {
    const std::int64_t d = det_M(m, a, b);
    return std::gcd(d < 0 ? -d : d, static_cast<std::int64_t>(n)) == 1;
}

BruteForceResult inner_faithful_bruteforce(int n, int m, int a, int b, std::size_t max_subgroups) {
    std::size_t order = 1;
    for (int i = 0; i < m; ++i) {
        order *= static_cast<std::size_t>(n);
        if (order > 4096) throw SizeGuard("inner_faithful_bruteforce: n^m exceeds 4096");
    }
    const Representation V = build_rep(n, m, a, b);
    const CycContext& K = CycContext::get(n);
    const Matrix I = Matrix::identity(K, m);

    auto decode = [&](std::size_t code) {
        ExpVec e(m);
        for (int i = m - 1; i >= 0; --i) {
            e[i] = static_cast<int>(code % n);
            code /= n;
        }
        return e;
    };
    auto add = [&](std::size_t x, std::size_t y) {
        std::size_t r = 0, place = 1;
        for (int i = 0; i < m; ++i) {
            r += ((x % n + y % n) % n) * place;
            x /= n;
            y /= n;
            place *= n;
        }
        return r;
    };

    std::vector<bool> trivial(order);
    for (std::size_t g = 0; g < order; ++g) trivial[g] = rho_monomial(V, decode(g)) == I;

    // Subgroups as sorted element lists; each new one is <H, g> for a known H.
    using Set = std::vector<std::size_t>;
    std::set<Set> seen{{0}};
    std::vector<Set> queue{{0}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Set H = queue[qi];
        std::vector<bool> in(order, false);
        for (std::size_t h : H) in[h] = true;
        for (std::size_t g = 1; g < order; ++g) {
            if (in[g]) continue;
            std::vector<bool> mark(order, false);
            Set S;
            std::size_t mult = 0;
            do {
                for (std::size_t h : H) {
                    const std::size_t x = add(h, mult);
                    if (!mark[x]) {
                        mark[x] = true;
                        S.push_back(x);
                    }
                }
                mult = add(mult, g);
            } while (mult != 0);
            std::sort(S.begin(), S.end());
            if (seen.insert(S).second) {
                if (seen.size() > max_subgroups)
                    throw SizeGuard("inner_faithful_bruteforce: more than " + std::to_string(max_subgroups) +
                                    " subgroups");
                queue.push_back(std::move(S));
            }
        }
    }

    BruteForceResult res;
    res.subgroup_count = seen.size();
    for (const Set& H : seen) {
        if (!std::all_of(H.begin(), H.end(), [&](std::size_t h) { return trivial[h]; })) continue;
        std::vector<ExpVec> elems;
        for (std::size_t h : H) elems.push_back(decode(h));
        std::sort(elems.begin(), elems.end());
        res.annihilating.push_back(std::move(elems));
    }
    res.inner_faithful = res.annihilating.size() == 1;
    return res;
}

}  // namespace kacpal
