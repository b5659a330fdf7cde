#include "kacpal/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kacpal/hopf.hpp"
#include "kacpal/qpa.hpp"
#include "kacpal/rep.hpp"
#include "kacpal/report.hpp"
#include "kacpal/symgroup.hpp"
#include "kacpal/twist_check.hpp"

namespace kacpal::cli {

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kRefused = 3 };

constexpr std::size_t kAllPairsLimit = 5000;
constexpr std::size_t kInstanceLimit = 2000000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    int n = -1, m = -1, a = -1, b = -1;
    int degree = -1;
    std::string scope = "auto";
    std::uint64_t seed = 42;
    std::string subalgebra = "full";
    std::string out;
    std::string format = "json";
    std::size_t samples = 0;
    int search = 0;
    bool bruteforce = false;
    bool drop_twist = false;
    std::string mutate;
};

std::size_t instance_dim(int n, int m) {
    std::size_t d = 1;
    for (int i = 0; i < m; ++i) {
        d *= static_cast<std::size_t>(n);
        if (d > kInstanceLimit) return kInstanceLimit + 1;
    }
    for (int i = 2; i <= m; ++i) {
        d *= static_cast<std::size_t>(i);
        if (d > kInstanceLimit) return kInstanceLimit + 1;
    }
    return d;
}

void need_instance(const Config& c, bool need_m = true, bool builds_hopf = true) {
    if (c.n < 2) throw UsageError("n must be an integer >= 2");
    if (need_m && (c.m < 2 || c.m > 8)) throw UsageError("m must be an integer in [2, 8]");
    if (need_m && builds_hopf && instance_dim(c.n, c.m) > kInstanceLimit)
        throw SizeGuard("instance too large: n^m * m! exceeds " + std::to_string(kInstanceLimit));
}

void need_params(const Config& c) {
    if (c.a < 0 || c.b < 0) throw UsageError("a and b are required (integers >= 0)");
}

class Report {
public:
    Report(std::string command, const Config& c) : command_(std::move(command)) {
        config_["n"] = c.n;
        if (c.m >= 0) config_["m"] = c.m;
    }

    Json& config() { return config_; }
    Json& result() { return result_; }

    void add(const CheckResult& c, const std::string& prefix = "") {
        CheckResult named = c;
        named.name = prefix + c.name;
        checks_.push_back(to_json(named));
        timings_[named.name] = c.seconds;
        passed_ = passed_ && c.pass;
    }
    void add_all(const std::vector<CheckResult>& cs, const std::string& prefix = "") {
        for (const auto& c : cs) add(c, prefix);
    }
    void add_bool(const std::string& name, const std::string& anchor, bool pass, const std::string& witness = "") {
        CheckResult c;
        c.name = name;
        c.anchor = anchor;
        c.pass = pass;
        c.checked = 1;
        if (!pass) c.witness = witness;
        add(c);
    }
    bool passed() const { return passed_; }

    Json finish(int n, double seconds) {
        Json out;
        out["schema"] = kReportSchema;
        out["tool"] = "kacpal";
        out["version"] = kVersion;
        out["command"] = command_;
        out["config"] = config_;
        out["field"] = field_json(n);
        out["passed"] = passed_;
        out["checks"] = checks_;
        out["result"] = result_;
        timings_["total"] = seconds;
        out["timings"] = timings_;
        return out;
    }

private:
    std::string command_;
    Json config_ = Json::object();
    Json result_ = Json::object();
    Json checks_ = Json::array();
    Json timings_ = Json::object();
    bool passed_ = true;
};

Json perm_json(const SymmetricGroup& G, std::size_t w) {
    Json img = Json::array();
    for (int x : G.element(w).images()) img.push_back(x + 1);
    return Json{{"index", w}, {"word", word_str(G.word(w))}, {"images", img}};
}

// Sparse coordinates in the basis x^α w̄ (index w·n^m + key(α)).
Json coords_json(const HopfAlgebra& H, const HopfElem& h) {
    Json out = Json::array();
    for (const auto& [idx, r] : h.components())
        for (const auto& [key, c] : r.terms())
            out.push_back(Json{{"index", idx[0] * H.ring_dim() + key}, {"coeff", to_json(c)}});
    return out;
}

Json coords2_json(const HopfAlgebra& H, const HopfTensor& t) {
    Json out = Json::array();
    const RingElem shape(H.n(), H.m());
    for (const auto& [idx, r] : t.components())
        for (const auto& [key, c] : r.terms()) {
            const ExpVec e = r.exponents(key);
            const ExpVec left(e.begin(), e.begin() + H.m()), right(e.begin() + H.m(), e.end());
            out.push_back(Json{{"left", idx[0] * H.ring_dim() + shape.key_of(left)},
                               {"right", idx[1] * H.ring_dim() + shape.key_of(right)},
                               {"coeff", to_json(c)}});
        }
    return out;
}

Mutation parse_mutation(const std::string& s) {
    Mutation mut;
    if (s.empty()) return mut;
    if (s == "drop-cocycle") {
        mut.drop_cocycle = true;
    } else if (s == "drop-twist") {
        mut.drop_twist = true;
    } else if (s == "drop-gamma-s1s1") {
        mut.drop_gamma_cell = std::make_pair(std::size_t{0}, std::size_t{0});
    } else {
        throw UsageError("unknown mutation '" + s + "'");
    }
    return mut;
}

Scope parse_scope(const std::string& s, std::size_t dim, std::uint64_t seed) {
    if (s == "auto") return Scope::default_for(dim, seed);
    Scope sc;
    sc.seed = seed;
    if (s == "all") {
        sc.all = true;
        return sc;
    }
    const std::string prefix = "sampled:";
    if (s.rfind(prefix, 0) == 0) {
        try {
            std::size_t used = 0;
            const long long k = std::stoll(s.substr(prefix.size()), &used);
            if (used + prefix.size() == s.size() && k >= 0) {
                sc.all = false;
                sc.samples = static_cast<std::size_t>(k);
                return sc;
            }
        } catch (const std::exception&) {
        }
    }
    throw UsageError("--scope must be all, auto or sampled:K");
}

// --- subcommands ---------------------------------------------------------------

void cmd_verify(const Config& c, Report& rep) {
    need_instance(c);
    Mutation mut = parse_mutation(c.mutate);
    if (mut.drop_gamma_cell) {
        SymmetricGroup G(c.m);
        const std::size_t s1 = G.generator_index(1);
        mut.drop_gamma_cell = std::make_pair(s1, s1);
    }
    const std::size_t dim = instance_dim(c.n, c.m);
    const Scope scope = parse_scope(c.scope, dim, c.seed);
    if (scope.all && dim > kAllPairsLimit)
        throw SizeGuard("all-pairs sweep refused: n^m * m! = " + std::to_string(dim) + " exceeds " +
                        std::to_string(kAllPairsLimit));
    rep.config()["scope"] = scope.str();
    rep.config()["seed"] = c.seed;
    if (!c.mutate.empty()) rep.config()["mutation"] = c.mutate;

    HopfAlgebra H(c.n, c.m, mut);
    const AxiomReport ax = verify_hopf_axioms(H, scope);
    rep.add_all(ax.checks);
    rep.add_all(verify_integral(H), "integral.");
    const CyclicReport cyc = verify_cyclic_subalgebra(H);
    rep.add_all(cyc.checks, "cyclic.");
    rep.result()["dim"] = H.dim();
    rep.result()["ring_dim"] = H.ring_dim();
    rep.result()["group_order"] = H.group().order();
    rep.result()["cyclic_dim"] = cyc.dim;
    rep.result()["theta_power"] = to_json(cyc.t);
    Json witnesses = Json::array();
    for (const auto& chk : ax.checks)
        if (!chk.pass) witnesses.push_back(Json{{"check", chk.name}, {"witness", chk.witness}});
    rep.result()["witnesses"] = witnesses;
}

void cmd_twist(const Config& c, Report& rep) {
    need_instance(c, false);
    const int m = c.m < 0 ? 3 : c.m;
    if (m < 2 || m > 8) throw UsageError("m must be an integer in [2, 8]");
    rep.config()["m"] = m;
    const RingElem J = twist_J(c.n);
    Json conds = Json::array();
    auto record = [&](const std::string& name, const std::string& anchor, const TwistResult& t) {
        Json e{{"condition", name}, {"status", t.holds ? "pass" : "fail"}};
        if (t.witness) e["witness"] = t.condition + ": " + *t.witness;
        conds.push_back(e);
        rep.add_bool(name, anchor, t.holds, t.witness ? t.condition + ": " + *t.witness : t.condition);
    };
    record("twist", "(Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J), (ε⊗id)J = 1 = (id⊗ε)J", is_twist(J));
    record("strong_twist", "(e_1⊗e_2)(J) is a twist of A⊗A", is_strong_twist(J));
    record("superstrong", "Δ(J) = (e_1⊗e_2)(J)(e_2⊗e_1)(J)(J⊗J)", is_superstrong(J));
    record("antipode", "(S⊗S)J = J, (S⊗id)J = J^{-1} = (id⊗S)J", antipode_conditions(J));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            record("embedded_twist_" + std::to_string(i) + "_" + std::to_string(j),
                   "(e_i⊗e_j)(J) is a twist of R⊗R", embedded_twist(c.n, i, j, m));
    rep.result()["J"] = to_json(J);
    rep.result()["conditions"] = conds;
    if (c.search > 0) {
        rep.config()["search"] = c.search;
        rep.config()["seed"] = c.seed;
        const TwistSearchReport s = twist_search(c.n, c.search, c.seed);
        rep.result()["search"] = Json{{"candidates", s.candidates},       {"invertible", s.invertible},
                                      {"twists", s.twists},               {"strong", s.strong},
                                      {"twist_not_strong", s.twist_not_strong}, {"strong_not_twist", s.strong_not_twist},
                                      {"examples", s.examples}};
    }
}

void cmd_gamma(const Config& c, Report& rep) {
    need_instance(c);
    HopfAlgebra H(c.n, c.m);
    const SymmetricGroup& G = H.group();
    const CocycleTable table(c.n, G);
    const std::size_t N = G.order();

    Json perms = Json::array();
    for (std::size_t w = 0; w < N; ++w) perms.push_back(perm_json(G, w));
    Json cells = Json::array();
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v)
            cells.push_back(Json{{"w", word_str(G.word(w))}, {"v", word_str(G.word(v))}, {"gamma", to_json(table(w, v))}});
    rep.result()["perms"] = perms;
    rep.result()["table"] = cells;

    const auto viol = cocycle_identity_violation(table);
    std::string vw;
    if (viol) {
        std::ostringstream os;
        os << "(w, v, u) = (" << word_str(G.word((*viol)[0])) << ", " << word_str(G.word((*viol)[1])) << ", "
           << word_str(G.word((*viol)[2])) << ")";
        vw = os.str();
    }
    rep.add_bool("cocycle_identity", "act(w)(γ(v,u)) γ(w,vu) = γ(w,v) γ(wv,u)", !viol, vw);
    const auto cv = counit_violation(table);
    rep.add_bool("cocycle_counit", "ε(γ(w,v)) = 1", !cv,
                 cv ? "(" + word_str(G.word(cv->first)) + ", " + word_str(G.word(cv->second)) + ")" : "");

    std::string pw;
    for (std::size_t w = 0; w < N && pw.empty(); ++w)
        for (std::size_t v = 0; v < N && pw.empty(); ++v) {
            const RingElem one = RingElem::one(c.n, c.m);
            if (H.mul(H.element(one, w), H.element(one, v)) != H.element(table(w, v), G.mul(w, v)))
                pw = "(" + word_str(G.word(w)) + ", " + word_str(G.word(v)) + ")";
        }
    rep.add_bool("product_agreement", "w̄ v̄ = γ(w,v) (wv)‾ in H", pw.empty(), pw);

    if (c.m == 3) {
        Json annot = Json::array();
        std::string mismatch;
        for (const GammaCell& cell : compare_gamma_m3(c.n)) {
            annot.push_back(Json{{"w", word_str(cell.w)},
                                 {"v", word_str(cell.v)},
                                 {"formula", cell.formula},
                                 {"match", cell.match},
                                 {"computed", to_json(cell.computed)}});
            if (!cell.match && mismatch.empty()) mismatch = word_str(cell.w) + " x " + word_str(cell.v);
        }
        rep.result()["closed_form_table"] = annot;
        if (!mismatch.empty()) {
            Scope gens_only;
            gens_only.all = false;
            gens_only.samples = 0;
            const AxiomReport ax = verify_hopf_axioms(H, gens_only);
            const CheckResult* assoc = ax.find("associativity");
            mismatch += assoc && assoc->pass ? "; associativity of H holds with the computed table"
                                             : "; associativity witness: " + (assoc ? assoc->witness : std::string());
        }
        rep.add_bool("closed_form_table", "γ agrees with the closed-form m = 3 table", mismatch.empty(), mismatch);
    }
}

void cmd_rep(const Config& c, Report& rep) {
    need_instance(c);
    need_params(c);
    const Representation V = build_rep(c.n, c.m, c.a, c.b);
    rep.config()["a"] = V.a;
    rep.config()["b"] = V.b;
    const std::size_t samples = c.samples ? c.samples : 200;
    rep.config()["samples"] = samples;
    rep.config()["seed"] = c.seed;
    rep.add_all(verify_rep(V));
    HopfAlgebra H(c.n, c.m);
    rep.add(verify_rep_homomorphism(H, V, samples, c.seed));
    const std::size_t span = span_dimension(V);
    const bool simple = span == static_cast<std::size_t>(c.m * c.m);
    rep.add_bool("simplicity", "a ≠ b implies V_{a,b} simple", V.a == V.b || simple,
                 "span dimension " + std::to_string(span));
    Json X = Json::array(), Z = Json::array();
    for (const auto& M : V.X) X.push_back(to_json(M));
    for (const auto& M : V.Z) Z.push_back(to_json(M));
    rep.result()["X"] = X;
    rep.result()["Z"] = Z;
    rep.result()["span_dimension"] = span;
    rep.result()["simple"] = simple;
    rep.result()["det_M"] = det_M(c.m, V.a, V.b);
    rep.result()["criterion"] = inner_faithful_criterion(c.n, c.m, V.a, V.b);
}

void cmd_inner(const Config& c, Report& rep) {
    need_instance(c, true, false);
    need_params(c);
    const int a = c.a % c.n, b = c.b % c.n;
    rep.config()["a"] = a;
    rep.config()["b"] = b;
    rep.config()["bruteforce"] = c.bruteforce;
    const std::int64_t det = det_M(c.m, a, b);
    const bool crit = inner_faithful_criterion(c.n, c.m, a, b);
    rep.result()["det_M"] = det;
    rep.result()["criterion"] = crit;
    if (!c.bruteforce) return;
    const BruteForceResult bf = inner_faithful_bruteforce(c.n, c.m, a, b);
    Json subs = Json::array();
    for (const auto& S : bf.annihilating) subs.push_back(S);
    rep.result()["bruteforce"] =
        Json{{"inner_faithful", bf.inner_faithful}, {"subgroup_count", bf.subgroup_count}, {"annihilating", subs}};
    rep.add_bool("criterion_implies_bruteforce", "gcd(det M, n) = 1 implies inner-faithful", !crit || bf.inner_faithful,
                 "criterion holds but a nontrivial subgroup acts trivially");
}

Subalgebra parse_subalgebra(const std::string& s) {
    if (s == "full") return Subalgebra::full;
    if (s == "cyclic") return Subalgebra::cyclic;
    if (s == "base") return Subalgebra::base;
    throw UsageError("--subalgebra must be full, cyclic or base");
}

void cmd_invariants(const Config& c, Report& rep) {
    need_instance(c);
    need_params(c);
    const Subalgebra sub = parse_subalgebra(c.subalgebra);
    const int d = c.degree >= 0 ? c.degree : 2 * c.n;
    HopfAlgebra H(c.n, c.m);
    QuantumPolynomialAlgebra A(H, c.a, c.b, d);
    rep.config()["a"] = A.a();
    rep.config()["b"] = A.b();
    rep.config()["degree"] = d;
    rep.config()["subalgebra"] = to_string(sub);
    const auto inv = invariants(A, sub);
    const auto rey = reynolds_invariants(A, sub);
    Json degrees = Json::array();
    std::string mismatch;
    for (std::size_t k = 0; k < inv.size(); ++k) {
        Json basis = Json::array();
        Json text = Json::array();
        for (const auto& f : inv[k].basis) {
            basis.push_back(to_json(f));
            text.push_back(f.str());
        }
        degrees.push_back(Json{{"degree", inv[k].degree}, {"dim", inv[k].basis.size()}, {"basis", basis}, {"text", text}});
        if (inv[k].basis != rey[k].basis && mismatch.empty()) mismatch = "degree " + std::to_string(k);
    }
    rep.result()["degrees"] = degrees;
    if (c.m == 2 && sub != Subalgebra::base) rep.result()["cyclic_is_full"] = true;
    rep.add_bool("reynolds_agreement", "kernel of (g − ε(g)) = image of the integral", mismatch.empty(), mismatch);
}

void cmd_module_algebra(const Config& c, Report& rep) {
    need_instance(c);
    need_params(c);
    const int d = c.degree >= 0 ? c.degree : 2 * c.n;
    const std::size_t samples = c.samples ? c.samples : 8;
    Mutation mut;
    mut.drop_twist = c.drop_twist;
    HopfAlgebra H(c.n, c.m, mut);
    const QpaReport r = module_algebra_check(H, c.a, c.b, d, samples, c.seed);
    rep.config()["a"] = r.a;
    rep.config()["b"] = r.b;
    rep.config()["degree"] = d;
    rep.config()["samples"] = samples;
    rep.config()["seed"] = c.seed;
    if (c.drop_twist) rep.config()["mutation"] = "drop-twist";
    rep.add_all(r.checks);
    rep.result()["r_matrix"] = Json::array();
    for (const auto& row : r_matrix(c.n, c.m, r.a, r.b)) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(to_json(x));
        rep.result()["r_matrix"].push_back(jr);
    }
}

void cmd_export(const Config& c, Report& rep) {
    need_instance(c);
    const std::size_t dim = instance_dim(c.n, c.m);
    if (dim > kAllPairsLimit)
        throw SizeGuard("export refused: n^m * m! = " + std::to_string(dim) + " exceeds " + std::to_string(kAllPairsLimit));
    HopfAlgebra H(c.n, c.m);
    Json labels = Json::array(), mul = Json::array(), delta = Json::array(), eps = Json::array(), S = Json::array();
    std::vector<HopfElem> basis;
    for (std::size_t b = 0; b < H.dim(); ++b) {
        basis.push_back(H.basis(b));
        labels.push_back(H.basis_label(b));
    }
    for (std::size_t i = 0; i < H.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < H.dim(); ++j) row.push_back(coords_json(H, H.mul(basis[i], basis[j])));
        mul.push_back(std::move(row));
        delta.push_back(coords2_json(H, H.coproduct(basis[i])));
        eps.push_back(to_json(H.counit(basis[i])));
        S.push_back(coords_json(H, H.antipode(basis[i])));
    }
    rep.result()["dim"] = H.dim();
    rep.result()["basis"] = labels;
    rep.result()["unit"] = coords_json(H, H.one());
    rep.result()["mul"] = mul;
    rep.result()["coproduct"] = delta;
    rep.result()["counit"] = eps;
    rep.result()["antipode"] = S;
}

void cmd_embed(const Config& c, Report& rep) {
    need_instance(c);
    if (c.m >= 8) throw UsageError("embed-check needs m <= 7");
    if (instance_dim(c.n, c.m + 1) > kInstanceLimit) throw SizeGuard("target instance too large");
    rep.add_all(embedding_check(c.n, c.m));
    rep.result()["source_dim"] = instance_dim(c.n, c.m);
    rep.result()["target_dim"] = instance_dim(c.n, c.m + 1);
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Exact verification of the generalized Kac-Paljutkin Hopf algebras H_{n,m}", "kacpal"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Config cfg;

    struct Entry {
        CLI::App* app;
        void (*fn)(const Config&, Report&);
    };
    std::vector<Entry> entries;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Write the JSON report to this file");
        sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json"}));
    };
    auto inst = [&](CLI::App* sub, bool with_m = true) {
        sub->add_option("n,--n", cfg.n, "Order of the cyclic group Z_n")->required();
        if (with_m) sub->add_option("m,--m", cfg.m, "Number of tensor factors")->required();
    };
    auto params = [&](CLI::App* sub) {
        sub->add_option("a,--a", cfg.a, "Parameter a of V_{a,b}")->required();
        sub->add_option("b,--b", cfg.b, "Parameter b of V_{a,b}")->required();
    };
    auto add = [&](const char* name, const char* desc, void (*fn)(const Config&, Report&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        common(sub);
        entries.push_back({sub, fn});
        return sub;
    };

    CLI::App* s;
    s = add("verify", "Hopf axioms, integral and cyclic subalgebra of H_{n,m}", cmd_verify);
    inst(s);
    s->add_option("--scope", cfg.scope, "all | sampled:K | auto");
    s->add_option("--seed", cfg.seed, "Seed for sampled pairs");
    s->add_option("--mutate", cfg.mutate, "Negative control: drop-cocycle | drop-twist | drop-gamma-s1s1");

    s = add("twist-check", "Twist conditions for the canonical J on K Z_n", cmd_twist);
    inst(s, false);
    s->add_option("--m", cfg.m, "Largest m for the embedded twists (default 3)");
    s->add_option("--search", cfg.search, "Number of random twist candidates to explore");
    s->add_option("--seed", cfg.seed, "Seed for the search");

    s = add("gamma-table", "The cocycle γ on Σ_m x Σ_m", cmd_gamma);
    inst(s);

    s = add("rep-check", "Relations, simplicity and matrices of V_{a,b}", cmd_rep);
    inst(s);
    params(s);
    s->add_option("--samples", cfg.samples, "Sampled basis pairs for the representation property");
    s->add_option("--seed", cfg.seed, "Seed");

    s = add("inner-faithful", "Inner-faithfulness of V_{a,b} over R", cmd_inner);
    inst(s);
    params(s);
    s->add_flag("--bruteforce", cfg.bruteforce, "Enumerate all subgroups of Z_n^m");

    s = add("invariants", "Invariants of A_{a,b} degree by degree", cmd_invariants);
    inst(s);
    params(s);
    s->add_option("--degree", cfg.degree, "Degree bound (default 2n)");
    s->add_option("--subalgebra", cfg.subalgebra, "full | cyclic | base");

    s = add("module-algebra-check", "A_{a,b} is an H_{n,m}-module algebra", cmd_module_algebra);
    inst(s);
    params(s);
    s->add_option("--degree", cfg.degree, "Degree bound (default 2n)");
    s->add_option("--samples", cfg.samples, "Sampled basis elements besides the generators");
    s->add_option("--seed", cfg.seed, "Seed");
    s->add_flag("--drop-twist", cfg.drop_twist, "Negative control: Δ(z_i) = z_i ⊗ z_i");

    s = add("export", "Structure constants (product, coproduct, counit, antipode)", cmd_export);
    inst(s);

    s = add("embed-check", "H_{n,m} inside H_{n,m+1}", cmd_embed);
    inst(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    for (const Entry& e : entries) {
        if (!e.app->parsed()) continue;
        Report rep(e.app->get_name(), cfg);
        const auto start = std::chrono::steady_clock::now();
        try {
            e.fn(cfg, rep);
        } catch (const UsageError& err) {
            std::cerr << "error: " << err.what() << "\n" << e.app->help();
            return kUsage;
        } catch (const SizeGuard& err) {
            std::cerr << "refused: " << err.what() << "\n";
            return kRefused;
        } catch (const std::invalid_argument& err) {
            std::cerr << "error: " << err.what() << "\n";
            return kUsage;
        } catch (const std::out_of_range& err) {
            std::cerr << "error: " << err.what() << "\n";
            return kUsage;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string text = rep.finish(cfg.n, secs).dump(2) + "\n";
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(cfg.out);
            if (!f) {
                std::cerr << "error: cannot write " << cfg.out << "\n";
                return kUsage;
            }
            f << text;
        }
        return rep.passed() ? kPass : kFail;
    }
    return kUsage;
}

}  // namespace kacpal::cli
