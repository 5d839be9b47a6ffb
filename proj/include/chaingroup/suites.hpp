#pragma once

// Verification bundles shared by the CLI "suite" command and the acceptance run.

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chaingroup/finite.hpp"
#include "chaingroup/graph_actions.hpp"
#include "chaingroup/homology.hpp"
#include "chaingroup/homomorphisms.hpp"
#include "chaingroup/periodic.hpp"

namespace chaingroup {

struct SuiteItem {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteItem> items;
    double seconds = 0;

    bool pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return !items.empty();
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& i : items) f += !i.pass;
        return f;
    }
};

namespace suites {

namespace detail {

class Recorder {
public:
    explicit Recorder(std::string name) : res_{std::move(name), {}, 0}, t0_(std::chrono::steady_clock::now()) {}

    void check(std::string label, bool ok, std::string detail = {}) {
        res_.items.push_back(SuiteItem{std::move(label), ok, std::move(detail)});
    }
    // Runs f; an exception counts as a failed item.
    void guarded(const std::string& label, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(label, false, std::string("exception: ") + e.what());
        }
    }
    SuiteResult finish() {
        res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        return std::move(res_);
    }

private:
    SuiteResult res_;
    std::chrono::steady_clock::time_point t0_;
};

inline BraidWord random_word(int n, int max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, max_len), idx(1, n - 1), sign(0, 1);
    BraidWord w{n, {}};
    int L = len(rng);
    for (int i = 0; i < L; ++i) w.letters.push_back(sign(rng) ? idx(rng) : -idx(rng));
    return w;
}

} // namespace detail

inline SuiteResult identities() {
    detail::Recorder rec("identities");
    for (int n = 3; n <= 8; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        rec.guarded(tag, [&] {
            BraidWord d = flip_delta(n), D = garside(n);
            bool shift = true;
            for (int i = 0; i <= n - 1; ++i)
                shift = shift && are_equal(d * generator(n, i) * inverse(d), generator(n, i + 1));
            rec.check(tag + " delta conjugation shifts tau_i to tau_{i+1} (tau_0 wrap included)", shift);
            BraidWord d2 = power(d, 2);
            rec.check(tag + " delta^2 tau_{n-1} delta^-2 = tau_1",
                      are_equal(d2 * generator(n, n - 1) * inverse(d2), generator(n, 1)));
            bool flip = true;
            for (int i = 1; i <= n - 1; ++i)
                flip = flip && are_equal(D * generator(n, i) * inverse(D), generator(n, n - i));
            rec.check(tag + " Delta tau_i Delta^-1 = tau_{n-i}", flip);
            rec.check(tag + " delta^n = Delta^2", are_equal(power(d, n), power(D, 2)));
            rec.check(tag + " Delta^2 central", is_central(power(D, 2)));
        });
    }
    return rec.finish();
}

inline SuiteResult cabling() {
    detail::Recorder rec("cabling");
    for (int k = 1; k <= 3; ++k) {
        const std::string tag = "k=" + std::to_string(k);
        rec.guarded(tag, [&] {
            BraidHom h = cabling_b3(k);
            rec.check(tag + " homomorphism B_3 -> B_" + std::to_string(3 * k), verify(h));
            BraidWord img = h(garside(3));
            rec.check(tag + " phi(Delta_3) = Delta_" + std::to_string(3 * k), are_equal(img, garside(3 * k)),
                      "lambda=" + std::to_string(exponent(img)));
        });
    }
    return rec.finish();
}

inline SuiteResult endomorphisms(std::uint64_t seed = 6) {
    detail::Recorder rec("endomorphisms");
    std::mt19937_64 rng(seed);
    const int n = 6;
    std::uniform_int_distribution<int> sign(0, 1), kk(-1, 1);
    for (int t = 0; t < 20; ++t) {
        BraidWord g = detail::random_word(n, 10, rng);
        int eps = sign(rng) ? 1 : -1;
        int k = kk(rng);
        const std::string tag = "case " + std::to_string(t + 1) + " gamma=[" + letters_string(g) +
                                "] eps=" + std::to_string(eps) + " k=" + std::to_string(k);
        rec.guarded(tag, [&] {
            BraidHom h = theorem4_endo(n, g, eps, k);
            bool exps = true;
            for (const auto& w : h.images) exps = exps && exponent(w) == eps + k * n * (n - 1);
            rec.check(tag, verify(h) && !cyclic_test(h) && exps);
        });
    }
    return rec.finish();
}

struct CentralizerRow {
    long long r, p, d;
    long long expected;
};

inline std::vector<CentralizerRow> centralizer_rows() {
    return {{3, 3, 3, 9}, {3, 4, 4, 16}, {3, 5, 5, 25}, {4, 3, 3, 27}, {4, 4, 2, 32}, {4, 4, 4, 64}, {4, 5, 5, 125}};
}

// A random parameter tuple satisfying the divisibility conditions.
inline LnParams random_ln_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rr(3, 5), mm(2, 6), qq(1, 3);
    for (;;) {
        LnParams p;
        p.r = rr(rng);
        p.m = mm(rng);
        long long q = qq(rng);
        p.M = q * p.m;
        std::vector<long long> divs;
        for (long long d = 1; d <= p.m; ++d)
            if (p.m % d == 0) divs.push_back(d);
        p.d = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
        std::vector<long long> ss;
        for (long long j = 0; j <= 3 * q; ++j)
            if (validate_params(LnParams{p.r, p.M, p.m, p.d, j * p.m})) ss.push_back(j * p.m);
        if (ss.empty()) continue;
        p.s = ss[std::uniform_int_distribution<std::size_t>(0, ss.size() - 1)(rng)];
        return p;
    }
}

inline SuiteResult table1(std::uint64_t seed = 5) {
    detail::Recorder rec("table1");
    for (const auto& row : centralizer_rows()) {
        const std::string tag = "r=" + std::to_string(row.r) + " (p,d)=(" + std::to_string(row.p) + "," +
                                std::to_string(row.d) + ")";
        rec.guarded(tag, [&] {
            auto card = centralizer_order(row.r, row.p, row.d);
            BigInt direct = BigInt(row.d) * boost::multiprecision::pow(BigInt(row.p), static_cast<unsigned>(row.r - 2));
            rec.check(tag + " = " + std::to_string(row.expected),
                      card && *card == row.expected && direct == row.expected,
                      card ? "snf=" + card->str() : "no entry");
        });
    }
    rec.guarded("(r,p,d)=(3,4,2) has no entry", [&] { rec.check("(r,p,d)=(3,4,2) has no entry", !centralizer_order(3, 4, 2)); });
    std::mt19937_64 rng(seed);
    int good = 0;
    std::string first_bad;
    for (int t = 0; t < 50; ++t) {
        LnParams p = random_ln_params(rng);
        auto inv = ln_group(p);
        auto card = inv.cardinality();
        if (card && *card == ln_formula_cardinality(p))
            ++good;
        else if (first_bad.empty())
            first_bad = "r=" + std::to_string(p.r) + " M=" + std::to_string(p.M) + " m=" + std::to_string(p.m) +
                        " d=" + std::to_string(p.d) + " s=" + std::to_string(p.s);
    }
    rec.check("50 random tuples: SNF order = q d m^(r-1)", good == 50, first_bad);
    return rec.finish();
}

inline SuiteResult perm() {
    detail::Recorder rec("perm");
    auto all_ok = [](const std::vector<PermRep>& reps) {
        for (const auto& r : reps)
            if (!satisfies_braid_relations(r.images)) return false;
        return true;
    };
    for (auto [n, kmax] : {std::pair{5, 4}, std::pair{6, 5}})
        for (int k = 1; k <= kmax; ++k) {
            const std::string tag = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            rec.guarded(tag, [&] {
                auto reps = enum_perm_reps(n, k);
                bool cyc = std::all_of(reps.begin(), reps.end(), [](const PermRep& r) { return r.cyclic; });
                rec.check(tag + " only cyclic actions", cyc && all_ok(reps), std::to_string(reps.size()) + " tuples");
            });
        }
    rec.guarded("(n,k)=(4,3)", [&] {
        auto reps = enum_perm_reps(4, 3);
        bool same = std::all_of(reps.begin(), reps.end(), [](const PermRep& r) { return r.images[0] == r.images[2]; });
        rec.check("(n,k)=(4,3) first image = third image", same && all_ok(reps), std::to_string(reps.size()) + " tuples");
    });
    rec.guarded("(n,k)=(6,6)", [&] {
        auto reps = enum_perm_reps(6, 6);
        std::vector<Perm> standard;
        for (int i = 0; i < 5; ++i) {
            Perm p = perm_identity(6);
            std::swap(p[i], p[i + 1]);
            standard.push_back(p);
        }
        bool has_standard = std::any_of(reps.begin(), reps.end(), [&](const PermRep& r) { return r.images == standard; });
        bool noncyclic = std::any_of(reps.begin(), reps.end(), [](const PermRep& r) { return !r.cyclic; });
        rec.check("(n,k)=(6,6) contains a noncyclic action", noncyclic && has_standard && all_ok(reps),
                  std::to_string(reps.size()) + " tuples");
    });
    return rec.finish();
}

// Reference graphs built by hand rather than generated: a rose, a hub with a
// swapped pair, a 3+1 star and the genus-six configuration.
inline ActionGraph rose_graph(int m) {
    ActionGraph g;
    g.vertices = 1;
    g.vperm = {0};
    for (int i = 0; i < m; ++i) {
        g.edges.emplace_back(0, 0);
        g.eperm.push_back((i + 1) % m);
    }
    g.labels.assign(1, std::nullopt);
    return g;
}

inline ActionGraph hub_and_pair_graph() {
    // Hub 2 fixed; vertices 0 and 1 swapped. Edges listed in reverse cycle order.
    ActionGraph g;
    g.vertices = 3;
    g.vperm = {1, 0, 2};
    const int m = 12;
    for (int j = 0; j < m; ++j) {
        int i = m - 1 - j; // edge slot j holds a_i
        g.edges.emplace_back(i % 2, 2);
        g.eperm.push_back(j == 0 ? m - 1 : j - 1);
    }
    g.labels.assign(3, std::nullopt);
    return g;
}

inline ActionGraph three_and_one_graph() {
    // Fixed vertex 0, rotating triangle of vertices 1, 2, 3.
    ActionGraph g;
    g.vertices = 4;
    g.vperm = {0, 2, 3, 1};
    for (int i = 0; i < 12; ++i) {
        g.edges.emplace_back(0, 1 + i % 3);
        g.eperm.push_back((i + 1) % 12);
    }
    g.labels.assign(4, std::nullopt);
    return g;
}

inline ActionGraph genus_six_graph() {
    // Seven genus-0 pieces without natural boundary: a 3-cycle (0,1,2) and a 4-cycle (3,4,5,6).
    ActionGraph g;
    g.vertices = 7;
    g.vperm = {1, 2, 0, 4, 5, 6, 3};
    for (int i = 0; i < 12; ++i) {
        g.edges.emplace_back(i % 3, 3 + i % 4);
        g.eperm.push_back((i + 1) % 12);
    }
    g.labels.assign(7, VertexLabel{0, 0});
    return g;
}

inline SuiteResult graphs() {
    detail::Recorder rec("graphs");
    for (int m = 1; m <= brute_force_max_edges; ++m) {
        const std::string tag = "m=" + std::to_string(m);
        rec.guarded(tag, [&] {
            auto brute = brute_enumerate(m);
            std::set<std::vector<int>> from_brute, from_classes;
            bool classified = true;
            for (const auto& g : brute) {
                from_brute.insert(canonical_form(g));
                GraphClass c = classify(g);
                classified = classified && isomorphic(generate(c, m), g);
            }
            for (const auto& c : all_classes(m)) {
                ActionGraph g = generate(c, m);
                from_classes.insert(canonical_form(g));
                classified = classified && classify(g) == c;
            }
            rec.check(tag + " brute force = generated classes", from_brute == from_classes && classified,
                      std::to_string(brute.size()) + " brute, " + std::to_string(from_classes.size()) + " templates");
        });
    }
    rec.guarded("rose", [&] {
        rec.check("12-loop rose is TypeA k=1 d=12", classify(rose_graph(12)) == GraphClass{TypeA{1, 1, 12}});
    });
    rec.guarded("hub", [&] {
        rec.check("hub with swapped pair is TypeB k=1 l=2 d=6",
                  classify(hub_and_pair_graph()) == GraphClass{TypeB{1, 2, 6}});
    });
    rec.guarded("3+1", [&] {
        rec.check("3+1 bipartite is TypeB k=3 l=1 d=4",
                  classify(three_and_one_graph()) == GraphClass{TypeB{3, 1, 4}});
    });
    rec.guarded("genus six", [&] {
        auto a = genus_audit(genus_six_graph(), 6, 0);
        rec.check("genus-six configuration feasible at (g,b)=(6,0)", a.feasible && a.equality_case,
                  "c=" + std::to_string(a.c) + " h=" + std::to_string(a.h) + " euler=" + std::to_string(a.euler_sum));
        bool rejected = true;
        for (int b = 1; b <= 4; ++b) rejected = rejected && !genus_audit(genus_six_graph(), 6, b).feasible;
        rec.check("genus-six configuration rejected for b>=1", rejected);
        rec.check("3-loop rose feasible in genus 3", genus_audit(rose_graph(3), 3, 0).feasible);
    });
    return rec.finish();
}

inline Matrix random_symplectic(const SkewLattice& L, std::mt19937_64& rng, int steps = 6) {
    std::uniform_int_distribution<int> coef(-1, 1), sign(0, 1);
    Matrix s = Matrix::identity(L.rank);
    for (int t = 0; t < steps; ++t) {
        CurveClass u(L.rank);
        for (auto& x : u) x = coef(rng);
        if (is_zero(u)) continue;
        u = primitive_normalized(u);
        s = transvection_matrix(L, u, sign(rng) ? 1 : -1) * s;
    }
    return s;
}

struct TransvectedInstance {
    TransvectionTriple triple; // chain normalized
    std::vector<Matrix> rep;
};

// Random chain image, random sign and a random centralizing direction.
inline TransvectedInstance random_transvected(const SkewLattice& L, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> sign(0, 1), pw(0, 2), coef(-2, 2);
    Matrix s = random_symplectic(L, rng);
    std::vector<CurveClass> chain;
    for (const auto& c : build_chain(L, k)) chain.push_back(primitive_normalized(s * c));
    int eps = sign(rng) ? 1 : -1;
    Matrix v = Matrix::identity(L.rank);
    if (sign(rng)) v = -v;
    v = v * mat_power(chain_product_square(L, chain), pw(rng));
    Matrix orth(chain.size(), L.rank);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        IntVector w = L.pairing * chain[i];
        for (std::size_t j = 0; j < L.rank; ++j) orth(i, j) = w[j];
    }
    auto perp = nullspace(orth);
    if (!perp.empty()) {
        CurveClass u(L.rank);
        for (const auto& b : perp) {
            int c = coef(rng);
            for (std::size_t j = 0; j < L.rank; ++j) u[j] += c * b[j];
        }
        if (!is_zero(u)) v = v * transvection_matrix(L, primitive_normalized(u), sign(rng) ? 1 : -1);
    }
    auto rep = apply_transvection(L, monodromy_rep(L, chain, eps), v);
    return {TransvectionTriple{chain, eps, v}, rep};
}

inline SuiteResult homology(std::uint64_t seed = 7, int trials = 100) {
    detail::Recorder rec("homology");
    for (int g = 2; g <= 4; ++g) {
        SkewLattice L = standard_lattice(g);
        for (int k = 2; k <= 2 * g + 1; ++k) {
            const std::string tag = "g=" + std::to_string(g) + " k=" + std::to_string(k);
            rec.guarded(tag, [&] {
                auto chain = build_chain(L, k);
                bool rel = true, sympl = true;
                for (int eps : {1, -1}) {
                    auto rep = monodromy_rep(L, chain, eps);
                    rel = rel && satisfies_braid_relations(rep);
                    for (const auto& m : rep) sympl = sympl && preserves_pairing(L, m);
                }
                rec.check(tag + " braid/commutation relations", rel);
                rec.check(tag + " transvections preserve the pairing", sympl);
                Matrix sq = chain_product_square(L, chain);
                bool shape = true;
                for (const auto& c : chain) {
                    IntVector img = sq * c;
                    IntVector want = c;
                    if (k % 2 == 0)
                        for (auto& x : want) x = -x;
                    shape = shape && img == want;
                }
                rec.check(tag + (k % 2 == 0 ? " squared chain product is -Id on the chain"
                                            : " squared chain product fixes the chain"),
                          shape);
            });
        }
    }
    std::mt19937_64 rng(seed);
    for (int g = 3; g <= 4; ++g) {
        SkewLattice L = standard_lattice(g);
        std::uniform_int_distribution<int> kd(5, 2 * g + 1);
        int ok = 0;
        std::string bad;
        for (int t = 0; t < trials; ++t) {
            auto inst = random_transvected(L, kd(rng), rng);
            auto res = extract_triple(L, inst.rep);
            const auto* tr = std::get_if<TransvectionTriple>(&res);
            if (tr && *tr == inst.triple)
                ++ok;
            else if (bad.empty())
                bad = "trial " + std::to_string(t) +
                      (std::holds_alternative<NotRecognized>(res) ? ": " + std::get<NotRecognized>(res).reason : "");
        }
        rec.check("g=" + std::to_string(g) + " extract round trip " + std::to_string(trials) + " random cases",
                  ok == trials, bad);
    }
    return rec.finish();
}

inline SuiteResult rh() {
    detail::Recorder rec("rh");
    rec.guarded("degree-8 datum", [&] {
        bool none = true;
        for (long long chiq : {1, -1, -3}) none = none && !rh_check(RamificationData{-4, 8, {4}, chiq});
        rec.check("chi=-4 m=8 o=4 infeasible for chi_q in {1,-1,-3}", none);
        // Other branch lists do solve the equation; only the single o=4 point is excluded.
        auto sols = rh_enumerate(-4, 8, {1, -1, -3});
        bool single = std::none_of(sols.begin(), sols.end(), [](const RamificationData& d) {
            return d.branch == std::vector<long long>{4};
        });
        std::vector<std::vector<long long>> lists;
        for (const auto& d : sols) lists.push_back(d.branch);
        rec.check("enumeration for chi=-4 m=8 chi_q in {1,-1,-3} omits the single o=4 point",
                  single && lists == std::vector<std::vector<long long>>{{2, 2}, {4, 4, 4}});
    });
    rec.guarded("order bounds", [&] {
        bool ok = true;
        for (long long g = 2; g <= 20; ++g) {
            auto b = order_bounds(g, 0);
            ok = ok && b.finite_subgroup_max == BigInt(84 * (g - 1)) && b.cyclic_max == BigInt(4 * g + 2);
        }
        rec.check("84(g-1) and 4g+2 for g in [2,20]", ok);
        const long long expect[] = {6, 6, 6, 3, 2, 1, 1};
        bool g1 = true;
        for (long long b = 0; b <= 6; ++b) g1 = g1 && order_bounds(1, b).genus1_max == BigInt(expect[b]);
        rec.check("genus-one table, b=4 gives 2", g1);
    });
    rec.guarded("inequalities", [&] {
        bool i7 = true, i8 = true;
        for (long long r = 3; r <= 10; ++r) {
            auto rep = section5_audit(r, 3, 3);
            i7 = i7 && !rep.inequalities[1].holds;
            i8 = i8 && !rep.inequalities[2].holds;
        }
        rec.check("3^r > 6+4r for r in [3,10]", i7);
        rec.check("2*4^(r-2) > 2+r for r in [3,10]", i8);
        bool gen = true;
        for (long long g = 0; g <= 30; ++g) gen = gen && !genus_exponential_holds(g);
        rec.check("g < 1+2^g for g in [0,30]", gen);
        bool kernel = true;
        for (const auto& row : centralizer_rows()) {
            auto rep = section5_audit(row.r, row.p, row.d);
            kernel = kernel && rep.centralizer_order == row.expected && rep.kernel_exceeds;
        }
        rec.check("tabulated rows: 3*d*p^(r-2) > 6(2r-2)", kernel);
    });
    return rec.finish();
}

inline const std::vector<std::pair<std::string, std::function<SuiteResult()>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<SuiteResult()>>> r = {
        {"identities", [] { return identities(); }}, {"cabling", [] { return cabling(); }},
        {"endomorphisms", [] { return endomorphisms(); }},     {"table1", [] { return table1(); }},
        {"perm", [] { return perm(); }},             {"graphs", [] { return graphs(); }},
        {"homology", [] { return homology(); }},     {"rh", [] { return rh(); }},
    };
    return r;
}

} // namespace suites
} // namespace chaingroup
