#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "chaingroup/finite.hpp"

using namespace chaingroup;

namespace {

BigInt det_bareiss(Matrix a) {
    const std::size_t n = a.rows();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// D_i = gcd of all i x i minors; invariant factors are D_i / D_{i-1}.
std::vector<BigInt> determinantal_factors(const Matrix& a) {
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (std::size_t i = 1; i <= std::min(a.rows(), a.cols()); ++i) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(a.rows(), i, 0, cur, rs);
        subsets(a.cols(), i, 0, cur, cs);
        BigInt g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Matrix m(i, i);
                for (std::size_t x = 0; x < i; ++x)
                    for (std::size_t y = 0; y < i; ++y) m(x, y) = a(r[x], c[y]);
                g = boost::multiprecision::gcd(g, det_bareiss(m));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// |(Z/M)^r / <rows mod M>| by closing the subgroup explicitly.
long long brute_quotient_order(const LnParams& p) {
    const long long M = p.M;
    long long total = 1;
    for (long long i = 0; i < p.r; ++i) total *= M;
    Matrix a = ln_relation_matrix(p);
    std::vector<std::vector<long long>> gens;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<long long> v(p.r);
        for (long long j = 0; j < p.r; ++j) v[j] = static_cast<long long>(((a(i, j) % M) + M) % M);
        gens.push_back(v);
    }
    std::set<std::vector<long long>> seen{std::vector<long long>(p.r, 0)};
    std::vector<std::vector<long long>> frontier{std::vector<long long>(p.r, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = x;
                for (long long j = 0; j < p.r; ++j) y[j] = (y[j] + g[j]) % M;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier.swap(next);
    }
    return total / static_cast<long long>(seen.size());
}

} // namespace

TEST(Ln, ValidateExamples) {
    EXPECT_TRUE(validate_params({3, 0, 0, 0, 0}));
    EXPECT_FALSE(validate_params({3, 4, 3, 3, 3})); // m does not divide M
    EXPECT_TRUE(validate_params({3, 4, 2, 2, 2}));
    EXPECT_FALSE(validate_params({3, 6, 3, 3, 6})); // M does not divide (r - s/d) m
    EXPECT_FALSE(validate_params({3, 4, 4, 3, 12})); // d does not divide m
    EXPECT_FALSE(validate_params({1, 2, 2, 2, 2}));
    EXPECT_THROW(ln_group({3, 6, 4, 2, 4}), Error);
}

TEST(Ln, FreeCaseIsFreeAbelian) {
    auto inv = ln_group({4, 0, 0, 0, 0});
    EXPECT_EQ(inv.free_rank, 4u);
    EXPECT_FALSE(inv.cardinality());
}

TEST(Ln, CardinalityMatchesBruteForceAndFormula) {
    int checked = 0;
    for (long long r = 2; r <= 4; ++r)
        for (long long M = 1; M <= 6; ++M)
            for (long long m = 1; m <= M; ++m)
                for (long long d = 1; d <= m; ++d)
                    for (long long s = 0; s <= 12; ++s) {
                        LnParams p{r, M, m, d, s};
                        if (!validate_params(p)) continue;
                        auto inv = ln_group(p);
                        ASSERT_TRUE(inv.cardinality());
                        EXPECT_EQ(*inv.cardinality(), brute_quotient_order(p)) << r << " " << M << " " << m << " " << d << " " << s;
                        EXPECT_EQ(*inv.cardinality(), ln_formula_cardinality(p));
                        ++checked;
                    }
    EXPECT_GT(checked, 100);
}

TEST(Ln, StructureRegroupsToExpectedFactors) {
    // Z/M x (Z/m)^{r-2} x Z/d has the same invariant factors.
    for (LnParams p : {LnParams{3, 3, 3, 3, 9}, LnParams{4, 4, 4, 2, 8}, LnParams{4, 12, 6, 3, 6}, LnParams{5, 8, 4, 4, 12}}) {
        ASSERT_TRUE(validate_params(p));
        Matrix diag(static_cast<std::size_t>(p.r), static_cast<std::size_t>(p.r));
        diag(0, 0) = p.M;
        for (long long i = 1; i + 1 < p.r; ++i) diag(i, i) = p.m;
        diag(p.r - 1, p.r - 1) = p.d;
        auto got = ln_group(p).factors, want = smith_normal_form(diag).factors;
        EXPECT_EQ(got, want);
    }
}

TEST(Ln, TableEntries) {
    EXPECT_EQ(*centralizer_order(3, 3, 3), 9);
    EXPECT_EQ(*centralizer_order(4, 4, 2), 32);
    EXPECT_FALSE(centralizer_order(3, 4, 2));
    EXPECT_EQ(*ln_group({3, 1, 1, 1, 3}).cardinality(), 1);
    EXPECT_EQ(smith_normal_form(Matrix::identity(3)).factors, (std::vector<BigInt>{1, 1, 1}));
}

TEST(Snf, SmallExamples) {
    auto a = smith_normal_form(Matrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    EXPECT_EQ(a.factors, (std::vector<BigInt>{2, 6, 12}));
    auto b = smith_normal_form(Matrix::from_rows({{2, 0}, {0, 3}}));
    EXPECT_EQ(b.factors, (std::vector<BigInt>{1, 6}));
    auto c = smith_normal_form(Matrix::from_rows({{0, 0, 0}}));
    EXPECT_TRUE(c.factors.empty());
    EXPECT_EQ(c.free_rank, 3u);
}

TEST(Snf, MatchesDeterminantalDivisors) {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> e(-6, 6), dim(1, 4);
    for (int t = 0; t < 150; ++t) {
        std::size_t R = dim(rng), C = dim(rng);
        Matrix a(R, C);
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < C; ++j) a(i, j) = e(rng);
        auto inv = smith_normal_form(a);
        auto want = determinantal_factors(a);
        EXPECT_EQ(inv.factors, want);
        EXPECT_EQ(inv.free_rank, C - rank(a));
        for (std::size_t i = 0; i + 1 < inv.factors.size(); ++i) EXPECT_EQ(inv.factors[i + 1] % inv.factors[i], 0);
    }
}

TEST(Snf, InvariantUnderUnimodularOperations) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> e(-5, 5), coin(0, 1);
    for (int t = 0; t < 40; ++t) {
        Matrix a(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = e(rng);
        auto base = smith_normal_form(a);
        Matrix b = a;
        for (int s = 0; s < 20; ++s) {
            int x = rng() % 3, y = rng() % 3;
            if (coin(rng) && x != y) {
                BigInt f = e(rng);
                for (std::size_t j = 0; j < 4; ++j) b(x, j) += f * b(y, j);
            } else {
                int u = rng() % 4, v = rng() % 4;
                if (u == v) continue;
                BigInt f = e(rng);
                for (std::size_t i = 0; i < 3; ++i) b(i, u) += f * b(i, v);
            }
        }
        auto other = smith_normal_form(b);
        EXPECT_EQ(other.factors, base.factors);
        EXPECT_EQ(other.free_rank, base.free_rank);
    }
}

TEST(Perm, BasicsAndParsing) {
    Perm p = parse_permutation("(1 2 3)", 4);
    EXPECT_EQ(p, (Perm{1, 2, 0, 3}));
    EXPECT_EQ(parse_permutation("1->2 2->3 3->1", 4), p);
    EXPECT_EQ(perm_to_string(p), "(1 2 3)");
    EXPECT_EQ(perm_to_string(perm_identity(3)), "()");
    EXPECT_EQ(perm_compose(p, perm_inverse(p)), perm_identity(4));
    EXPECT_THROW(parse_permutation("(1 5)", 4), Error);
    EXPECT_THROW(parse_permutation("(1 x)", 4), Error);
}

TEST(Perm, EnumerationMatchesBruteForce) {
    for (auto [n, k] : {std::pair{3, 3}, std::pair{4, 3}, std::pair{5, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
        std::vector<Perm> all;
        Perm p = perm_identity(k);
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::set<std::vector<Perm>> brute;
        std::vector<std::size_t> idx(n - 1, 0);
        while (true) {
            std::vector<Perm> t;
            for (auto i : idx) t.push_back(all[i]);
            if (satisfies_braid_relations(t)) brute.insert(t);
            std::size_t j = 0;
            while (j < idx.size() && ++idx[j] == all.size()) idx[j++] = 0;
            if (j == idx.size()) break;
        }
        auto reps = enum_perm_reps(n, k);
        std::set<std::vector<Perm>> got;
        for (const auto& r : reps) got.insert(r.images);
        EXPECT_EQ(got, brute) << n << "," << k;
        EXPECT_EQ(reps.size(), brute.size());
    }
}

TEST(Perm, ThreePointsFourStrands) {
    for (const auto& r : enum_perm_reps(4, 3)) EXPECT_EQ(r.images[0], r.images[2]);
}

TEST(Perm, DedupKeepsOnePerConjugacyClass) {
    auto full = enum_perm_reps(4, 4);
    auto reps = enum_perm_reps(4, 4, true);
    EXPECT_LT(reps.size(), full.size());
    std::vector<Perm> all;
    Perm p = perm_identity(4);
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    // Every full tuple is conjugate to exactly one representative.
    for (const auto& f : full) {
        int hits = 0;
        for (const auto& r : reps) {
            bool conj = false;
            for (const auto& g : all) {
                std::vector<Perm> c;
                for (const auto& x : f.images) c.push_back(perm_compose(g, perm_compose(x, perm_inverse(g))));
                if (c == r.images) conj = true;
            }
            hits += conj;
        }
        EXPECT_EQ(hits, 1);
    }
}

TEST(Perm, Limits) {
    EXPECT_THROW(enum_perm_reps(2, 3), Error);
    EXPECT_THROW(enum_perm_reps(4, 8), Error);
    EXPECT_THROW(enum_perm_reps(4, 5, false, 1000), Error);
}

TEST(Orbit, SubsetActionHasEllOne) {
    const int r = 4;
    for (int k = 1; k <= 3; ++k) {
        std::vector<std::vector<std::size_t>> subs;
        std::vector<std::size_t> cur;
        subsets(r, k, 0, cur, subs);
        std::vector<std::vector<int>> spec;
        for (const auto& s : subs) spec.emplace_back(s.begin(), s.end());
        std::vector<Perm> gens_pts{{1, 0, 2, 3}, {1, 2, 3, 0}}, gens_el;
        for (const auto& g : gens_pts) {
            Perm e(spec.size());
            for (std::size_t x = 0; x < spec.size(); ++x) {
                std::vector<int> moved;
                for (int pnt : spec[x]) moved.push_back(g[pnt]);
                std::sort(moved.begin(), moved.end());
                e[x] = static_cast<int>(std::find(spec.begin(), spec.end(), moved) - spec.begin());
            }
            gens_el.push_back(e);
        }
        auto out = orbit_spectrum_check({r, gens_el, gens_pts}, spec, 0);
        EXPECT_EQ(out.ell, 1);
        EXPECT_EQ(out.binomial, binomial(r, k));
        EXPECT_TRUE(out.verified);
    }
}

TEST(Orbit, DoubledActionHasEllTwo) {
    // Two copies of the points of a 3-set; a swap generator fixes the points.
    std::vector<std::vector<int>> spec{{0}, {1}, {2}, {0}, {1}, {2}};
    Perm cyc_el{1, 2, 0, 4, 5, 3}, swap_el{3, 4, 5, 0, 1, 2};
    FiniteAction act{3, {cyc_el, swap_el}, {{1, 2, 0}, {0, 1, 2}}};
    auto out = orbit_spectrum_check(act, spec, 0);
    EXPECT_EQ(out.orbit_size, 6u);
    EXPECT_EQ(out.ell, 2);
    EXPECT_TRUE(out.verified);
}

TEST(Orbit, Errors) {
    std::vector<std::vector<int>> spec{{0}, {1}, {2}};
    FiniteAction partial{3, {{1, 0, 2}}, {{1, 0, 2}}};
    EXPECT_THROW(orbit_spectrum_check(partial, spec, 0), Error); // orbit of size 2 over 3 points
    FiniteAction wrong{3, {{1, 2, 0}}, {{2, 0, 1}}};
    EXPECT_THROW(orbit_spectrum_check(wrong, spec, 0), Error);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Parsers, LnParamsAndMatrix) {
    auto p = parse_ln_params("3 3 3 3 9");
    EXPECT_EQ(p.r, 3);
    EXPECT_EQ(p.s, 9);
    EXPECT_THROW(parse_ln_params("3 3 3"), Error);
    EXPECT_THROW(parse_ln_params("3 3 3 3 9 1"), Error);
    auto m = parse_int_matrix("rows=2 cols=2\n2 0\n0 3\n");
    EXPECT_EQ(m, Matrix::from_rows({{2, 0}, {0, 3}}));
    EXPECT_THROW(parse_int_matrix("rows=2 cols=2\n1 2 3"), Error);
    EXPECT_THROW(parse_int_matrix("2 2\n1 2 3 4"), Error);
}
