#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "chaingroup/braid.hpp"
#include "chaingroup/homomorphisms.hpp"
#include "chaingroup/linalg.hpp"
#include "chaingroup/oracle.hpp"

using namespace chaingroup;

namespace {

// Unreduced Burau matrix at t = 2. Equal braids must have equal images.
using QMat = std::vector<std::vector<Rational>>;

QMat qid(int n) {
    QMat m(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qmul(const QMat& a, const QMat& b) {
    int n = static_cast<int>(a.size());
    QMat c(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

QMat burau(const BraidWord& w) {
    const Rational t = 2;
    QMat m = qid(w.n);
    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        QMat g = qid(w.n);
        if (x > 0) {
            g[i][i] = 1 - t;
            g[i][i + 1] = t;
            g[i + 1][i] = 1;
            g[i + 1][i + 1] = 0;
        } else {
            g[i][i] = 0;
            g[i][i + 1] = 1;
            g[i + 1][i] = 1 / t;
            g[i + 1][i + 1] = 1 - 1 / t;
        }
        m = qmul(m, g);
    }
    return m;
}

// Image in S_n.
std::vector<int> perm_image(const BraidWord& w) {
    std::vector<int> p(w.n);
    for (int i = 0; i < w.n; ++i) p[i] = i;
    for (int x : w.letters) std::swap(p[std::abs(x) - 1], p[std::abs(x)]);
    return p;
}

// Positive words are equal in B_n iff they are connected by braid and
// commutation moves, which preserve length. Plain BFS over that class.
std::set<std::vector<int>> positive_class(const std::vector<int>& w) {
    std::set<std::vector<int>> seen{w};
    std::queue<std::vector<int>> q;
    q.push(w);
    while (!q.empty()) {
        auto cur = q.front();
        q.pop();
        std::vector<std::vector<int>> next;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (std::abs(cur[i] - cur[i + 1]) >= 2) {
                auto v = cur;
                std::swap(v[i], v[i + 1]);
                next.push_back(v);
            }
        for (std::size_t i = 0; i + 2 < cur.size(); ++i)
            if (cur[i] == cur[i + 2] && std::abs(cur[i] - cur[i + 1]) == 1) {
                auto v = cur;
                v[i] = v[i + 2] = cur[i + 1];
                v[i + 1] = cur[i];
                next.push_back(v);
            }
        for (auto& v : next)
            if (seen.insert(v).second) q.push(v);
    }
    return seen;
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> idx(1, n - 1), sgn(0, 1);
    BraidWord w{n, {}};
    for (int i = 0; i < len; ++i) w.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
    return w;
}

} // namespace

TEST(Braid, GarsideExamples) {
    EXPECT_EQ(garside(3).letters, (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(garside(2).letters, (std::vector<int>{1}));
    EXPECT_EQ(garside(6).size(), 15u);
    EXPECT_THROW(garside(1), Error);
}

TEST(Braid, GarsideLengthAndExponent) {
    for (int n = 2; n <= 12; ++n) {
        EXPECT_EQ(garside(n).size(), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_EQ(exponent(garside(n)), n * (n - 1) / 2);
    }
}

TEST(Braid, FlipDelta) {
    EXPECT_EQ(flip_delta(3).letters, (std::vector<int>{1, 2}));
    EXPECT_EQ(flip_delta(2).letters, (std::vector<int>{1}));
    EXPECT_EQ(exponent(flip_delta(5)), 4);
}

TEST(Braid, GeneratorExamples) {
    EXPECT_EQ(generator(6, 7).letters, (std::vector<int>{1}));
    EXPECT_EQ(generator(6, 0).letters, (std::vector<int>{1, 2, 3, 4, 5, 5, -5, -4, -3, -2, -1}));
    EXPECT_EQ(generator(6, 3).letters, (std::vector<int>{3}));
    EXPECT_THROW(generator(2, 1), Error);
}

TEST(Braid, GeneratorPeriodic) {
    for (int n = 3; n <= 8; ++n)
        for (int k = -3 * n; k <= 3 * n; ++k) EXPECT_TRUE(are_equal(generator(n, k), generator(n, k + n)));
}

TEST(Braid, ExponentExamplesAndAdditivity) {
    EXPECT_EQ(exponent(garside(3)), 3);
    EXPECT_EQ(exponent(BraidWord{4, {3, -1}}), 0);
    EXPECT_EQ(exponent(identity_word(4)), 0);
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto u = random_word(rng, 5, t % 13), v = random_word(rng, 5, t % 7);
        EXPECT_EQ(exponent(u * v), exponent(u) + exponent(v));
    }
}

TEST(Braid, GammaExamples) {
    EXPECT_EQ(gamma(6, 1).letters, (std::vector<int>{1, 2, 1, 3, 2, 1}));
    EXPECT_EQ(exponent(gamma(6, 1)), 6);
    BraidWord g5 = gamma(6, 5);
    BraidWord want = generator(6, 5) * generator(6, 6) * generator(6, 5) * generator(6, 7) * generator(6, 6) *
                     generator(6, 5);
    EXPECT_EQ(g5, want);
    EXPECT_THROW(gamma(6, 2), Error);
    EXPECT_THROW(gamma(5, 1), Error);
    EXPECT_THROW(gamma(6, 7), Error);
}

TEST(Braid, FreeReduce) {
    EXPECT_TRUE(free_reduce(BraidWord{3, {1, -1}}).empty());
    EXPECT_TRUE(free_reduce(BraidWord{3, {1, 2, -2, -1}}).empty());
    EXPECT_EQ(free_reduce(BraidWord{3, {1, 2, 1}}).letters, (std::vector<int>{1, 2, 1}));
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto w = random_word(rng, 4, 12);
        EXPECT_TRUE(are_equal(w, free_reduce(w)));
    }
}

TEST(Braid, InverseAndConcat) {
    BraidWord w{4, {1, -3, 2}};
    EXPECT_EQ(inverse(w).letters, (std::vector<int>{-2, 3, -1}));
    EXPECT_THROW(w * garside(3), Error);
    EXPECT_TRUE(is_identity(w * inverse(w)));
    EXPECT_EQ(power(w, -2), inverse(w) * inverse(w));
}

TEST(Braid, ParseWrapsIndices) {
    EXPECT_EQ(parse_braid_word("n=6 7 -1"), (BraidWord{6, {1, -1}}));
    EXPECT_EQ(parse_braid_word(6, "0"), generator(6, 0));
    EXPECT_EQ(parse_braid_word(6, "-0"), inverse(generator(6, 0)));
    EXPECT_THROW(parse_braid_word("6 1 2"), Error);
    EXPECT_THROW(parse_braid_word(4, "1 x"), Error);
    EXPECT_EQ(to_string(BraidWord{3, {1, -2}}), "n=3 1 -2");
}

TEST(Oracle, Examples) {
    EXPECT_TRUE(are_equal(BraidWord{3, {1, 2, 1}}, BraidWord{3, {2, 1, 2}}));
    EXPECT_TRUE(are_equal(BraidWord{4, {1, 3}}, BraidWord{4, {3, 1}}));
    EXPECT_FALSE(are_equal(BraidWord{3, {1, 2}}, BraidWord{3, {2, 1}}));
    EXPECT_FALSE(is_identity(BraidWord{3, {1, 1}}));
    EXPECT_TRUE(is_central(power(garside(4), 2)));
    EXPECT_FALSE(is_central(garside(4)));
}

TEST(Oracle, ActionFixesProductOfGenerators) {
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto w = random_word(rng, 5, 10);
        auto a = artin_action(w);
        FreeWord prod = free_word({1, 2, 3, 4, 5});
        EXPECT_EQ(apply(a, prod), prod);
    }
}

TEST(Oracle, ActionComposesLeftToRight) {
    std::mt19937 rng(8);
    for (int t = 0; t < 50; ++t) {
        auto u = random_word(rng, 4, 6), v = random_word(rng, 4, 6);
        EXPECT_EQ(artin_action(u * v), then(artin_action(u), artin_action(v)));
    }
}

// Positive words of length <= 5 in B_4: the oracle agrees with the rewriting class.
TEST(Oracle, AgreesWithPositiveRewriting) {
    std::vector<std::vector<int>> words;
    for (int len = 1; len <= 5; ++len) {
        std::vector<int> w(len, 1);
        while (true) {
            words.push_back(w);
            int i = len - 1;
            while (i >= 0 && w[i] == 3) w[i--] = 1;
            if (i < 0) break;
            ++w[i];
        }
    }
    std::map<std::vector<int>, int> klass;
    int next = 0;
    for (const auto& w : words) {
        if (klass.count(w)) continue;
        for (const auto& v : positive_class(w)) klass[v] = next;
        ++next;
    }
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    int equal_seen = 0;
    for (int t = 0; t < 3000; ++t) {
        const auto& u = words[pick(rng)];
        // Bias towards same-length pairs so equal pairs actually occur.
        auto v = *std::next(positive_class(u).begin(), rng() % positive_class(u).size());
        if (t % 2) v = words[pick(rng)];
        bool oracle = are_equal(BraidWord{4, u}, BraidWord{4, v});
        EXPECT_EQ(oracle, klass.at(u) == klass.at(v));
        equal_seen += oracle;
    }
    EXPECT_GT(equal_seen, 1000);
}

TEST(Oracle, EqualityImpliesBurauAndPermutation) {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        auto w = random_word(rng, 5, 8);
        // Insert a random relator so the two words are equal.
        BraidWord rel = t % 2 ? BraidWord{5, {2, 3, 2, -3, -2, -3}} : BraidWord{5, {1, 4, -1, -4}};
        BraidWord v = w * rel;
        ASSERT_TRUE(are_equal(w, v));
        EXPECT_EQ(burau(w), burau(v));
        EXPECT_EQ(perm_image(w), perm_image(v));
    }
    // And different Burau matrices mean different braids.
    for (int t = 0; t < 100; ++t) {
        auto u = random_word(rng, 4, 6), v = random_word(rng, 4, 6);
        if (burau(u) != burau(v)) EXPECT_FALSE(are_equal(u, v));
    }
}

TEST(Oracle, ConjugationIdentities) {
    for (int n = 3; n <= 8; ++n) {
        BraidWord d = flip_delta(n), D = garside(n);
        for (int i = 0; i <= n - 1; ++i)
            EXPECT_TRUE(are_equal(d * generator(n, i) * inverse(d), generator(n, i + 1)));
        for (int i = 1; i <= n - 1; ++i)
            EXPECT_TRUE(are_equal(D * BraidWord{n, {i}} * inverse(D), BraidWord{n, {n - i}}));
        EXPECT_TRUE(are_equal(power(d, n), power(D, 2)));
    }
}

TEST(Hom, VerifyAndCyclic) {
    EXPECT_TRUE(verify(inclusion(3, 5)));
    EXPECT_FALSE(cyclic_test(inclusion(3, 5)));
    BraidHom c = make_hom(4, 4, {BraidWord{4, {1}}, BraidWord{4, {1}}, BraidWord{4, {1}}});
    EXPECT_TRUE(verify(c));
    EXPECT_TRUE(cyclic_test(c));
    BraidHom bad = make_hom(3, 3, {BraidWord{3, {1}}, BraidWord{3, {1, 1}}});
    EXPECT_FALSE(verify(bad));
}

TEST(Hom, ComposeMatchesPointwise) {
    BraidHom h = theorem4_endo(6, gamma(6, 1), -1, 1);
    BraidHom c = compose(inclusion(6, 6), h);
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(are_equal(c.images[i], h.images[i]));
    BraidHom hh = compose(h, h);
    EXPECT_TRUE(verify(hh));
    std::mt19937 rng(2);
    for (int t = 0; t < 10; ++t) {
        auto w = random_word(rng, 6, 5);
        EXPECT_TRUE(are_equal(hh(w), h(h(w))));
    }
}

TEST(Hom, TwistedConjugationFamily) {
    BraidHom h = theorem4_endo(6, identity_word(6), 1, 0);
    for (int i = 1; i <= 5; ++i) EXPECT_TRUE(are_equal(h.images[i - 1], BraidWord{6, {i}}));
    EXPECT_THROW(theorem4_endo(5, identity_word(5), 1, 0), Error);
    EXPECT_THROW(theorem4_endo(6, identity_word(6), 2, 0), Error);
}

TEST(Hom, CablingSmall) {
    for (int k = 1; k <= 2; ++k) {
        BraidHom h = cabling_b3(k);
        EXPECT_TRUE(verify(h));
        EXPECT_TRUE(are_equal(h(garside(3)), garside(3 * k)));
    }
}

TEST(Hom, ParseRoundTrip) {
    BraidHom h = theorem4_endo(6, BraidWord{6, {2, -4}}, -1, -1);
    BraidHom back = parse_hom(to_string(h));
    EXPECT_EQ(back.n, h.n);
    EXPECT_EQ(back.m, h.m);
    EXPECT_EQ(back.images, h.images);
    EXPECT_THROW(parse_hom("n=3\n1 : 1\n"), Error);
}
