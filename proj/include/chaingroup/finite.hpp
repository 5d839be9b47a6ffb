#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chaingroup/linalg.hpp"

namespace chaingroup {

// ---------------------------------------------------------------------------
// Abelian quotients L(M, m, d, s) on r odd generators.

struct LnParams {
    long long r = 3;
    long long M = 0, m = 0, d = 0, s = 0;
};

struct AbelianInvariants {
    std::vector<BigInt> factors; // each >= 1, each dividing the next
    std::size_t free_rank = 0;

    bool finite() const { return free_rank == 0; }
    std::optional<BigInt> cardinality() const {
        if (!finite()) return std::nullopt;
        BigInt c = 1;
        for (const auto& f : factors) c *= f;
        return c;
    }
};

namespace detail {
inline bool divides(const BigInt& a, const BigInt& b) { return a == 0 ? b == 0 : b % a == 0; }
} // namespace detail

// r >= 2 is accepted so that the subgroup on the remaining r-1 generators can be
// built with the same routine.
inline bool validate_params(const LnParams& p) {
    using detail::divides;
    if (p.r < 2 || p.M < 0 || p.m < 0 || p.d < 0 || p.s < 0) return false;
    if (p.M != 0 && (p.m == 0 || p.d == 0 || !divides(p.m, p.M))) return false;
    if (!divides(p.d, p.m) || !divides(p.m, p.s)) return false;
    BigInt lhs = p.d == 0 ? BigInt(0) : (BigInt(p.r) - BigInt(p.s / p.d)) * p.m;
    if (p.d != 0 && p.s % p.d != 0) return false;
    return divides(p.M, lhs);
}

// Invariant factors of Z^cols modulo the row lattice of a.
inline AbelianInvariants smith_normal_form(Matrix a) {
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t t = 0;
    for (; t < std::min(R, C); ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t,t).
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        for (;;) {
            for (std::size_t j = 0; j < C; ++j) std::swap(a(t, j), a(pi, j));
            for (std::size_t i = 0; i < R; ++i) std::swap(a(i, t), a(i, pj));
            bool clean = true;
            const BigInt piv = a(t, t);
            for (std::size_t i = t + 1; i < R; ++i) {
                BigInt q = a(i, t) / piv;
                if (q != 0)
                    for (std::size_t j = t; j < C; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                BigInt q = a(t, j) / piv;
                if (q != 0)
                    for (std::size_t i = t; i < R; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (clean) {
                // The pivot must divide the whole trailing block.
                std::optional<std::size_t> bad;
                for (std::size_t i = t + 1; i < R && !bad; ++i)
                    for (std::size_t j = t + 1; j < C; ++j)
                        if (a(i, j) % piv != 0) { bad = i; break; }
                if (!bad) break;
                for (std::size_t j = t; j < C; ++j) a(t, j) += a(*bad, j);
                pi = t;
                pj = t;
                continue;
            }
            // Re-select the smallest nonzero entry in row/column t.
            pi = t;
            pj = t;
            for (std::size_t i = t; i < R; ++i)
                if (a(i, t) != 0 && abs(a(i, t)) < abs(a(pi, pj))) { pi = i; pj = t; }
            for (std::size_t j = t; j < C; ++j)
                if (a(t, j) != 0 && abs(a(t, j)) < abs(a(pi, pj))) { pi = t; pj = j; }
        }
    }
    AbelianInvariants inv;
    for (std::size_t i = 0; i < t; ++i) inv.factors.push_back(abs(a(i, i)));
    inv.free_rank = C - t;
    return inv;
}

inline Matrix ln_relation_matrix(const LnParams& p) {
    const std::size_t r = static_cast<std::size_t>(p.r);
    Matrix a(2 * r, r);
    std::size_t row = 0;
    for (std::size_t i = 0; i < r; ++i) a(row++, i) = p.M;
    for (std::size_t i = 1; i < r; ++i) {
        a(row, i) = p.m;
        a(row++, 0) = -p.m;
    }
    for (std::size_t i = 0; i < r; ++i) a(row, i) = p.d;
    a(row, 0) -= p.s;
    return a;
}

inline AbelianInvariants ln_group(const LnParams& p) {
    if (!validate_params(p)) throw Error("invalid-params", "divisibility conditions fail");
    return smith_normal_form(ln_relation_matrix(p));
}

// q d m^{r-1} with q = M/m.
inline BigInt ln_formula_cardinality(const LnParams& p) {
    return BigInt(p.M / p.m) * p.d * boost::multiprecision::pow(BigInt(p.m), static_cast<unsigned>(p.r - 1));
}

// Order of the centralizer subgroup in the tabulated case M = m = p: the
// quotient on the r-1 generators other than the first. Empty when p does not
// divide r*d (then s = r*d is not a multiple of p).
inline std::optional<BigInt> centralizer_order(long long r, long long p, long long d) {
    if (r < 3 || p < 1 || d < 1) throw Error("invalid-params", "need r >= 3, p >= 1, d >= 1");
    if ((r * d) % p != 0) return std::nullopt;
    return *ln_group(LnParams{r - 1, p, p, d, p}).cardinality();
}

// ---------------------------------------------------------------------------
// Permutations (0-based arrays, p[x] is the image of x).

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& a, const Perm& b) { // x -> a(b(x))
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
}

inline Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<int>(x);
    return c;
}

inline Perm perm_identity(std::size_t k) {
    Perm p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<int>(i);
    return p;
}

inline bool is_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

// 1-based cycle notation; the identity prints as "()".
inline std::string perm_to_string(const Perm& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x] || p[x] == static_cast<int>(x)) continue;
        s += "(";
        std::size_t y = x;
        bool first = true;
        while (!seen[y]) {
            seen[y] = true;
            s += (first ? "" : " ") + std::to_string(y + 1);
            first = false;
            y = p[y];
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

// "(1 2)(3 4)" or "1->2 2->1"; unspecified points are fixed.
inline Perm parse_permutation(const std::string& text, std::size_t k, bool one_based = true) {
    Perm p = perm_identity(k);
    const int base = one_based ? 1 : 0;
    auto point = [&](const std::string& tok) {
        int v;
        try {
            std::size_t pos = 0;
            v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error("parse-error", "bad point '" + tok + "'");
        }
        v -= base;
        if (v < 0 || v >= static_cast<int>(k)) throw Error("parse-error", "point out of range '" + tok + "'");
        return v;
    };
    if (text.find("->") != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            auto arrow = tok.find("->");
            if (arrow == std::string::npos) throw Error("parse-error", "expected a->b, got '" + tok + "'");
            p[point(tok.substr(0, arrow))] = point(tok.substr(arrow + 2));
        }
    } else {
        std::string cleaned;
        for (char ch : text) cleaned += (ch == ',') ? ' ' : ch;
        std::size_t pos = 0;
        while ((pos = cleaned.find('(', pos)) != std::string::npos) {
            auto close = cleaned.find(')', pos);
            if (close == std::string::npos) throw Error("parse-error", "unbalanced parenthesis");
            std::istringstream in(cleaned.substr(pos + 1, close - pos - 1));
            std::vector<int> cyc;
            std::string tok;
            while (in >> tok) cyc.push_back(point(tok));
            for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
            pos = close + 1;
        }
        if (cleaned.find_first_not_of(" \t\r\n()0123456789") != std::string::npos)
            throw Error("parse-error", "unexpected characters in permutation");
    }
    if (!is_perm(p)) throw Error("parse-error", "not a permutation");
    return p;
}

struct PermRep {
    int k = 0;
    std::vector<Perm> images; // images[i-1] is the image of tau_i
    bool cyclic = false;
    friend bool operator==(const PermRep& a, const PermRep& b) { return a.k == b.k && a.images == b.images; }
};

inline bool satisfies_braid_relations(const std::vector<Perm>& imgs) {
    for (std::size_t i = 0; i < imgs.size(); ++i)
        for (std::size_t j = i + 1; j < imgs.size(); ++j) {
            const Perm& a = imgs[i];
            const Perm& b = imgs[j];
            if (j == i + 1) {
                if (perm_compose(a, perm_compose(b, a)) != perm_compose(b, perm_compose(a, b))) return false;
            } else if (perm_compose(a, b) != perm_compose(b, a)) {
                return false;
            }
        }
    return true;
}

namespace detail {

inline std::vector<PermRep> finalize_reps(std::vector<std::vector<Perm>> raw, int k) {
    std::vector<PermRep> out;
    out.reserve(raw.size());
    for (auto& imgs : raw) {
        bool cyc = std::all_of(imgs.begin(), imgs.end(), [&](const Perm& p) { return p == imgs.front(); });
        out.push_back(PermRep{k, std::move(imgs), cyc});
    }
    return out;
}

inline std::vector<Perm> least_conjugate(const std::vector<Perm>& imgs, const std::vector<Perm>& all) {
    std::vector<Perm> best = imgs;
    for (const auto& g : all) {
        Perm ginv = perm_inverse(g);
        std::vector<Perm> c;
        c.reserve(imgs.size());
        for (const auto& p : imgs) c.push_back(perm_compose(g, perm_compose(p, ginv)));
        if (c < best) best = std::move(c);
    }
    return best;
}

} // namespace detail

constexpr std::uint64_t default_search_budget = 200'000'000;

// All tuples (s_1..s_{n-1}) in S_k satisfying the braid relations, in
// lexicographic order. With dedup, one least representative per simultaneous
// conjugacy class.
inline std::vector<PermRep> enum_perm_reps(int n, int k, bool dedup = false,
                                           std::uint64_t budget = default_search_budget) {
    if (n < 3) throw Error("invalid-strand-count", "need n >= 3");
    if (k < 1) throw Error("invalid-argument", "need k >= 1");
    if (k > 7) throw Error("search-budget-exceeded", "symbol count " + std::to_string(k) + " too large");

    std::vector<Perm> all;
    Perm p = perm_identity(k);
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t N = all.size();
    const std::uint64_t table_cost = static_cast<std::uint64_t>(N) * N;
    if (table_cost > budget) throw Error("search-budget-exceeded", "relation table too large");

    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i) index[all[i]] = i;
    std::vector<std::vector<std::size_t>> braid_ok(N);
    std::vector<std::vector<bool>> commute(N, std::vector<bool>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            Perm ab = perm_compose(all[a], all[b]);
            Perm ba = perm_compose(all[b], all[a]);
            commute[a][b] = ab == ba;
            if (perm_compose(ab, all[a]) == perm_compose(ba, all[b])) braid_ok[a].push_back(b);
        }

    std::vector<std::vector<Perm>> raw;
    std::vector<std::size_t> cur;
    std::uint64_t nodes = table_cost;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n - 1) {
            std::vector<Perm> imgs;
            for (auto i : cur) imgs.push_back(all[i]);
            raw.push_back(std::move(imgs));
            return;
        }
        auto try_next = [&](std::size_t c) {
            if (++nodes > budget) throw Error("search-budget-exceeded", "node budget exhausted");
            for (std::size_t j = 0; j + 1 < cur.size(); ++j)
                if (!commute[cur[j]][c]) return;
            cur.push_back(c);
            self(self);
            cur.pop_back();
        };
        if (cur.empty())
            for (std::size_t c = 0; c < N; ++c) try_next(c);
        else
            for (std::size_t c : braid_ok[cur.back()]) try_next(c);
    };
    rec(rec);

    if (dedup) {
        std::set<std::vector<Perm>> reps;
        for (const auto& imgs : raw) reps.insert(detail::least_conjugate(imgs, all));
        raw.assign(reps.begin(), reps.end());
    }
    return detail::finalize_reps(std::move(raw), k);
}

// ---------------------------------------------------------------------------
// Orbit sizes over a spectrum map to k-subsets of an r-set.

struct FiniteAction {
    int r = 0;
    std::vector<Perm> on_elements; // generators acting on the element set E
    std::vector<Perm> on_points;   // the same generators acting on {0..r-1}
};

struct OrbitSpectrum {
    BigInt ell;
    std::size_t orbit_size = 0;
    BigInt binomial;
    bool verified = false; // every k-subset is hit by exactly ell orbit elements
};

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

inline OrbitSpectrum orbit_spectrum_check(const FiniteAction& act, const std::vector<std::vector<int>>& spectrum,
                                          int e) {
    const std::size_t E = spectrum.size();
    if (act.on_elements.size() != act.on_points.size()) throw Error("not-equivariant", "generator lists differ");
    if (e < 0 || static_cast<std::size_t>(e) >= E) throw Error("invalid-argument", "element out of range");
    const std::size_t k = spectrum[e].size();
    std::vector<std::vector<int>> spec = spectrum;
    for (auto& s : spec) {
        std::sort(s.begin(), s.end());
        if (s.size() != k) throw Error("not-equivariant", "spectra have different sizes");
    }
    for (std::size_t g = 0; g < act.on_elements.size(); ++g) {
        const Perm& ge = act.on_elements[g];
        const Perm& gp = act.on_points[g];
        if (ge.size() != E || static_cast<int>(gp.size()) != act.r || !is_perm(ge) || !is_perm(gp))
            throw Error("not-equivariant", "generator is not a permutation of the right size");
        for (std::size_t x = 0; x < E; ++x) {
            std::vector<int> moved;
            for (int pnt : spec[x]) moved.push_back(gp[pnt]);
            std::sort(moved.begin(), moved.end());
            if (moved != spec[ge[x]]) throw Error("not-equivariant", "spectrum does not follow the action");
        }
    }
    std::vector<bool> seen(E, false);
    std::deque<int> queue{e};
    seen[e] = true;
    std::map<std::vector<int>, std::size_t> fibre;
    std::size_t size = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        ++size;
        ++fibre[spec[x]];
        for (const auto& g : act.on_elements)
            if (!seen[g[x]]) {
                seen[g[x]] = true;
                queue.push_back(g[x]);
            }
    }
    OrbitSpectrum out;
    out.orbit_size = size;
    out.binomial = binomial(act.r, static_cast<long long>(k));
    if (out.binomial == 0 || size % out.binomial != 0)
        throw Error("orbit-size-not-multiple", "orbit of size " + std::to_string(size));
    out.ell = BigInt(size) / out.binomial;
    out.verified = BigInt(fibre.size()) == out.binomial &&
                   std::all_of(fibre.begin(), fibre.end(), [&](const auto& kv) { return BigInt(kv.second) == out.ell; });
    return out;
}

// Params line "r M m d s".
inline LnParams parse_ln_params(const std::string& text) {
    std::istringstream in(text);
    LnParams p;
    if (!(in >> p.r >> p.M >> p.m >> p.d >> p.s)) throw Error("parse-error", "expected 'r M m d s'");
    std::string extra;
    if (in >> extra) throw Error("parse-error", "trailing input after params");
    return p;
}

// Matrix given as "rows=<R> cols=<C>" followed by R*C integers.
inline Matrix parse_int_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string a, b;
    in >> a >> b;
    long long R, C;
    try {
        if (a.rfind("rows=", 0) != 0 || b.rfind("cols=", 0) != 0) throw std::invalid_argument(a);
        R = std::stoll(a.substr(5));
        C = std::stoll(b.substr(5));
    } catch (const std::exception&) {
        throw Error("parse-error", "expected 'rows=<int> cols=<int>'");
    }
    if (R < 0 || C < 0) throw Error("parse-error", "negative dimension");
    Matrix m(R, C);
    for (long long i = 0; i < R; ++i)
        for (long long j = 0; j < C; ++j) {
            std::string tok;
            if (!(in >> tok)) throw Error("parse-error", "matrix too short");
            try {
                m(i, j) = BigInt(tok);
            } catch (const std::exception&) {
                throw Error("parse-error", "bad integer '" + tok + "'");
            }
        }
    return m;
}

} // namespace chaingroup
