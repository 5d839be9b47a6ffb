#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "chaingroup/error.hpp"

namespace chaingroup {

// Word in the classic generators of B_n. Letter i means tau_i, -i its inverse.
struct BraidWord {
    int n = 2;
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

namespace detail {
inline void require_strands(int n, int min_n = 2) {
    if (n < min_n)
        throw Error("invalid-strand-count", "n=" + std::to_string(n));
}
inline void require_same_n(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n)
        throw Error("strand-count-mismatch",
                    std::to_string(a.n) + " vs " + std::to_string(b.n));
}
} // namespace detail

inline BraidWord identity_word(int n) {
    detail::require_strands(n);
    return BraidWord{n, {}};
}

inline BraidWord letter(int n, int i) {
    detail::require_strands(n);
    if (i == 0 || std::abs(i) > n - 1)
        throw Error("invalid-generator-index", "letter " + std::to_string(i));
    return BraidWord{n, {i}};
}

inline BraidWord inverse(const BraidWord& w) {
    BraidWord r{w.n, {}};
    r.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    detail::require_same_n(a, b);
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return concat(a, b); }

// Integer power; negative exponents use the inverse word.
inline BraidWord power(const BraidWord& w, long e) {
    BraidWord base = e < 0 ? inverse(w) : w;
    BraidWord r{w.n, {}};
    for (long i = 0; i < std::labs(e); ++i)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

inline BraidWord free_reduce(const BraidWord& w) {
    BraidWord r{w.n, {}};
    r.letters.reserve(w.size());
    for (int x : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -x)
            r.letters.pop_back();
        else
            r.letters.push_back(x);
    }
    return r;
}

inline long exponent(const BraidWord& w) {
    long s = 0;
    for (int x : w.letters) s += x > 0 ? 1 : -1;
    return s;
}

inline BraidWord garside(int n) {
    detail::require_strands(n);
    BraidWord r{n, {}};
    for (int top = 1; top <= n - 1; ++top)
        for (int i = top; i >= 1; --i) r.letters.push_back(i);
    return r;
}

inline BraidWord flip_delta(int n) {
    detail::require_strands(n);
    BraidWord r{n, {}};
    for (int i = 1; i <= n - 1; ++i) r.letters.push_back(i);
    return r;
}

// tau_k with k read modulo n; tau_0 expands to delta tau_{n-1} delta^{-1}.
inline BraidWord generator(int n, long k) {
    detail::require_strands(n, 3);
    long r = ((k % n) + n) % n;
    if (r != 0) return BraidWord{n, {static_cast<int>(r)}};
    BraidWord d = flip_delta(n);
    return d * BraidWord{n, {n - 1}} * inverse(d);
}

inline BraidWord generator_power(int n, long k, int eps) {
    return power(generator(n, k), eps);
}

inline BraidWord gamma(int n, int i) {
    if (n < 6 || n % 2 != 0)
        throw Error("invalid-strand-count", "gamma needs even n >= 6, got " + std::to_string(n));
    if (i < 1 || i > n - 1 || i % 2 == 0)
        throw Error("invalid-generator-index", "gamma index " + std::to_string(i));
    BraidWord r{n, {}};
    for (int off : {0, 1, 0, 2, 1, 0}) r = r * generator(n, i + off);
    return r;
}

// Shift every letter index by `offset` and view the result in B_m.
inline BraidWord embed(const BraidWord& w, int m, int offset = 0) {
    detail::require_strands(m);
    BraidWord r{m, {}};
    r.letters.reserve(w.size());
    for (int x : w.letters) {
        int i = std::abs(x) + offset;
        if (i < 1 || i > m - 1)
            throw Error("invalid-generator-index", "embedded letter " + std::to_string(i));
        r.letters.push_back(x > 0 ? i : -i);
    }
    return r;
}

// "n=<int>" then signed indices; 0 and out-of-range indices are read mod n.
inline BraidWord parse_braid_word(int n, const std::string& body) {
    detail::require_strands(n);
    BraidWord r{n, {}};
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        long v;
        try {
            std::size_t pos = 0;
            v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error("parse-error", "bad braid letter '" + tok + "'");
        }
        if (v >= 1 && v <= n - 1) {
            r.letters.push_back(static_cast<int>(v));
        } else if (v <= -1 && v >= -(n - 1)) {
            r.letters.push_back(static_cast<int>(v));
        } else {
            if (n < 3) throw Error("invalid-generator-index", tok);
            // "-0" cannot be told apart from 0, so a leading minus decides the sign.
            bool neg = tok[0] == '-';
            long idx = neg ? -v : v;
            BraidWord g = generator(n, idx);
            if (neg) g = inverse(g);
            r.letters.insert(r.letters.end(), g.letters.begin(), g.letters.end());
        }
    }
    return r;
}

inline BraidWord parse_braid_word(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head.rfind("n=", 0) != 0) throw Error("parse-error", "braid word must start with n=<int>");
    int n;
    try {
        n = std::stoi(head.substr(2));
    } catch (const std::exception&) {
        throw Error("parse-error", "bad strand count '" + head + "'");
    }
    std::string rest;
    std::getline(in, rest, '\0');
    return parse_braid_word(n, rest);
}

inline std::string letters_string(const BraidWord& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w.letters[i];
    return out.str();
}

inline std::string to_string(const BraidWord& w) {
    std::string body = letters_string(w);
    return "n=" + std::to_string(w.n) + (body.empty() ? "" : " " + body);
}

} // namespace chaingroup
