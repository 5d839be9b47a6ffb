#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "chaingroup/braid.hpp"

namespace chaingroup {

// Reduced word over x_1..x_n; letter j means x_j, -j its inverse.
struct FreeWord {
    std::vector<int> letters;
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

inline void push_reduced(std::vector<int>& out, int x) {
    if (!out.empty() && out.back() == -x)
        out.pop_back();
    else
        out.push_back(x);
}

inline FreeWord free_word(std::vector<int> letters) {
    FreeWord r;
    for (int x : letters) push_reduced(r.letters, x);
    return r;
}

inline FreeWord free_inverse(const FreeWord& w) {
    FreeWord r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

inline FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    for (int x : b.letters) push_reduced(r.letters, x);
    return r;
}

// Images of x_1..x_n. Braids act on the right: x.(uv) = (x.u).v, so the
// first letter of a braid word is applied first.
struct FreeAutomorphism {
    int n = 0;
    std::vector<FreeWord> images; // images[j-1] is the image of x_j

    friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;
};

inline FreeAutomorphism identity_automorphism(int n) {
    FreeAutomorphism a{n, std::vector<FreeWord>(n)};
    for (int j = 1; j <= n; ++j) a.images[j - 1].letters = {j};
    return a;
}

// Substitute phi's images into w.
inline FreeWord apply(const FreeAutomorphism& phi, const FreeWord& w) {
    FreeWord r;
    for (int x : w.letters) {
        const auto& img = phi.images[std::abs(x) - 1].letters;
        if (x > 0)
            for (int y : img) push_reduced(r.letters, y);
        else
            for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(r.letters, -*it);
    }
    return r;
}

// Action of `first` followed by `second`: x -> second(first(x)).
inline FreeAutomorphism then(const FreeAutomorphism& first, const FreeAutomorphism& second) {
    FreeAutomorphism r{first.n, {}};
    r.images.reserve(first.images.size());
    for (const auto& img : first.images) r.images.push_back(apply(second, img));
    return r;
}

namespace detail {

// Rewrite every image by one braid letter, in place.
inline void apply_letter(std::vector<FreeWord>& images, int letter) {
    const int i = std::abs(letter);
    std::vector<int> buf;
    for (auto& img : images) {
        bool touched = false;
        for (int x : img.letters)
            if (std::abs(x) == i || std::abs(x) == i + 1) { touched = true; break; }
        if (!touched) continue;
        buf.clear();
        buf.reserve(img.letters.size() * 2);
        for (int x : img.letters) {
            int a = std::abs(x), s = x > 0 ? 1 : -1;
            if (a != i && a != i + 1) {
                push_reduced(buf, x);
                continue;
            }
            if (letter > 0) {
                // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
                if (a == i + 1) {
                    push_reduced(buf, s * i);
                } else if (s > 0) {
                    push_reduced(buf, i); push_reduced(buf, i + 1); push_reduced(buf, -i);
                } else {
                    push_reduced(buf, i); push_reduced(buf, -(i + 1)); push_reduced(buf, -i);
                }
            } else {
                // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
                if (a == i) {
                    push_reduced(buf, s * (i + 1));
                } else if (s > 0) {
                    push_reduced(buf, -(i + 1)); push_reduced(buf, i); push_reduced(buf, i + 1);
                } else {
                    push_reduced(buf, -(i + 1)); push_reduced(buf, -i); push_reduced(buf, i + 1);
                }
            }
        }
        img.letters.swap(buf);
    }
}

} // namespace detail

inline FreeAutomorphism artin_action(const BraidWord& w) {
    FreeAutomorphism a = identity_automorphism(w.n);
    for (int x : w.letters) {
        if (x == 0 || std::abs(x) > w.n - 1)
            throw Error("invalid-generator-index", "letter " + std::to_string(x));
        detail::apply_letter(a.images, x);
    }
    return a;
}

inline bool is_identity_automorphism(const FreeAutomorphism& a) {
    for (int j = 1; j <= a.n; ++j)
        if (a.images[j - 1].letters != std::vector<int>{j}) return false;
    return true;
}

inline bool is_identity(const BraidWord& w) { return is_identity_automorphism(artin_action(w)); }

inline bool are_equal(const BraidWord& u, const BraidWord& v) {
    detail::require_same_n(u, v);
    return artin_action(u) == artin_action(v);
}

inline bool is_central(const BraidWord& w) {
    FreeAutomorphism a = artin_action(w);
    for (int i = 1; i <= w.n - 1; ++i) {
        FreeAutomorphism t = artin_action(BraidWord{w.n, {i}});
        if (then(a, t) != then(t, a)) return false;
    }
    return true;
}

// Do the images satisfy the braid and far-commutation relations of B_n?
// images[i-1] is the image of tau_i; all images must share one strand count.
inline bool verify_candidate_hom(int n, const std::vector<BraidWord>& images) {
    detail::require_strands(n);
    if (static_cast<int>(images.size()) != n - 1)
        throw Error("invalid-hom", "expected " + std::to_string(n - 1) + " images");
    std::vector<FreeAutomorphism> act;
    act.reserve(images.size());
    for (const auto& w : images) {
        if (w.n != images.front().n) detail::require_same_n(images.front(), w);
        act.push_back(artin_action(w));
    }
    for (int i = 0; i + 1 < n - 1; ++i) {
        const auto& a = act[i];
        const auto& b = act[i + 1];
        if (then(then(a, b), a) != then(then(b, a), b)) return false;
    }
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 2; j < n - 1; ++j)
            if (then(act[i], act[j]) != then(act[j], act[i])) return false;
    return true;
}

inline std::string to_string(const FreeWord& w) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        int x = w.letters[k];
        if (k) s += ' ';
        s += "x" + std::to_string(std::abs(x));
        if (x < 0) s += "^-1";
    }
    return s;
}

} // namespace chaingroup
