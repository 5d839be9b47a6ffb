#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "chaingroup/oracle.hpp"

namespace chaingroup {

// Map B_n -> B_m given by generator images; images[i-1] is the image of tau_i.
struct BraidHom {
    int n = 2;
    int m = 2;
    std::vector<BraidWord> images;

    // Image of an arbitrary word of B_n.
    BraidWord operator()(const BraidWord& w) const {
        if (w.n != n) throw Error("strand-count-mismatch", "word is not in the source group");
        BraidWord r{m, {}};
        for (int x : w.letters) {
            const BraidWord& img = images.at(std::abs(x) - 1);
            BraidWord piece = x > 0 ? img : inverse(img);
            r.letters.insert(r.letters.end(), piece.letters.begin(), piece.letters.end());
        }
        return r;
    }
};

inline bool verify(const BraidHom& h) { return verify_candidate_hom(h.n, h.images); }

inline BraidHom make_hom(int n, int m, std::vector<BraidWord> images) {
    detail::require_strands(n);
    detail::require_strands(m);
    if (static_cast<int>(images.size()) != n - 1)
        throw Error("invalid-hom", "expected " + std::to_string(n - 1) + " images");
    for (const auto& w : images)
        if (w.n != m) throw Error("strand-count-mismatch", "image not in B_" + std::to_string(m));
    return BraidHom{n, m, std::move(images)};
}

inline BraidHom inclusion(int n, int m) {
    if (m < n) throw Error("strand-count-mismatch", "inclusion needs m >= n");
    std::vector<BraidWord> imgs;
    for (int i = 1; i <= n - 1; ++i) imgs.push_back(BraidWord{m, {i}});
    return make_hom(n, m, std::move(imgs));
}

inline bool cyclic_test(const BraidHom& h) {
    if (h.images.empty()) return true;
    FreeAutomorphism first = artin_action(h.images.front());
    for (std::size_t i = 1; i < h.images.size(); ++i)
        if (artin_action(h.images[i]) != first) return false;
    return true;
}

// tau_i -> gamma tau_i^eps gamma^{-1} Delta_n^{2k}
inline BraidHom theorem4_endo(int n, const BraidWord& gamma_word, int eps, long k) {
    if (n < 6) throw Error("invalid-strand-count", "endomorphism family needs n >= 6");
    if (gamma_word.n != n) throw Error("strand-count-mismatch", "conjugator not in B_n");
    if (eps != 1 && eps != -1) throw Error("invalid-argument", "eps must be +1 or -1");
    BraidWord center = power(garside(n), 2 * k);
    BraidWord ginv = inverse(gamma_word);
    std::vector<BraidWord> imgs;
    for (int i = 1; i <= n - 1; ++i) imgs.push_back(gamma_word * power(BraidWord{n, {i}}, eps) * ginv * center);
    BraidHom h = make_hom(n, n, std::move(imgs));
    if (!verify(h)) throw Error("relation-check-failed", "endomorphism images violate the braid relations");
    return h;
}

// h2 after h1.
inline BraidHom compose(const BraidHom& h1, const BraidHom& h2) {
    if (h1.m != h2.n) throw Error("strand-count-mismatch", "target of first map is not the source of second");
    std::vector<BraidWord> imgs;
    for (const auto& w : h1.images) imgs.push_back(h2(w));
    return make_hom(h1.n, h2.m, std::move(imgs));
}

namespace detail {

// Positive crossing of the width-k cable at block position `pos` (1-based)
// over the cable at pos+1, inside B_{3k}.
inline BraidWord block_crossing(int k, int pos) {
    const int m = 3 * k, o = (pos - 1) * k;
    BraidWord r{m, {}};
    for (int a = 1; a <= k; ++a)
        for (int j = o + k + a - 1; j >= o + a; --j) r.letters.push_back(j);
    return r;
}

// Half twist of the cable at block position `pos`, raised to e.
inline BraidWord cable_twist(int k, int pos, int e) {
    if (k < 2 || e == 0) return BraidWord{3 * k, {}};
    return power(embed(garside(k), 3 * k, (pos - 1) * k), e);
}

} // namespace detail

struct CablingChoice {
    std::array<int, 3> twist{}; // exponents on the cables at positions i, i+1 and the remaining one
    bool twist_first = true;    // twist before or after the block crossing
};

inline BraidHom cabling_candidate(int k, const CablingChoice& c) {
    std::vector<BraidWord> imgs;
    for (int i = 1; i <= 2; ++i) {
        int other = i == 1 ? 3 : 1;
        BraidWord tw = detail::cable_twist(k, i, c.twist[0]) * detail::cable_twist(k, i + 1, c.twist[1]) *
                       detail::cable_twist(k, other, c.twist[2]);
        BraidWord x = detail::block_crossing(k, i);
        imgs.push_back(c.twist_first ? tw * x : x * tw);
    }
    return make_hom(3, 3 * k, std::move(imgs));
}

// Searches twist placements around the block crossings and returns the first
// choice whose map is a homomorphism sending Delta_3 to Delta_{3k}.
inline std::pair<BraidHom, CablingChoice> cabling_search(int k) {
    if (k < 1) throw Error("invalid-argument", "cable width must be >= 1");
    const BraidWord target = garside(3 * k);
    const long target_exp = exponent(target);
    for (bool first : {true, false})
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b)
                for (int c = -1; c <= 1; ++c) {
                    CablingChoice choice{{a, b, c}, first};
                    BraidHom h = cabling_candidate(k, choice);
                    BraidWord img = h(garside(3));
                    if (exponent(img) != target_exp) continue;
                    if (!verify(h) || !are_equal(img, target)) continue;
                    return {h, choice};
                }
    throw Error("construction-failed", "no twist placement passes both checks for k=" + std::to_string(k));
}

inline BraidHom cabling_b3(int k) { return cabling_search(k).first; }

// Header "n=<int> m=<int>", then "<i> : <word>" per generator.
inline BraidHom parse_hom(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream h(line);
        std::string a, b;
        h >> a >> b;
        if (a.rfind("n=", 0) != 0 || b.rfind("m=", 0) != 0) throw Error("parse-error", "expected 'n=<int> m=<int>'");
        try {
            n = std::stoi(a.substr(2));
            m = std::stoi(b.substr(2));
        } catch (const std::exception&) {
            throw Error("parse-error", "bad hom header");
        }
        break;
    }
    if (n < 2 || m < 2) throw Error("parse-error", "missing or invalid hom header");
    std::vector<BraidWord> imgs(n - 1, BraidWord{m, {}});
    std::vector<bool> seen(n - 1, false);
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error("parse-error", "expected '<i> : <word>'");
        int i;
        try {
            i = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw Error("parse-error", "bad generator index");
        }
        if (i < 1 || i > n - 1) throw Error("parse-error", "generator index out of range");
        imgs[i - 1] = parse_braid_word(m, line.substr(colon + 1));
        seen[i - 1] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw Error("parse-error", "missing image for generator " + std::to_string(i + 1));
    return make_hom(n, m, std::move(imgs));
}

inline std::string to_string(const BraidHom& h) {
    std::string s = "n=" + std::to_string(h.n) + " m=" + std::to_string(h.m) + "\n";
    for (std::size_t i = 0; i < h.images.size(); ++i)
        s += std::to_string(i + 1) + " : " + letters_string(h.images[i]) + "\n";
    return s;
}

} // namespace chaingroup
