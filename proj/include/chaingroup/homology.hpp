#pragma once

#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "chaingroup/linalg.hpp"

namespace chaingroup {

struct SurfaceSig {
    int g = 0;
    int b = 0;

    SurfaceSig(int genus, int boundary) : g(genus), b(boundary) {
        if (g < 0 || b < 0 || euler() > -1)
            throw Error("invalid-surface", "need 2-2g-b <= -1, got g=" + std::to_string(g) +
                                               " b=" + std::to_string(b));
    }
    int euler() const { return 2 - 2 * g - b; }
};

// Free abelian group with a skew pairing <x,y> = x^T P y.
struct SkewLattice {
    std::size_t rank = 0;
    Matrix pairing;

    int genus() const { return static_cast<int>(rank / 2); }
};

using CurveClass = IntVector;

// Basis e_1..e_{2g} with <e_{2i-1}, e_{2i}> = 1.
inline SkewLattice standard_lattice(int g) {
    if (g < 1) throw Error("unsupported", "homology model needs genus >= 1");
    SkewLattice L{static_cast<std::size_t>(2 * g), Matrix(2 * g, 2 * g)};
    for (int i = 0; i < g; ++i) {
        L.pairing(2 * i, 2 * i + 1) = 1;
        L.pairing(2 * i + 1, 2 * i) = -1;
    }
    return L;
}

inline BigInt pair(const SkewLattice& L, const IntVector& x, const IntVector& y) {
    return dot(x, L.pairing * y);
}

inline bool preserves_pairing(const SkewLattice& L, const Matrix& m) {
    return m.rows() == L.rank && m.cols() == L.rank && m.transpose() * L.pairing * m == L.pairing;
}

inline Matrix symplectic_inverse(const SkewLattice& L, const Matrix& m) {
    // m^T P m = P gives m^{-1} = P^{-1} m^T P.
    return inverse_unimodular(L.pairing) * m.transpose() * L.pairing;
}

// Homology action of the Dehn twist T_c^eps: x -> x + eps <x,c> c.
inline Matrix transvection_matrix(const SkewLattice& L, const CurveClass& c, int eps) {
    if (c.size() != L.rank) throw Error("invalid-curve-class", "wrong length");
    if (eps != 1 && eps != -1) throw Error("invalid-argument", "eps must be +1 or -1");
    BigInt g = content(c);
    if (g != 0 && g != 1) throw Error("invalid-curve-class", "class is not primitive");
    IntVector w = L.pairing * c; // w_j = <e_j, c>
    Matrix t = Matrix::identity(L.rank);
    for (std::size_t i = 0; i < L.rank; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank; ++j) t(i, j) += eps * c[i] * w[j];
    }
    return t;
}

inline bool is_valid_chain(const SkewLattice& L, const std::vector<CurveClass>& chain) {
    for (const auto& c : chain)
        if (c.size() != L.rank || content(c) != 1) return false;
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            BigInt p = pair(L, chain[i], chain[j]);
            if (j == i + 1 ? (p != 1 && p != -1) : p != 0) return false;
        }
    return true;
}

// c_1 = a_1, c_2 = b_1, c_3 = a_2 - a_1, c_4 = b_2, ..., c_{2g} = b_g, c_{2g+1} = -a_g.
inline std::vector<CurveClass> build_chain(const SkewLattice& L, int k) {
    const int g = L.genus();
    if (k < 1) throw Error("invalid-argument", "chain length must be >= 1");
    if (k > 2 * g + 1)
        throw Error("chain-too-long", "k=" + std::to_string(k) + " exceeds 2g+1=" + std::to_string(2 * g + 1));
    auto alpha = [&](int i) { return static_cast<std::size_t>(2 * (i - 1)); };
    auto beta = [&](int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); };
    std::vector<CurveClass> chain;
    for (int j = 1; j <= k; ++j) {
        CurveClass c(L.rank);
        if (j == 1) {
            c[alpha(1)] = 1;
        } else if (j == 2 * g + 1) {
            c[alpha(g)] = -1;
        } else if (j % 2 == 0) {
            c[beta(j / 2)] = 1;
        } else {
            int i = (j + 1) / 2;
            c[alpha(i)] = 1;
            c[alpha(i - 1)] = -1;
        }
        chain.push_back(c);
    }
    return chain;
}

inline void require_chain(const SkewLattice& L, const std::vector<CurveClass>& chain) {
    if (!is_valid_chain(L, chain)) throw Error("invalid-chain", "intersection pattern violated");
}

inline std::vector<Matrix> monodromy_rep(const SkewLattice& L, const std::vector<CurveClass>& chain, int eps) {
    require_chain(L, chain);
    std::vector<Matrix> rep;
    for (const auto& c : chain) rep.push_back(transvection_matrix(L, c, eps));
    return rep;
}

// Braid relation for adjacent matrices, commutation for the rest.
inline bool satisfies_braid_relations(const std::vector<Matrix>& rep) {
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (std::size_t j = i + 1; j < rep.size(); ++j) {
            const Matrix& a = rep[i];
            const Matrix& b = rep[j];
            if (j == i + 1 ? a * b * a != b * a * b : a * b != b * a) return false;
        }
    return true;
}

// (T_1 (T_2 T_1) ... (T_k ... T_1))^2
inline Matrix chain_product_square(const SkewLattice& L, const std::vector<CurveClass>& chain) {
    require_chain(L, chain);
    if (chain.size() < 2) throw Error("invalid-chain", "need at least two curves");
    std::vector<Matrix> t;
    for (const auto& c : chain) t.push_back(transvection_matrix(L, c, 1));
    Matrix alpha = Matrix::identity(L.rank);
    for (std::size_t top = 0; top < t.size(); ++top)
        for (std::size_t i = top + 1; i-- > 0;) alpha = alpha * t[i];
    return alpha * alpha;
}

inline std::vector<Matrix> apply_transvection(const SkewLattice& L, const std::vector<Matrix>& rep, const Matrix& v) {
    if (!preserves_pairing(L, v)) throw Error("direction-not-central", "direction does not preserve the pairing");
    std::vector<Matrix> out;
    for (const auto& m : rep) {
        if (m * v != v * m) throw Error("direction-not-central", "direction does not commute with the image");
        out.push_back(m * v);
    }
    return out;
}

struct TransvectionTriple {
    std::vector<CurveClass> chain;
    int eps = 1;
    Matrix direction;
    friend bool operator==(const TransvectionTriple&, const TransvectionTriple&) = default;
};
struct CyclicVerdict {};
struct NotRecognized {
    std::string reason;
};
using ExtractResult = std::variant<TransvectionTriple, CyclicVerdict, NotRecognized>;

inline std::vector<CurveClass> normalized_chain(std::vector<CurveClass> chain) {
    for (auto& c : chain) c = primitive_normalized(std::move(c));
    return chain;
}

// Recover (chain, eps, V) from matrices M_i = T_{c_i}^eps V. The span of c_1 is
// the common part of the images of M_1 M_3^{-1} - I and M_1 M_4^{-1} - I.
inline ExtractResult extract_triple(const SkewLattice& L, const std::vector<Matrix>& ms) {
    if (ms.size() < 5) return NotRecognized{"need at least five matrices"};
    for (const auto& m : ms)
        if (m.rows() != L.rank || m.cols() != L.rank) return NotRecognized{"matrix size does not match lattice"};
    bool all_equal = true;
    for (const auto& m : ms) all_equal = all_equal && m == ms.front();
    if (all_equal) return CyclicVerdict{};
    for (const auto& m : ms)
        if (!preserves_pairing(L, m)) return NotRecognized{"matrix does not preserve the pairing"};

    const Matrix id = Matrix::identity(L.rank);
    Matrix n3 = column_basis(ms[0] * symplectic_inverse(L, ms[2]) - id);
    Matrix n4 = column_basis(ms[0] * symplectic_inverse(L, ms[3]) - id);
    if (n3.cols() != 2 || n4.cols() != 2) return NotRecognized{"difference maps are not of rank two"};
    Matrix stacked(L.rank, 4);
    for (std::size_t i = 0; i < L.rank; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            stacked(i, j) = n3(i, j);
            stacked(i, j + 2) = -n4(i, j);
        }
    auto ker = nullspace(stacked);
    if (ker.size() != 1) return NotRecognized{"no unique first curve"};
    CurveClass a1 = primitive_normalized(n3 * IntVector{ker[0][0], ker[0][1]});

    for (int eps : {1, -1}) {
        Matrix v = transvection_matrix(L, a1, -eps) * ms[0];
        Matrix vinv = symplectic_inverse(L, v);
        std::vector<CurveClass> chain;
        bool ok = true;
        for (const auto& m : ms) {
            Matrix col = column_basis(m * vinv - id);
            if (col.cols() != 1) { ok = false; break; }
            CurveClass c = primitive_normalized(col.column(0));
            if (transvection_matrix(L, c, eps) * v != m) { ok = false; break; }
            chain.push_back(std::move(c));
        }
        if (!ok || !is_valid_chain(L, chain)) continue;
        for (const auto& m : ms)
            if (m * v != v * m) ok = false;
        if (!ok) continue;
        return TransvectionTriple{std::move(chain), eps, std::move(v)};
    }
    return NotRecognized{"no consistent chain and direction"};
}

// Element of the central extension: a matrix plus formal boundary-twist exponents.
struct CentralExtElement {
    Matrix mat;
    std::vector<long long> twist;

    friend bool operator==(const CentralExtElement&, const CentralExtElement&) = default;

    friend CentralExtElement operator*(const CentralExtElement& x, const CentralExtElement& y) {
        if (x.twist.size() != y.twist.size()) throw Error("shape-mismatch", "twist vectors differ in length");
        CentralExtElement z{x.mat * y.mat, x.twist};
        for (std::size_t i = 0; i < z.twist.size(); ++i) z.twist[i] += y.twist[i];
        return z;
    }
    CentralExtElement inverse() const {
        CentralExtElement z{inverse_unimodular(mat), twist};
        for (auto& t : z.twist) t = -t;
        return z;
    }
    bool is_central_defect() const { return mat.is_identity(); }
};

inline bool satisfies_braid_relations(const std::vector<CentralExtElement>& rep) {
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (std::size_t j = i + 1; j < rep.size(); ++j) {
            const auto& a = rep[i];
            const auto& b = rep[j];
            if (j == i + 1 ? a * b * a != b * a * b : a * b != b * a) return false;
        }
    return true;
}

// If r2_i = r1_i w for one central w, return w.
inline CentralExtElement check_transvection_pair(const std::vector<CentralExtElement>& r1,
                                                 const std::vector<CentralExtElement>& r2) {
    if (r1.size() != r2.size() || r1.empty()) throw Error("projections-differ", "lists differ in length");
    CentralExtElement dir;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        if (r1[i].mat != r2[i].mat) throw Error("projections-differ", "matrix parts differ at " + std::to_string(i + 1));
        CentralExtElement g = r1[i].inverse() * r2[i];
        if (!g.is_central_defect()) throw Error("projections-differ", "defect is not central");
        if (i == 0)
            dir = g;
        else if (g != dir)
            throw Error("defects-not-equal", "defect " + std::to_string(i + 1) + " differs from the first");
    }
    return dir;
}

// Fold the central braid defects W_i into the lifts: A'_i = A_i W_1 ... W_{i-1}.
inline std::vector<CentralExtElement> lift_adjust(const std::vector<CentralExtElement>& lifts) {
    const std::size_t k = lifts.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j)
            if (lifts[i].mat * lifts[j].mat != lifts[j].mat * lifts[i].mat)
                throw Error("not-liftable-input", "far generators do not commute");
    std::vector<CentralExtElement> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (i == 0) {
            out.push_back(lifts[0]);
            continue;
        }
        const auto& a = lifts[i - 1];
        const auto& b = lifts[i];
        CentralExtElement w = (a * b * a) * (b * a * b).inverse();
        if (!w.is_central_defect())
            throw Error("not-liftable-input", "defect " + std::to_string(i) + " has a nontrivial matrix part");
        // out[i-1] already carries W_1..W_{i-2}; append W_{i-1}.
        CentralExtElement acc = lifts[i];
        for (std::size_t t = 0; t < acc.twist.size(); ++t)
            acc.twist[t] += (out[i - 1].twist[t] - lifts[i - 1].twist[t]) + w.twist[t];
        out.push_back(std::move(acc));
    }
    return out;
}

namespace detail {

inline long long read_header(std::istream& in, const std::string& key) {
    std::string tok;
    if (!(in >> tok)) throw Error("parse-error", "missing " + key + "=<int> header");
    if (tok.rfind(key + "=", 0) != 0) throw Error("parse-error", "expected " + key + "=<int>, got '" + tok + "'");
    try {
        return std::stoll(tok.substr(key.size() + 1));
    } catch (const std::exception&) {
        throw Error("parse-error", "bad header '" + tok + "'");
    }
}

inline BigInt read_int(std::istream& in) {
    std::string tok;
    if (!(in >> tok)) throw Error("parse-error", "unexpected end of input");
    try {
        return BigInt(tok);
    } catch (const std::exception&) {
        throw Error("parse-error", "bad integer '" + tok + "'");
    }
}

} // namespace detail

inline Matrix read_matrix(std::istream& in) {
    long long n = detail::read_header(in, "rank");
    if (n < 1) throw Error("parse-error", "rank must be positive");
    Matrix m(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m(i, j) = detail::read_int(in);
    return m;
}

inline Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

// Consecutive "rank=" blocks.
inline std::vector<Matrix> parse_matrices(const std::string& text) {
    std::istringstream in(text);
    std::vector<Matrix> out;
    in >> std::ws;
    while (in.peek() != std::char_traits<char>::eof()) {
        out.push_back(read_matrix(in));
        in >> std::ws;
    }
    return out;
}

inline std::vector<CurveClass> parse_chain(const std::string& text, std::size_t rank) {
    std::istringstream in(text);
    long long k = detail::read_header(in, "k");
    if (k < 0) throw Error("parse-error", "negative chain length");
    std::vector<CurveClass> chain;
    for (long long i = 0; i < k; ++i) {
        CurveClass c(rank);
        for (auto& x : c) x = detail::read_int(in);
        chain.push_back(std::move(c));
    }
    return chain;
}

inline std::string chain_to_string(const std::vector<CurveClass>& chain) {
    std::string s = "k=" + std::to_string(chain.size()) + "\n";
    for (const auto& c : chain) s += to_string(c) + "\n";
    return s;
}

} // namespace chaingroup
