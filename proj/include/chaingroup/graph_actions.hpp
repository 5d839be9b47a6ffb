#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chaingroup/finite.hpp"

namespace chaingroup {

struct VertexLabel {
    int genus = 0;
    int boundary = 0; // natural boundary components
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Multigraph with a cyclic action. Vertices and edges are 0-based; loops allowed.
struct ActionGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> vperm;
    std::vector<int> eperm;
    std::vector<std::optional<VertexLabel>> labels;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

struct TypeA {
    int k = 1; // vertex count
    int p = 1; // step
    int d = 1; // multiplicity
    friend bool operator==(const TypeA&, const TypeA&) = default;
};

// Bipartite between orbits of sizes k and l. Stored with k <= l.
struct TypeB {
    int k = 1;
    int l = 1;
    int d = 1;
    friend bool operator==(const TypeB& a, const TypeB& b) {
        return a.d == b.d && std::minmax(a.k, a.l) == std::minmax(b.k, b.l);
    }
};

using GraphClass = std::variant<TypeA, TypeB>;

inline std::string to_string(const GraphClass& c) {
    if (const auto* a = std::get_if<TypeA>(&c))
        return "TypeA k=" + std::to_string(a->k) + " p=" + std::to_string(a->p) + " d=" + std::to_string(a->d);
    const auto& b = std::get<TypeB>(c);
    return "TypeB k=" + std::to_string(b.k) + " l=" + std::to_string(b.l) + " d=" + std::to_string(b.d);
}

namespace detail {

inline std::pair<int, int> sorted_pair(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

inline bool is_connected(const ActionGraph& g) {
    if (g.vertices == 0) return false;
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);
    for (int v = 0; v < g.vertices; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

inline void check_shape(const ActionGraph& g) {
    if (g.vertices < 1) throw Error("invalid-graph", "no vertices");
    if (static_cast<int>(g.vperm.size()) != g.vertices || !is_perm(g.vperm))
        throw Error("invalid-graph", "vertex permutation has the wrong size");
    if (g.eperm.size() != g.edges.size() || !is_perm(g.eperm))
        throw Error("invalid-graph", "edge permutation has the wrong size");
    for (auto [u, v] : g.edges)
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) throw Error("invalid-graph", "edge endpoint out of range");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        if (sorted_pair(g.vperm[u], g.vperm[v]) != sorted_pair(g.edges[g.eperm[e]].first, g.edges[g.eperm[e]].second))
            throw Error("invalid-graph", "action is not a graph automorphism");
    }
}

inline bool single_cycle(const std::vector<int>& p) {
    if (p.empty()) return false;
    std::size_t len = 0;
    int x = 0;
    do {
        x = p[x];
        ++len;
    } while (x != 0 && len <= p.size());
    return len == p.size();
}

inline int gcd(int a, int b) { return std::gcd(a, b); }

} // namespace detail

inline bool is_valid_class(const GraphClass& c, int m) {
    if (m < 1) return false;
    if (const auto* a = std::get_if<TypeA>(&c)) {
        if (a->k < 1) return false;
        if (a->k <= 2) return a->p == 1 && a->d == m;
        return a->p >= 1 && a->p < a->k && detail::gcd(a->p, a->k) == 1 && a->d * a->k == m;
    }
    const auto& b = std::get<TypeB>(c);
    return b.k >= 1 && b.l >= 1 && detail::gcd(b.k, b.l) == 1 && b.d >= 1 && b.d * b.k * b.l == m;
}

// Canonical representative: TypeA step p <= k/2, TypeB with k <= l.
inline GraphClass canonical_class(GraphClass c) {
    if (auto* a = std::get_if<TypeA>(&c)) {
        if (a->k > 2) a->p = std::min(a->p, a->k - a->p);
    } else {
        auto& b = std::get<TypeB>(c);
        if (b.k > b.l) std::swap(b.k, b.l);
    }
    return c;
}

inline ActionGraph generate(const GraphClass& c, int m) {
    if (!is_valid_class(c, m)) throw Error("invalid-params", to_string(c) + " with m=" + std::to_string(m));
    ActionGraph g;
    g.eperm.resize(m);
    for (int i = 0; i < m; ++i) g.eperm[i] = (i + 1) % m;
    if (const auto* a = std::get_if<TypeA>(&c)) {
        g.vertices = a->k;
        for (int i = 0; i < m; ++i) g.edges.push_back(detail::sorted_pair(i % a->k, (i + a->p) % a->k));
        for (int v = 0; v < a->k; ++v) g.vperm.push_back((v + 1) % a->k);
    } else {
        const auto& b = std::get<TypeB>(c);
        g.vertices = b.k + b.l;
        for (int i = 0; i < m; ++i) g.edges.emplace_back(i % b.k, b.k + i % b.l);
        for (int v = 0; v < b.k; ++v) g.vperm.push_back((v + 1) % b.k);
        for (int v = 0; v < b.l; ++v) g.vperm.push_back(b.k + (v + 1) % b.l);
    }
    g.labels.assign(g.vertices, std::nullopt);
    return g;
}

inline void require_edge_transitive(const ActionGraph& g) {
    detail::check_shape(g);
    if (g.edges.empty() || !detail::single_cycle(g.eperm))
        throw Error("not-edge-transitive", "edge permutation is not a single cycle");
    if (!detail::is_connected(g)) throw Error("not-connected", "graph is not connected");
}

// Encoding that is equal for two graphs exactly when some bijection of
// vertices and a shift of the edge cycle carry one action onto the other.
inline std::vector<int> canonical_form(const ActionGraph& g) {
    require_edge_transitive(g);
    const int m = g.edge_count();
    std::vector<int> best;
    auto [u0, v0] = g.edges[0];
    for (int flip = 0; flip < 2; ++flip) {
        int x = flip ? v0 : u0, y = flip ? u0 : v0;
        std::vector<int> label(g.vertices, -1);
        int next = 0;
        for (int i = 0; i < m; ++i) {
            for (int z : {x, y})
                if (label[z] < 0) label[z] = next++;
            x = g.vperm[x];
            y = g.vperm[y];
        }
        std::vector<int> enc{g.vertices, m};
        int e = 0;
        for (int i = 0; i < m; ++i) {
            auto [a, b] = g.edges[e];
            auto [p, q] = detail::sorted_pair(label[a], label[b]);
            enc.push_back(p);
            enc.push_back(q);
            e = g.eperm[e];
        }
        std::vector<int> inv(g.vertices);
        for (int v = 0; v < g.vertices; ++v) inv[label[v]] = v;
        for (int l = 0; l < g.vertices; ++l) enc.push_back(label[g.vperm[inv[l]]]);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

inline bool isomorphic(const ActionGraph& a, const ActionGraph& b) { return canonical_form(a) == canonical_form(b); }

inline GraphClass classify(const ActionGraph& g) {
    require_edge_transitive(g);
    const int m = g.edge_count();
    auto [u, v] = g.edges[0];
    auto orbit = [&](int x) {
        std::vector<int> o{x};
        for (int y = g.vperm[x]; y != x; y = g.vperm[y]) o.push_back(y);
        return o;
    };
    std::vector<int> ou = orbit(u);
    auto pos = std::find(ou.begin(), ou.end(), v);
    GraphClass c;
    if (pos != ou.end()) {
        int k = static_cast<int>(ou.size());
        int p = static_cast<int>(pos - ou.begin());
        if (k <= 2)
            c = TypeA{k, 1, m};
        else
            c = TypeA{k, p, k ? m / k : 0};
    } else {
        int k = static_cast<int>(ou.size());
        int l = static_cast<int>(orbit(v).size());
        c = TypeB{k, l, m / (k * l)};
    }
    c = canonical_class(c);
    if (!is_valid_class(c, m) || !isomorphic(generate(c, m), g))
        throw Error("classification-failed", "graph does not match its template " + to_string(c));
    return c;
}

// Every valid class for m edges, canonical representatives only.
inline std::vector<GraphClass> all_classes(int m) {
    std::vector<GraphClass> out;
    out.push_back(TypeA{1, 1, m});
    out.push_back(TypeA{2, 1, m});
    for (int k = 3; k <= m; ++k)
        if (m % k == 0)
            for (int p = 1; 2 * p <= k; ++p)
                if (detail::gcd(p, k) == 1) out.push_back(TypeA{k, p, m / k});
    for (int k = 1; k <= m; ++k)
        for (int l = k; k * l <= m; ++l)
            if (m % (k * l) == 0 && detail::gcd(k, l) == 1) out.push_back(TypeB{k, l, m / (k * l)});
    return out;
}

namespace detail {

inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

constexpr int brute_force_max_edges = 8;

// Exhaustive search: any edge-transitive cyclic action is fixed by the vertex
// permutation (one per cycle type up to relabelling) and the endpoints of one edge.
inline std::vector<ActionGraph> brute_enumerate(int m, std::uint64_t budget = default_search_budget) {
    if (m < 1) throw Error("invalid-argument", "need m >= 1");
    if (m > brute_force_max_edges) throw Error("budget-exceeded", "brute force is limited to m <= 8");
    std::set<std::vector<int>> seen;
    std::vector<ActionGraph> out;
    std::uint64_t nodes = 0;
    for (int V = 1; V <= m + 1; ++V) {
        std::vector<std::vector<int>> types;
        std::vector<int> cur;
        detail::partitions(V, V, cur, types);
        for (const auto& type : types) {
            std::vector<int> sigma(V);
            int base = 0;
            for (int len : type) {
                for (int i = 0; i < len; ++i) sigma[base + i] = base + (i + 1) % len;
                base += len;
            }
            for (int u = 0; u < V; ++u)
                for (int v = u; v < V; ++v) {
                    if (++nodes > budget) throw Error("budget-exceeded", "node budget exhausted");
                    ActionGraph g;
                    g.vertices = V;
                    g.vperm = sigma;
                    int x = u, y = v;
                    for (int i = 0; i < m; ++i) {
                        g.edges.push_back(detail::sorted_pair(x, y));
                        x = sigma[x];
                        y = sigma[y];
                    }
                    if (detail::sorted_pair(x, y) != detail::sorted_pair(u, v)) continue;
                    g.eperm.resize(m);
                    for (int i = 0; i < m; ++i) g.eperm[i] = (i + 1) % m;
                    if (!detail::is_connected(g)) continue;
                    g.labels.assign(V, std::nullopt);
                    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
                }
        }
    }
    return out;
}

struct GenusAudit {
    int edges = 0, vertex_count = 0;
    int c = 0; // 1 + |edges| - |vertices|
    int h = 0; // vertices of degree 1 or 2
    bool edge_bound = false;   // |edges| <= 2 genus
    bool cycle_bound = false;  // genus >= c + h
    bool equality_case = false;
    bool equality_allowed = true;
    std::optional<bool> euler_ok; // only when every vertex is labelled
    long long euler_sum = 0;
    bool feasible = false;
    GraphClass cls;
};

inline std::vector<int> degrees(const ActionGraph& g) {
    std::vector<int> deg(g.vertices, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

inline GenusAudit genus_audit(const ActionGraph& g, int genus, int b) {
    if (genus < 0 || b < 0) throw Error("hypothesis-violation", "negative genus or boundary count");
    if (g.edge_count() < 3) throw Error("hypothesis-violation", "need at least three curves");
    GraphClass cls;
    try {
        cls = classify(g);
    } catch (const Error& e) {
        throw Error("hypothesis-violation", e.what());
    }
    GenusAudit a;
    a.cls = cls;
    a.edges = g.edge_count();
    a.vertex_count = g.vertices;
    a.c = 1 + a.edges - a.vertex_count;
    auto deg = degrees(g);
    a.h = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int x) { return x == 1 || x == 2; }));
    a.edge_bound = a.edges <= 2 * genus;
    a.cycle_bound = genus >= a.c + a.h;
    a.equality_case = a.edges == 2 * genus;
    if (a.equality_case)
        a.equality_allowed = genus == 6 && b == 0 && cls == GraphClass{TypeB{3, 4, 1}};
    bool labelled = !g.labels.empty() && std::all_of(g.labels.begin(), g.labels.end(), [](const auto& l) { return l.has_value(); });
    if (labelled) {
        for (int v = 0; v < g.vertices; ++v)
            a.euler_sum += 2 - 2LL * g.labels[v]->genus - deg[v] - g.labels[v]->boundary;
        a.euler_ok = a.euler_sum == 2 - 2LL * genus - b;
    }
    a.feasible = a.edge_bound && a.cycle_bound && a.equality_allowed && a.euler_ok.value_or(true);
    return a;
}

// Cycles like "(0 1 2)(3)", 0-based.
inline std::vector<int> parse_cycles0(const std::string& text, int size) {
    return parse_permutation(text, static_cast<std::size_t>(size), false);
}

inline std::string cycles0(const std::vector<int>& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        s += "(";
        std::size_t y = x;
        bool first = true;
        while (!seen[y]) {
            seen[y] = true;
            s += (first ? "" : " ") + std::to_string(y);
            first = false;
            y = p[y];
        }
        s += ")";
    }
    return s;
}

inline ActionGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ActionGraph g;
    bool have_vertices = false, have_action = false;
    std::string vtext, etext;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.rfind("vertices=", 0) == 0) {
            try {
                g.vertices = std::stoi(head.substr(9));
            } catch (const std::exception&) {
                throw Error("parse-error", "bad vertex count");
            }
            have_vertices = true;
        } else if (head == "label") {
            int v;
            VertexLabel l;
            if (!(ls >> v >> l.genus >> l.boundary)) throw Error("parse-error", "expected 'label v genus b'");
            if (!have_vertices || v < 0 || v >= g.vertices) throw Error("parse-error", "label for unknown vertex");
            g.labels.resize(g.vertices);
            g.labels[v] = l;
        } else if (head.rfind("vperm=", 0) == 0) {
            auto epos = line.find("eperm=");
            auto vpos = line.find("vperm=");
            if (epos == std::string::npos) throw Error("parse-error", "action line needs eperm=");
            vtext = line.substr(vpos + 6, epos - vpos - 6);
            etext = line.substr(epos + 6);
            have_action = true;
        } else {
            int u, v;
            std::istringstream es(line);
            if (!(es >> u >> v)) throw Error("parse-error", "bad line '" + line + "'");
            std::string extra;
            if (es >> extra) throw Error("parse-error", "bad edge line '" + line + "'");
            g.edges.emplace_back(u, v);
        }
    }
    if (!have_vertices) throw Error("parse-error", "missing vertices=<int>");
    if (!have_action) throw Error("parse-error", "missing action line");
    for (auto& [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) throw Error("parse-error", "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    g.vperm = parse_cycles0(vtext, g.vertices);
    g.eperm = parse_cycles0(etext, static_cast<int>(g.edges.size()));
    g.labels.resize(g.vertices);
    return g;
}

inline std::string to_text(const ActionGraph& g) {
    std::string s = "vertices=" + std::to_string(g.vertices) + "\n";
    for (auto [u, v] : g.edges) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    for (int v = 0; v < static_cast<int>(g.labels.size()); ++v)
        if (g.labels[v])
            s += "label " + std::to_string(v) + " " + std::to_string(g.labels[v]->genus) + " " +
                 std::to_string(g.labels[v]->boundary) + "\n";
    s += "vperm=" + cycles0(g.vperm) + " eperm=" + cycles0(g.eperm) + "\n";
    return s;
}

} // namespace chaingroup
