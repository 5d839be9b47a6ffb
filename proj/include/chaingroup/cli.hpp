#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "chaingroup/suites.hpp"

namespace chaingroup::cli {

enum Status : int { ok = 0, check_failed = 1, usage_error = 2, internal_error = 3 };

struct Outcome {
    int status = ok;
    std::string report;
};

namespace detail {

class Report {
public:
    void line(const std::string& s) { out_ << s << '\n'; }
    void block(const std::string& s) {
        out_ << s;
        if (!s.empty() && s.back() != '\n') out_ << '\n';
    }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

inline std::string quote(const std::string& s) { return "\"" + s + "\""; }

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f) throw Error("parse-error", "cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

inline std::uint64_t budget_from_env() {
    const char* v = std::getenv("CHAINGROUP_BUDGET");
    if (!v || !*v) return default_search_budget;
    try {
        std::size_t pos = 0;
        unsigned long long b = std::stoull(v, &pos);
        if (pos != std::string(v).size()) throw std::invalid_argument(v);
        return b;
    } catch (const std::exception&) {
        throw Error("parse-error", "CHAINGROUP_BUDGET must be a nonnegative integer");
    }
}

inline std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(part, &pos));
            if (pos != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error("parse-error", "bad list entry '" + part + "'");
        }
    }
    return out;
}

inline bool internal_code(const std::string& code) {
    return code == "relation-check-failed" || code == "construction-failed" || code == "classification-failed";
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

inline std::string triple_text(const TransvectionTriple& t) {
    std::string s = "eps=" + std::to_string(t.eps) + "\n" + chain_to_string(t.chain) + "direction\n" +
                    to_string(t.direction);
    return s;
}

// Matrix blocks each followed by "twist=<a,b,...>".
inline std::vector<CentralExtElement> parse_lifts(const std::string& text) {
    std::istringstream in(text);
    std::vector<CentralExtElement> out;
    in >> std::ws;
    while (in.peek() != std::char_traits<char>::eof()) {
        Matrix m = read_matrix(in);
        std::string tok;
        if (!(in >> tok) || tok.rfind("twist=", 0) != 0) throw Error("parse-error", "expected twist=<list> after matrix");
        out.push_back(CentralExtElement{m, parse_list(tok.substr(6))});
        in >> std::ws;
    }
    return out;
}

inline std::string suite_text(const SuiteResult& r) {
    std::ostringstream o;
    for (const auto& i : r.items)
        o << (i.pass ? "pass" : "FAIL") << "  " << i.label << (i.detail.empty() ? "" : "  (" + i.detail + ")") << '\n';
    o << "suite=" << r.name << " items=" << r.items.size() << " failures=" << r.failures()
      << " status=" << (r.pass() ? "pass" : "fail") << '\n';
    return o.str();
}

} // namespace detail

// Runs one command. argv excludes the program name.
inline Outcome dispatch(const std::vector<std::string>& argv, std::istream& input = std::cin) {
    using detail::quote;
    detail::Report rep;
    int status = ok;
    std::function<void()> action;

    CLI::App app{"Braid group, homology and finite-structure checks", "chaingroup"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    // Shared option storage.
    int n = 0, k = 0, eps = 1, g = 0, m = 0, p = 1, l = 1, d = 0, genus = 0, b = 0;
    long long kk = 0, r = 0, M = 0, mm = 0, dd = 0, s = 0, chi = 0, chiq = 0, bm = 0;
    std::string w1, w2, file, params, type, branch, chiqs, gamma_text, line, chain_file;
    bool dedup = false;
    std::size_t show = 20;

    // Helpers shared by subcommand callbacks; they must outlive app.parse().
    auto chain_for = [&](const SkewLattice& L) {
        if (!chain_file.empty()) return parse_chain(detail::read_input(chain_file, input), L.rank);
        return build_chain(L, k);
    };
    auto add_params = [&](CLI::App* c) {
        c->add_option("--params", params, "\"r M m d s\" on one line");
        c->add_option("--r", r, "number of odd generators");
        c->add_option("--M", M, "order of each generator");
        c->add_option("--m", mm, "order of quotients of generators");
        c->add_option("--d", dd, "d");
        c->add_option("--s", s, "s");
    };
    auto get_params = [&] {
        if (!params.empty()) return parse_ln_params(params);
        return LnParams{r, M, mm, dd, s};
    };
    auto describe = [&](const LnParams& q) {
        return "r=" + std::to_string(q.r) + " M=" + std::to_string(q.M) + " m=" + std::to_string(q.m) +
               " d=" + std::to_string(q.d) + " s=" + std::to_string(q.s);
    };

    // ---------------------------------------------------------------- braid
    auto* braid = app.add_subcommand("braid", "Braid words and identities");
    braid->require_subcommand(1);
    {
        auto* c = braid->add_subcommand("garside", "Positive half twist Delta_n");
        c->add_option("--n", n, "strand count")->required();
        c->callback([&] {
            action = [&] {
                BraidWord w = garside(n);
                rep.line("command=braid-garside n=" + std::to_string(n));
                rep.line("word=" + quote(letters_string(w)) + " length=" + std::to_string(w.size()) +
                         " exponent=" + std::to_string(exponent(w)) + " check=garside-element");
            };
        });
        c = braid->add_subcommand("delta", "Flip element tau_1...tau_{n-1}");
        c->add_option("--n", n, "strand count")->required();
        c->callback([&] {
            action = [&] {
                BraidWord w = flip_delta(n);
                rep.line("command=braid-delta n=" + std::to_string(n));
                rep.line("word=" + quote(letters_string(w)) + " exponent=" + std::to_string(exponent(w)) +
                         " check=flip-element");
            };
        });
        c = braid->add_subcommand("gen", "Extended generator tau_k, index read mod n");
        c->add_option("--n", n, "strand count")->required();
        c->add_option("--k", kk, "index")->required();
        c->callback([&] {
            action = [&] {
                BraidWord w = generator(n, kk);
                rep.line("command=braid-gen n=" + std::to_string(n) + " k=" + std::to_string(kk));
                rep.line("word=" + quote(letters_string(w)) + " check=extended-generator");
            };
        });
        c = braid->add_subcommand("eq", "Decide equality of two braid words");
        c->add_option("--n", n, "strand count")->required();
        c->add_option("u", w1, "first word")->required();
        c->add_option("v", w2, "second word")->required();
        c->callback([&] {
            action = [&] {
                BraidWord u = parse_braid_word(n, w1), v = parse_braid_word(n, w2);
                bool eq = are_equal(u, v);
                rep.line("command=braid-eq n=" + std::to_string(n) + " u=" + quote(w1) + " v=" + quote(w2));
                rep.line(std::string(eq ? "equal" : "not-equal") + " check=artin-free-group-action");
                status = eq ? ok : check_failed;
            };
        });
        c = braid->add_subcommand("central", "Is the word central in B_n");
        c->add_option("--n", n, "strand count")->required();
        c->add_option("w", w1, "word")->required();
        c->callback([&] {
            action = [&] {
                bool cen = is_central(parse_braid_word(n, w1));
                rep.line("command=braid-central n=" + std::to_string(n) + " w=" + quote(w1));
                rep.line(std::string(cen ? "central" : "not-central") + " check=center-generated-by-full-twist");
                status = cen ? ok : check_failed;
            };
        });
        c = braid->add_subcommand("exp", "Exponent sum");
        c->add_option("--n", n, "strand count")->required();
        c->add_option("w", w1, "word")->required();
        c->callback([&] {
            action = [&] {
                BraidWord w = parse_braid_word(n, w1);
                rep.line("command=braid-exp n=" + std::to_string(n) + " w=" + quote(w1));
                rep.line("exponent=" + std::to_string(exponent(w)) + " check=abelianization");
            };
        });
    }

    // ---------------------------------------------------------------- hom
    auto* hom = app.add_subcommand("hom", "Braid homomorphisms");
    hom->require_subcommand(1);
    {
        auto* c = hom->add_subcommand("verify", "Check the braid relations on generator images");
        c->add_option("file", file, "hom file, - for stdin")->required();
        c->callback([&] {
            action = [&] {
                BraidHom h = parse_hom(detail::read_input(file, input));
                bool okay = verify(h);
                rep.line("command=hom-verify n=" + std::to_string(h.n) + " m=" + std::to_string(h.m));
                rep.line(std::string(okay ? "homomorphism" : "not-homomorphism") + " check=braid-relations");
                status = okay ? ok : check_failed;
            };
        });
        c = hom->add_subcommand("theorem4", "Endomorphism tau_i -> gamma tau_i^eps gamma^-1 Delta^2k");
        c->add_option("--n", n, "strand count (>= 6)")->required();
        c->add_option("--gamma", gamma_text, "conjugating word")->default_str("");
        c->add_option("--eps", eps, "+1 or -1")->default_val(1);
        c->add_option("--k", kk, "power of the full twist")->default_val(0);
        c->callback([&] {
            action = [&] {
                BraidHom h = theorem4_endo(n, parse_braid_word(n, gamma_text), eps, kk);
                rep.line("command=hom-theorem4 n=" + std::to_string(n) + " gamma=" + quote(gamma_text) +
                         " eps=" + std::to_string(eps) + " k=" + std::to_string(kk));
                rep.block(to_string(h));
                rep.line("homomorphism cyclic=" + detail::yesno(cyclic_test(h)) + " check=twisted-conjugation-family");
            };
        });
        c = hom->add_subcommand("cable", "Cabling map B_3 -> B_3k");
        c->add_option("--k", k, "cable width")->required();
        c->callback([&] {
            action = [&] {
                auto [h, choice] = cabling_search(k);
                BraidWord img = h(garside(3));
                bool delta = are_equal(img, garside(3 * k));
                rep.line("command=hom-cable k=" + std::to_string(k));
                rep.block(to_string(h));
                rep.line("twists=" + std::to_string(choice.twist[0]) + "," + std::to_string(choice.twist[1]) + "," +
                         std::to_string(choice.twist[2]) + " twist_first=" + detail::yesno(choice.twist_first));
                rep.line("homomorphism=" + detail::yesno(verify(h)) + " delta_image=" + detail::yesno(delta) +
                         " exponent=" + std::to_string(exponent(img)) + " check=cabling-half-twist");
                status = delta ? ok : check_failed;
            };
        });
        c = hom->add_subcommand("cyclic", "Are all generator images equal");
        c->add_option("file", file, "hom file, - for stdin")->required();
        c->callback([&] {
            action = [&] {
                BraidHom h = parse_hom(detail::read_input(file, input));
                bool cyc = cyclic_test(h);
                rep.line("command=hom-cyclic n=" + std::to_string(h.n) + " m=" + std::to_string(h.m));
                rep.line(std::string(cyc ? "cyclic" : "noncyclic") + " check=cyclic-homomorphism");
                status = cyc ? ok : check_failed;
            };
        });
    }

    // ---------------------------------------------------------------- homology
    auto* homo = app.add_subcommand("homology", "Homology of closed surfaces and transvections");
    homo->require_subcommand(1);
    {
        auto* c = homo->add_subcommand("chain", "Standard chain of k curves in genus g");
        c->add_option("--g", g, "genus")->required();
        c->add_option("--k", k, "chain length")->required();
        c->callback([&] {
            action = [&] {
                auto L = standard_lattice(g);
                auto ch = build_chain(L, k);
                rep.line("command=homology-chain g=" + std::to_string(g) + " k=" + std::to_string(k));
                rep.block(chain_to_string(ch));
                rep.line("valid=" + detail::yesno(is_valid_chain(L, ch)) + " check=chain-existence");
            };
        });
        c = homo->add_subcommand("rep", "Monodromy matrices of a chain");
        c->add_option("--g", g, "genus")->required();
        c->add_option("--k", k, "chain length");
        c->add_option("--chain", chain_file, "chain file instead of the standard chain");
        c->add_option("--eps", eps, "+1 or -1")->default_val(1);
        c->callback([&] {
            action = [&] {
                auto L = standard_lattice(g);
                auto mats = monodromy_rep(L, chain_for(L), eps);
                rep.line("command=homology-rep g=" + std::to_string(g) + " eps=" + std::to_string(eps));
                for (const auto& x : mats) rep.block(to_string(x));
                bool rel = satisfies_braid_relations(mats);
                rep.line("relations=" + detail::yesno(rel) + " check=twist-braid-relations");
                status = rel ? ok : check_failed;
            };
        });
        c = homo->add_subcommand("square", "Squared chain product");
        c->add_option("--g", g, "genus")->required();
        c->add_option("--k", k, "chain length");
        c->add_option("--chain", chain_file, "chain file instead of the standard chain");
        c->callback([&] {
            action = [&] {
                auto L = standard_lattice(g);
                auto ch = chain_for(L);
                Matrix sq = chain_product_square(L, ch);
                bool shape = true;
                for (const auto& cc : ch) {
                    IntVector want = cc;
                    if (ch.size() % 2 == 0)
                        for (auto& x : want) x = -x;
                    shape = shape && sq * cc == want;
                }
                rep.line("command=homology-square g=" + std::to_string(g) + " k=" + std::to_string(ch.size()));
                rep.block(to_string(sq));
                rep.line(std::string(ch.size() % 2 == 0 ? "minus-identity-on-chain=" : "fixes-chain=") +
                         detail::yesno(shape) + " check=chain-relation");
                status = shape ? ok : check_failed;
            };
        });
        c = homo->add_subcommand("extract", "Recover chain, sign and direction from matrices");
        c->add_option("--g", g, "genus")->required();
        c->add_option("file", file, "matrix blocks, - for stdin")->required();
        c->callback([&] {
            action = [&] {
                auto L = standard_lattice(g);
                auto ms = parse_matrices(detail::read_input(file, input));
                auto res = extract_triple(L, ms);
                rep.line("command=homology-extract g=" + std::to_string(g) + " matrices=" + std::to_string(ms.size()));
                if (const auto* t = std::get_if<TransvectionTriple>(&res)) {
                    rep.block(detail::triple_text(*t));
                    rep.line("result=triple check=characteristic-triple");
                } else if (std::holds_alternative<CyclicVerdict>(res)) {
                    rep.line("result=cyclic check=characteristic-triple");
                } else {
                    rep.line("result=not-recognized reason=" + quote(std::get<NotRecognized>(res).reason) +
                             " check=characteristic-triple");
                    status = check_failed;
                }
            };
        });
        c = homo->add_subcommand("lift", "Fold central braid defects into lifted generators");
        c->add_option("file", file, "matrix + twist blocks, - for stdin")->required();
        c->callback([&] {
            action = [&] {
                auto lifts = detail::parse_lifts(detail::read_input(file, input));
                auto out = lift_adjust(lifts);
                rep.line("command=homology-lift generators=" + std::to_string(lifts.size()));
                for (std::size_t i = 0; i < out.size(); ++i) {
                    std::string t;
                    for (std::size_t j = 0; j < out[i].twist.size(); ++j)
                        t += (j ? "," : "") + std::to_string(out[i].twist[j]);
                    rep.line("generator=" + std::to_string(i + 1) + " twist=" + t);
                }
                bool exact = satisfies_braid_relations(out);
                rep.line("relations=" + detail::yesno(exact) + " check=central-lift-adjustment");
                status = exact ? ok : check_failed;
            };
        });
    }

    // ---------------------------------------------------------------- ln
    auto* ln = app.add_subcommand("ln", "Abelian quotients L(M,m,d,s)");
    ln->require_subcommand(1);
    {
        auto* c = ln->add_subcommand("validate", "Check the divisibility conditions");
        add_params(c);
        c->callback([&] {
            action = [&] {
                LnParams q = get_params();
                bool v = validate_params(q);
                rep.line("command=ln-validate " + describe(q));
                rep.line(std::string(v ? "valid" : "invalid") + " check=quotient-parameter-divisibility");
                status = v ? ok : check_failed;
            };
        });
        c = ln->add_subcommand("card", "Order and invariant factors via Smith normal form");
        add_params(c);
        c->callback([&] {
            action = [&] {
                LnParams q = get_params();
                rep.line("command=ln-card " + describe(q));
                if (!validate_params(q)) {
                    rep.line("invalid check=quotient-parameter-divisibility");
                    status = check_failed;
                    return;
                }
                auto inv = ln_group(q);
                std::string f;
                for (std::size_t i = 0; i < inv.factors.size(); ++i) f += (i ? "," : "") + inv.factors[i].str();
                auto card = inv.cardinality();
                rep.line(card ? card->str() : std::string("infinite"));
                std::string trailer = "factors=" + f + " free_rank=" + std::to_string(inv.free_rank);
                if (q.M > 0 && q.m > 0) trailer += " formula=" + ln_formula_cardinality(q).str();
                rep.line(trailer + " check=quotient-order");
            };
        });
        c = ln->add_subcommand("table", "Centralizer-subgroup order d p^(r-2) for M = m = p");
        c->add_option("--r", r, "r")->required();
        c->add_option("--p", kk, "p")->required();
        c->add_option("--d", dd, "d")->required();
        c->callback([&] {
            action = [&] {
                auto e = centralizer_order(r, kk, dd);
                rep.line("command=ln-table r=" + std::to_string(r) + " p=" + std::to_string(kk) + " d=" + std::to_string(dd));
                rep.line((e ? e->str() : std::string("none")) + " check=centralizer-order-table");
                status = e ? ok : check_failed;
            };
        });
        c = ln->add_subcommand("snf", "Invariant factors of Z^cols / row lattice");
        c->add_option("file", file, "\"rows=R cols=C\" then entries, - for stdin")->required();
        c->callback([&] {
            action = [&] {
                Matrix a = parse_int_matrix(detail::read_input(file, input));
                auto inv = smith_normal_form(a);
                std::string f;
                for (std::size_t i = 0; i < inv.factors.size(); ++i) f += (i ? "," : "") + inv.factors[i].str();
                rep.line("command=ln-snf rows=" + std::to_string(a.rows()) + " cols=" + std::to_string(a.cols()));
                rep.line("factors=" + f + " free_rank=" + std::to_string(inv.free_rank) + " check=smith-normal-form");
            };
        });
    }

    // ---------------------------------------------------------------- perm
    auto* perm = app.add_subcommand("perm", "Permutation representations of B_n");
    perm->require_subcommand(1);
    {
        auto* c = perm->add_subcommand("enum", "Enumerate actions of B_n on k points");
        c->add_option("--n", n, "strand count")->required();
        c->add_option("--k", k, "symbol count")->required();
        c->add_flag("--dedup", dedup, "one representative per simultaneous conjugacy class");
        c->add_option("--show", show, "tuples to print")->default_val(20);
        c->callback([&] {
            action = [&] {
                auto reps = enum_perm_reps(n, k, dedup, detail::budget_from_env());
                std::size_t cyc = std::count_if(reps.begin(), reps.end(), [](const PermRep& x) { return x.cyclic; });
                rep.line("command=perm-enum n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " dedup=" + detail::yesno(dedup));
                for (std::size_t i = 0; i < reps.size() && i < show; ++i) {
                    std::string t;
                    for (const auto& x : reps[i].images) t += " " + perm_to_string(x);
                    rep.line(std::string(reps[i].cyclic ? "cyclic   " : "noncyclic") + t);
                }
                rep.line("count=" + std::to_string(reps.size()) + " cyclic=" + std::to_string(cyc) +
                         " noncyclic=" + std::to_string(reps.size() - cyc) + " check=small-actions-are-cyclic");
            };
        });
    }

    // ---------------------------------------------------------------- graph
    auto* graph = app.add_subcommand("graph", "Graphs with an edge-transitive cyclic action");
    graph->require_subcommand(1);
    {
        auto* c = graph->add_subcommand("classify", "Classify a graph with action");
        c->add_option("file", file, "graph file, - for stdin")->required();
        c->callback([&] {
            action = [&] {
                ActionGraph gr = parse_graph(detail::read_input(file, input));
                GraphClass cl = classify(gr);
                rep.line("command=graph-classify vertices=" + std::to_string(gr.vertices) +
                         " edges=" + std::to_string(gr.edge_count()));
                rep.line(to_string(cl) + " m=" + std::to_string(gr.edge_count()) + " check=edge-transitive-classification");
            };
        });
        c = graph->add_subcommand("generate", "Build the template graph of a class");
        c->add_option("--type", type, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
        c->add_option("--k", k, "k")->required();
        c->add_option("--p", p, "step (type A)")->default_val(1);
        c->add_option("--l", l, "second orbit size (type B)")->default_val(1);
        c->add_option("--d", d, "multiplicity")->required();
        c->add_option("--m", m, "edge count")->required();
        c->callback([&] {
            action = [&] {
                GraphClass cl = type == "A" ? GraphClass{TypeA{k, p, d}} : GraphClass{TypeB{k, l, d}};
                ActionGraph gr = generate(cl, m);
                rep.line("command=graph-generate " + to_string(cl) + " m=" + std::to_string(m));
                rep.block(to_text(gr));
                rep.line("check=edge-transitive-template");
            };
        });
        c = graph->add_subcommand("brute", "Exhaustive enumeration for m <= 8");
        c->add_option("--m", m, "edge count")->required();
        c->callback([&] {
            action = [&] {
                auto all = brute_enumerate(m, detail::budget_from_env());
                rep.line("command=graph-brute m=" + std::to_string(m));
                std::set<std::vector<int>> templ;
                for (const auto& cl : all_classes(m)) templ.insert(canonical_form(generate(cl, m)));
                bool same = templ.size() == all.size();
                for (const auto& gr : all) {
                    GraphClass cl = classify(gr);
                    same = same && templ.count(canonical_form(gr));
                    rep.line(to_string(cl) + " vertices=" + std::to_string(gr.vertices));
                }
                rep.line("count=" + std::to_string(all.size()) + " matches_templates=" + detail::yesno(same) +
                         " check=edge-transitive-classification");
                status = same ? ok : check_failed;
            };
        });
        c = graph->add_subcommand("audit", "Curve-count and genus feasibility");
        c->add_option("file", file, "graph file, - for stdin")->required();
        c->add_option("--genus", genus, "surface genus")->required();
        c->add_option("--b", b, "boundary components")->default_val(0);
        c->callback([&] {
            action = [&] {
                ActionGraph gr = parse_graph(detail::read_input(file, input));
                auto a = genus_audit(gr, genus, b);
                rep.line("command=graph-audit genus=" + std::to_string(genus) + " b=" + std::to_string(b));
                rep.line(to_string(a.cls) + " c=" + std::to_string(a.c) + " h=" + std::to_string(a.h));
                std::string eu = a.euler_ok ? " euler_sum=" + std::to_string(a.euler_sum) + " euler_ok=" +
                                                  detail::yesno(*a.euler_ok)
                                            : std::string();
                rep.line("edges_le_2g=" + detail::yesno(a.edge_bound) + " g_ge_c_plus_h=" + detail::yesno(a.cycle_bound) +
                         " equality_case=" + detail::yesno(a.equality_case) + eu);
                rep.line(std::string(a.feasible ? "feasible" : "infeasible") + " check=curve-count-genus-bound");
                status = a.feasible ? ok : check_failed;
            };
        });
    }

    // ---------------------------------------------------------------- rh
    auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz arithmetic and order bounds");
    rh->require_subcommand(1);
    {
        auto* c = rh->add_subcommand("check", "Check one ramification datum");
        c->add_option("--line", line, "\"chi=.. m=.. branch=.. chiq=..\"");
        c->add_option("--chi", chi, "Euler characteristic of the surface");
        c->add_option("--m", bm, "group order");
        c->add_option("--branch", branch, "comma-separated o_i");
        c->add_option("--chiq", chiq, "Euler characteristic of the quotient");
        c->callback([&] {
            action = [&] {
                RamificationData dat;
                if (!line.empty()) {
                    dat = parse_ramification(line);
                } else {
                    dat = RamificationData{chi, bm, detail::parse_list(branch), chiq};
                }
                bool f = rh_check(dat);
                rep.line("command=rh-check " + to_string(dat));
                rep.line(std::string(f ? "feasible" : "infeasible") + " check=riemann-hurwitz");
                status = f ? ok : check_failed;
            };
        });
        c = rh->add_subcommand("enum", "All branch lists solving the equation");
        c->add_option("--chi", chi, "Euler characteristic of the surface")->required();
        c->add_option("--m", bm, "group order")->required();
        c->add_option("--chiq", chiqs, "comma-separated allowed quotient characteristics")->required();
        c->callback([&] {
            action = [&] {
                auto sols = rh_enumerate(chi, bm, detail::parse_list(chiqs));
                rep.line("command=rh-enum chi=" + std::to_string(chi) + " m=" + std::to_string(bm) + " chiq=" + chiqs);
                for (const auto& x : sols) rep.line(to_string(x));
                rep.line("count=" + std::to_string(sols.size()) + " check=riemann-hurwitz");
            };
        });
        c = rh->add_subcommand("bounds", "Order bounds for periodic mapping classes");
        c->add_option("--g", g, "genus")->required();
        c->add_option("--b", b, "boundary components")->default_val(0);
        c->callback([&] {
            action = [&] {
                auto o = order_bounds(g, b);
                rep.line("command=rh-bounds g=" + std::to_string(g) + " b=" + std::to_string(b));
                if (o.finite_subgroup_max) rep.line("finite_subgroup_max=" + o.finite_subgroup_max->str() + " check=hurwitz-bound");
                if (o.cyclic_max) rep.line("cyclic_max=" + o.cyclic_max->str() + " check=cyclic-order-bound");
                if (o.genus1_max) rep.line("genus1_max=" + o.genus1_max->str() + " check=torus-boundary-bound");
                if (g >= 0 && b >= 0) {
                    std::string fb;
                    for (int ord = 2; ord <= 6; ++ord) {
                        Rational v = fixed_bound(g, ord);
                        fb += (ord > 2 ? "," : "") + boost::multiprecision::numerator(v).str() +
                              (boost::multiprecision::denominator(v) == 1 ? "" : "/" + boost::multiprecision::denominator(v).str());
                    }
                    rep.line("fixed_bound_m2_to_m6=" + fb + " check=fixed-point-bound");
                }
            };
        });
        c = rh->add_subcommand("audit5", "Order inequalities against the periodic bound");
        c->add_option("--r", r, "r >= 3")->required();
        c->add_option("--m", bm, "m >= 3")->required();
        c->add_option("--d", dd, "divisor of m, >= 2")->required();
        c->callback([&] {
            action = [&] {
                auto a = section5_audit(r, bm, dd);
                rep.line("command=rh-audit5 r=" + std::to_string(r) + " m=" + std::to_string(bm) + " d=" + std::to_string(dd));
                for (const auto& q : a.inequalities)
                    rep.line("inequality=" + quote(q.name) + " lhs=" + q.lhs.str() + " rhs=" + q.rhs.str() +
                             " holds=" + detail::yesno(q.holds));
                rep.line("centralizer_order=" + a.centralizer_order.str() + " kernel_lower_bound=" +
                         a.kernel_lower_bound.str() + " periodic_bound=" + a.periodic_bound.str() +
                         " kernel_exceeds=" + detail::yesno(a.kernel_exceeds) + " check=pseudo-anosov-order-contradiction");
            };
        });
    }

    // ---------------------------------------------------------------- suite
    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "Run a verification bundle");
    suite->add_option("name", suite_name, "identities, table1, graphs, perm, rh, cabling, endomorphisms, homology, all")
        ->required();
    suite->callback([&] {
        action = [&] {
            const auto& reg = suites::registry();
            bool any = false, all_pass = true;
            for (const auto& [nm, f] : reg) {
                if (suite_name != "all" && suite_name != nm) continue;
                any = true;
                SuiteResult res = f();
                rep.block(detail::suite_text(res));
                all_pass = all_pass && res.pass();
            }
            if (!any) throw Error("unknown-suite", suite_name);
            status = all_pass ? ok : check_failed;
        };
    });

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        return {ok, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {ok, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {usage_error, std::string("error=usage-error detail=") + quote(e.what()) + "\n"};
    }

    try {
        if (!action) return {usage_error, "error=usage-error detail=\"no command\"\n"};
        action();
    } catch (const Error& e) {
        int st = detail::internal_code(e.code()) ? internal_error : usage_error;
        return {st, rep.str() + "error=" + e.code() + " detail=" + quote(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {internal_error, rep.str() + "error=internal-error detail=" + quote(e.what()) + "\n"};
    }
    return {status, rep.str() + "status=" + std::to_string(status) + "\n"};
}

} // namespace chaingroup::cli
