#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chaingroup/linalg.hpp"

namespace chaingroup {

// Branched cyclic cover data: chi + sum(m - o_i) = m * chi_q.
struct RamificationData {
    long long chi_total = 0;
    long long m = 1;
    std::vector<long long> branch; // o_i, points in the fibre over each branch value
    long long chi_quotient = 0;
    friend bool operator==(const RamificationData&, const RamificationData&) = default;
};

inline void require_branch_datum(long long m, const std::vector<long long>& branch) {
    if (m < 1) throw Error("invalid-branch-datum", "group order must be >= 1");
    for (long long o : branch)
        if (o < 1 || o >= m || m % o != 0)
            throw Error("invalid-branch-datum", "o=" + std::to_string(o) + " is not a proper divisor of m=" + std::to_string(m));
}

inline bool rh_check(const RamificationData& d) {
    require_branch_datum(d.m, d.branch);
    BigInt lhs = d.chi_total;
    for (long long o : d.branch) lhs += d.m - o;
    return lhs == BigInt(d.m) * d.chi_quotient;
}

// All branch lists (o_i ascending) solving the equation for some allowed chi_q.
inline std::vector<RamificationData> rh_enumerate(long long chi_total, long long m,
                                                  const std::vector<long long>& quotient_chis) {
    if (m < 1) throw Error("invalid-argument", "group order must be >= 1");
    std::set<long long> allowed(quotient_chis.begin(), quotient_chis.end());
    std::vector<long long> divisors; // descending, so terms m - o ascend
    for (long long o = m - 1; o >= 1; --o)
        if (m % o == 0) divisors.push_back(o);
    std::vector<RamificationData> out;
    for (long long chiq : allowed) {
        long long rest = m * chiq - chi_total;
        if (rest < 0) continue;
        std::vector<long long> cur;
        // Nondecreasing o keeps each multiset once.
        auto rec = [&](auto&& self, std::size_t from, long long left) -> void {
            if (left == 0) {
                out.push_back(RamificationData{chi_total, m, cur, chiq});
                return;
            }
            for (std::size_t i = from; i-- > 0;) {
                long long o = divisors[i];
                if (m - o > left) continue;
                cur.push_back(o);
                self(self, i + 1, left - (m - o));
                cur.pop_back();
            }
        };
        rec(rec, divisors.size(), rest);
    }
    return out;
}

inline Rational fixed_bound(long long g, long long m) {
    if (m < 2) throw Error("invalid-argument", "order must be >= 2");
    if (g < 0) throw Error("invalid-argument", "negative genus");
    return Rational(2) + Rational(BigInt(2 * g), BigInt(m - 1));
}

struct OrderBounds {
    std::optional<BigInt> finite_subgroup_max;
    std::optional<BigInt> cyclic_max;
    std::optional<BigInt> genus1_max;
};

inline OrderBounds order_bounds(long long g, long long b) {
    if (g < 1 || b < 0) throw Error("out-of-domain", "need g >= 1 and b >= 0");
    OrderBounds r;
    if (g >= 2 && b == 0) r.finite_subgroup_max = BigInt(84) * (g - 1);
    if (b == 0) r.cyclic_max = BigInt(4) * g + 2;
    if (g == 1) {
        // m <= 1 + 2/(b-2) once three or more boundary components are preserved.
        r.genus1_max = b <= 2 ? BigInt(6) : BigInt(1 + 2 / (b - 2));
    }
    if (!r.finite_subgroup_max && !r.cyclic_max && !r.genus1_max)
        throw Error("out-of-domain", "no bound applies to g=" + std::to_string(g) + " b=" + std::to_string(b));
    return r;
}

struct Inequality {
    std::string name;
    BigInt lhs, rhs;
    bool holds = false; // lhs <= rhs
};

struct OrderAudit {
    long long r = 0, m = 0, d = 0;
    std::vector<Inequality> inequalities;
    BigInt centralizer_order;    // d m^{r-2}
    BigInt kernel_lower_bound;   // three times the above
    BigInt periodic_bound;       // 6(2r-2)
    bool kernel_exceeds = false; // kernel_lower_bound > periodic_bound
};

inline OrderAudit section5_audit(long long r, long long m, long long d) {
    if (r < 3 || m < 3 || d < 2 || m % d != 0) throw Error("invalid-argument", "need r >= 3, m >= 3, 2 <= d | m");
    using boost::multiprecision::pow;
    OrderAudit rep{r, m, d, {}, {}, {}, {}, false};
    auto add = [&](std::string name, BigInt lhs, BigInt rhs) {
        rep.inequalities.push_back(Inequality{std::move(name), lhs, rhs, lhs <= rhs});
    };
    add("d*m^(r-1)<=2m+4r", BigInt(d) * pow(BigInt(m), static_cast<unsigned>(r - 1)), BigInt(2 * m + 4 * r));
    add("3^r<=6+4r", pow(BigInt(3), static_cast<unsigned>(r)), BigInt(6 + 4 * r));
    add("2*4^(r-2)<=2+r", 2 * pow(BigInt(4), static_cast<unsigned>(r - 2)), BigInt(2 + r));
    rep.centralizer_order = BigInt(d) * pow(BigInt(m), static_cast<unsigned>(r - 2));
    rep.kernel_lower_bound = 3 * rep.centralizer_order;
    rep.periodic_bound = BigInt(6) * (2 * r - 2);
    rep.kernel_exceeds = rep.kernel_lower_bound > rep.periodic_bound;
    return rep;
}

// Is g >= 1 + 2^g? (Never, for g >= 0.)
inline bool genus_exponential_holds(long long g) {
    if (g < 0) throw Error("invalid-argument", "negative genus");
    return BigInt(g) >= 1 + boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(g));
}

// "chi=<int> m=<int> branch=<o1,o2,...> chiq=<int>"
inline RamificationData parse_ramification(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    RamificationData d;
    bool have[4] = {false, false, false, false};
    auto num = [](const std::string& s) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error("parse-error", "bad integer '" + s + "'");
        }
    };
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error("parse-error", "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "chi") {
            d.chi_total = num(val);
            have[0] = true;
        } else if (key == "m") {
            d.m = num(val);
            have[1] = true;
        } else if (key == "branch") {
            std::istringstream bs(val);
            std::string part;
            while (std::getline(bs, part, ','))
                if (!part.empty()) d.branch.push_back(num(part));
            have[2] = true;
        } else if (key == "chiq") {
            d.chi_quotient = num(val);
            have[3] = true;
        } else {
            throw Error("parse-error", "unknown key '" + key + "'");
        }
    }
    if (!have[0] || !have[1] || !have[3]) throw Error("parse-error", "need chi=, m= and chiq=");
    return d;
}

inline std::string to_string(const RamificationData& d) {
    std::string s = "chi=" + std::to_string(d.chi_total) + " m=" + std::to_string(d.m) + " branch=";
    for (std::size_t i = 0; i < d.branch.size(); ++i) s += (i ? "," : "") + std::to_string(d.branch[i]);
    return s + " chiq=" + std::to_string(d.chi_quotient);
}

} // namespace chaingroup
