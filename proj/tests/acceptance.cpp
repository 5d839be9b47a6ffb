// One PASS/FAIL line per acceptance criterion. Each criterion is a suite bundle
// plus a wall-clock limit; exceeding the limit counts as a failure.
#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "chaingroup/suites.hpp"

namespace {

struct Criterion {
    int id;
    const char* suite;
    const char* summary;
    double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "identities", "braid identities for n in 3..8", 5},
    {2, "cabling", "cabling maps for k in 1..3 send Delta_3 to Delta_3k", 30},
    {3, "endomorphisms", "20 random twisted conjugations on B_6 are noncyclic homomorphisms", 60},
    {4, "table1", "centralizer orders 9..125 and 50 random SNF cardinalities", 5},
    {5, "perm", "small permutation actions are cyclic, (6,6) is not", 300},
    {6, "graphs", "graph classification against brute force for m <= 8", 120},
    {7, "homology", "chain monodromy relations, squares and triple extraction", 30},
    {8, "rh", "Riemann-Hurwitz and order-bound arithmetic", 1},
};

} // namespace

int main() {
    const auto& reg = chaingroup::suites::registry();
    int failed = 0;
    for (const auto& c : kCriteria) {
        auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& kv) { return kv.first == c.suite; });
        if (it == reg.end()) {
            std::printf("[FAIL] criterion %d: %s (suite %s missing)\n", c.id, c.summary, c.suite);
            ++failed;
            continue;
        }
        chaingroup::SuiteResult r = it->second();
        bool in_time = r.seconds <= c.limit_seconds;
        bool ok = r.pass() && in_time;
        std::printf("[%s] criterion %d: %s (%zu items, %.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.summary,
                    r.items.size(), r.seconds, c.limit_seconds);
        if (!ok) {
            ++failed;
            for (const auto& item : r.items)
                if (!item.pass) std::printf("       failed: %s %s\n", item.label.c_str(), item.detail.c_str());
            if (!in_time) std::printf("       over the time limit\n");
        }
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
    return failed == 0 ? 0 : 1;
}
