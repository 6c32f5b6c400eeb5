#include "nac/closure.hpp"

#include <algorithm>

namespace nac {

namespace {

std::vector<int> checked_subset(const NASpace& x, std::vector<int> m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (int p : m) {
        if (p < 0 || p >= x.size()) throw error("subset contains a point outside the carrier");
    }
    return m;
}

// Canonical fingerprint of a member's restriction to m; two members agree
// on m x m exactly when their fingerprints coincide.
std::vector<int> restriction_fingerprint(const Partition& e, const std::vector<int>& m) {
    if (m.empty()) return {};
    std::vector<int> raw(m.size());
    for (size_t i = 0; i < m.size(); ++i) raw[i] = e.block_id_of(m[i]);
    Partition canonical = Partition::from_block_ids(raw);
    std::vector<int> ids(m.size());
    for (size_t i = 0; i < m.size(); ++i) ids[i] = canonical.block_id_of(static_cast<int>(i));
    return ids;
}

bool blocks_meet_set(const Partition& e1, const Partition& e2, int x, const std::vector<int>& m) {
    int b1 = e1.block_id_of(x);
    int b2 = e2.block_id_of(x);
    for (int p : m) {
        if (e1.block_id_of(p) == b1 && e2.block_id_of(p) == b2) return true;
    }
    return false;
}

}  // namespace

ClosureReport zeta_closure(const NASpace& x, std::vector<int> m) {
    m = checked_subset(x, m);
    const std::vector<Partition> members = stack_members(x);

    std::vector<std::vector<int>> fp(members.size());
    for (size_t i = 0; i < members.size(); ++i) fp[i] = restriction_fingerprint(members[i], m);

    const int n = x.size();
    std::vector<char> excluded(n, 0);
    std::vector<ExclusionWitness> witnesses;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i; j < members.size(); ++j) {
            if (fp[i] != fp[j]) continue;
            for (int pt = 0; pt < n; ++pt) {
                if (excluded[pt]) continue;
                if (!blocks_meet_set(members[i], members[j], pt, m)) {
                    excluded[pt] = 1;
                    witnesses.push_back(ExclusionWitness{pt, members[i], members[j]});
                }
            }
        }
    }

    ClosureReport report;
    report.input = m;
    for (int pt = 0; pt < n; ++pt) {
        if (!excluded[pt]) report.closure.push_back(pt);
    }
    std::sort(witnesses.begin(), witnesses.end(),
              [](const ExclusionWitness& a, const ExclusionWitness& b) { return a.point < b.point; });
    report.witnesses = std::move(witnesses);
    return report;
}

std::vector<int> regular_closure_oracle(const NASpace& x, std::vector<int> m, int bound) {
    m = checked_subset(x, m);
    const int n = x.size();
    if (n > bound) {
        throw error("regular_closure_oracle: carrier size exceeds oracle bound " +
                    std::to_string(bound));
    }
    const int d = n + 2;

    // All uniformly continuous tables into the discrete space on d points:
    // exactly those whose fiber partition lies in the stack.
    std::vector<std::vector<int>> maps;
    std::vector<int> table(n, 0);
    while (true) {
        if (contains(x, Partition::from_block_ids(table))) maps.push_back(table);
        int i = n - 1;
        while (i >= 0 && table[i] == d - 1) table[i--] = 0;
        if (i < 0) break;
        ++table[i];
    }

    // Group by restriction to m; only pairs inside a group agree on m.
    std::vector<std::vector<int>> keys(maps.size());
    for (size_t k = 0; k < maps.size(); ++k) {
        for (int p : m) keys[k].push_back(maps[k][p]);
    }
    std::vector<size_t> order(maps.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return keys[a] < keys[b]; });

    std::vector<char> in_closure(n, 1);
    int surviving_outside = 0;
    for (int pt = 0; pt < n; ++pt) {
        if (!std::binary_search(m.begin(), m.end(), pt)) ++surviving_outside;
    }

    size_t lo = 0;
    while (lo < order.size() && surviving_outside > 0) {
        size_t hi = lo;
        while (hi < order.size() && keys[order[hi]] == keys[order[lo]]) ++hi;
        for (size_t a = lo; a < hi && surviving_outside > 0; ++a) {
            for (size_t b = a + 1; b < hi && surviving_outside > 0; ++b) {
                const auto& f = maps[order[a]];
                const auto& g = maps[order[b]];
                for (int pt = 0; pt < n; ++pt) {
                    if (in_closure[pt] && f[pt] != g[pt]) {
                        in_closure[pt] = 0;
                        --surviving_outside;
                    }
                }
            }
        }
        lo = hi;
    }

    std::vector<int> out;
    for (int pt = 0; pt < n; ++pt) {
        if (in_closure[pt]) out.push_back(pt);
    }
    return out;
}

bool is_zeta_dense(const NASpace& x, const std::vector<int>& m) {
    return static_cast<int>(zeta_closure(x, m).closure.size()) == x.size();
}

bool is_zeta_closed(const NASpace& x, const std::vector<int>& m) {
    auto report = zeta_closure(x, m);
    return report.closure == report.input;
}

}  // namespace nac
