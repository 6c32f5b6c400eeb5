#include "nac/enumerate.hpp"

#include <algorithm>

#include "nac/morphism.hpp"

namespace nac {

namespace {

constexpr int kMaxExhaustiveCarrier = 4;
constexpr long long kMaxFunctionCount = 1 << 21;

}  // namespace

void InstanceBudget::validate() const {
    if (max_carrier < 1) throw error("budget: max carrier must be positive");
    if (exhaustive_to < 1 || exhaustive_to > max_carrier) {
        throw error("budget: exhaustive bound must lie between 1 and the max carrier size");
    }
    if (sample_count < 0) throw error("budget: sample count must be nonnegative");
}

std::vector<NASpace> all_spaces(int n, bool t0_only) {
    if (n < 1) throw error("all_spaces: carrier must be nonempty");
    if (n > kMaxExhaustiveCarrier) {
        throw error("all_spaces: carrier size exceeds the exhaustive bound " +
                    std::to_string(kMaxExhaustiveCarrier));
    }
    Carrier carrier = Carrier::indexed(n);
    std::vector<Partition> candidates;
    for (const Partition& p : all_partitions(n)) {
        if (!p.is_one_block()) candidates.push_back(p);
    }

    std::vector<NASpace> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, size_t start) -> void {
        NASpace space{carrier, current};
        if (!t0_only || is_t0(space)) out.push_back(space);
        for (size_t i = start; i < candidates.size(); ++i) {
            bool comparable = false;
            for (const Partition& q : current) {
                if (refines(candidates[i], q) || refines(q, candidates[i])) {
                    comparable = true;
                    break;
                }
            }
            if (!comparable) {
                current.push_back(candidates[i]);
                self(self, i + 1);
                current.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> all_functions(const NASpace& x, const NASpace& y, bool uc_only) {
    long long count = 1;
    for (int i = 0; i < x.size(); ++i) {
        count *= y.size();
        if (count > kMaxFunctionCount) throw error("all_functions: table count exceeds budget");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> table(x.size(), 0);
    while (true) {
        if (!uc_only || is_uniformly_continuous(table, x, y)) out.push_back(table);
        int i = x.size() - 1;
        while (i >= 0 && table[i] == y.size() - 1) table[i--] = 0;
        if (i < 0) break;
        ++table[i];
    }
    return out;
}

std::vector<NASpace> sample_spaces(int n, const InstanceBudget& budget) {
    budget.validate();
    if (n < 1) throw error("sample_spaces: carrier must be nonempty");
    Carrier carrier = Carrier::indexed(n);
    const std::vector<Partition> parts = all_partitions(n);

    Lcg rng(budget.seed ^ (static_cast<uint64_t>(n) * 0x9E3779B97F4A7C15ULL));
    std::vector<NASpace> out;
    out.reserve(budget.sample_count);
    for (int k = 0; k < budget.sample_count; ++k) {
        int picks = 1 + static_cast<int>(rng.below(3));
        std::vector<Partition> chosen;
        for (int i = 0; i < picks; ++i) {
            chosen.push_back(parts[rng.below(static_cast<uint32_t>(parts.size()))]);
        }
        out.push_back(make_space(carrier, std::move(chosen)));
    }
    return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
    if (n < 0 || n > 30) throw error("all_subsets: size out of range");
    std::vector<std::vector<int>> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int pt = 0; pt < n; ++pt) {
            if (mask & (1u << pt)) s.push_back(pt);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace nac
