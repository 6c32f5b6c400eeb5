#include "nac/space.hpp"

#include <algorithm>

#include "nac/morphism.hpp"

namespace nac {

namespace {

constexpr long long kMaxProductPoints = 250000;

}  // namespace

NASpace make_space(Carrier c, std::vector<Partition> parts) {
    for (const Partition& p : parts) {
        if (p.size() != c.size()) throw error("make_space: partition on wrong carrier");
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::erase_if(parts, [](const Partition& p) { return p.is_one_block(); });
    std::vector<Partition> minimal;
    for (const Partition& p : parts) {
        bool absorbed = false;
        for (const Partition& q : parts) {
            if (q != p && refines(q, p)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) minimal.push_back(p);
    }
    return NASpace{std::move(c), std::move(minimal)};
}

std::vector<Partition> stack_members(const NASpace& x) {
    std::vector<Partition> members{Partition::one_block(x.size())};
    for (const Partition& g : x.generators) {
        auto up = coarsenings(g);
        members.insert(members.end(), up.begin(), up.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool contains(const NASpace& x, const Partition& q) {
    if (q.size() != x.size()) throw error("contains: partition on wrong carrier");
    if (q.is_one_block()) return true;
    for (const Partition& g : x.generators) {
        if (refines(g, q)) return true;
    }
    return false;
}

NASpace discrete_space(Carrier c) {
    int n = c.size();
    return make_space(std::move(c), {Partition::discrete(n)});
}

NASpace indiscrete_space(Carrier c) {
    return make_space(std::move(c), {});
}

bool is_t0(const NASpace& x) {
    Partition acc = Partition::one_block(x.size());
    for (const Partition& g : x.generators) acc = meet(acc, g);
    return acc.is_discrete();
}

NASpace initial_structure(const Carrier& c,
                          const std::vector<std::pair<std::vector<int>, NASpace>>& maps) {
    std::vector<Partition> parts;
    for (const auto& [table, target] : maps) {
        if (static_cast<int>(table.size()) != c.size()) {
            throw error("initial_structure: map not total on the carrier");
        }
        for (int v : table) {
            if (v < 0 || v >= target.size()) throw error("initial_structure: map value outside target");
        }
        for (const Partition& g : target.generators) {
            parts.push_back(preimage_partition(table, g));
        }
    }
    return make_space(c, std::move(parts));
}

NASpace subspace(const NASpace& x, const std::vector<int>& s) {
    if (s.empty()) throw error("subspace: empty subset");
    std::vector<std::string> labels;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= x.size()) throw error("subspace: point outside carrier");
        if (i > 0 && s[i] <= s[i - 1]) throw error("subspace: points must be sorted and distinct");
        labels.push_back(x.carrier.names[s[i]]);
    }
    return initial_structure(Carrier(std::move(labels)), {{s, x}});
}

Product product(const std::vector<NASpace>& factors) {
    long long total = 1;
    for (const NASpace& f : factors) {
        total *= f.size();
        if (total > kMaxProductPoints) throw error("product: carrier size bound exceeded");
    }
    int n = static_cast<int>(total);

    std::vector<std::vector<int>> projections(factors.size(), std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int idx = 0; idx < n; ++idx) {
        int rest = idx;
        // row-major: the last factor varies fastest
        for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
            projections[k][idx] = rest % factors[k].size();
            rest /= factors[k].size();
        }
        std::string label;
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k > 0) label += ',';
            label += factors[k].carrier.names[projections[k][idx]];
        }
        labels[idx] = label;
    }

    Carrier carrier = factors.empty() ? Carrier({"()"}) : Carrier(std::move(labels));
    std::vector<std::pair<std::vector<int>, NASpace>> maps;
    for (size_t k = 0; k < factors.size(); ++k) maps.emplace_back(projections[k], factors[k]);
    return Product{initial_structure(carrier, maps), std::move(projections)};
}

}  // namespace nac
