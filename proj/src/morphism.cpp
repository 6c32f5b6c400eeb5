#include "nac/morphism.hpp"

#include <algorithm>

#include "nac/closure.hpp"

namespace nac {

Partition preimage_partition(const std::vector<int>& table, const Partition& q) {
    if (table.empty()) throw error("preimage_partition: empty domain");
    std::vector<int> ids(table.size());
    for (size_t x = 0; x < table.size(); ++x) {
        if (table[x] < 0 || table[x] >= q.size()) {
            throw error("preimage_partition: carrier mismatch");
        }
        ids[x] = q.block_id_of(table[x]);
    }
    return Partition::from_block_ids(ids);
}

bool is_uniformly_continuous(const std::vector<int>& table, const NASpace& x, const NASpace& y) {
    if (static_cast<int>(table.size()) != x.size()) throw error("uc: map not total on domain");
    for (int v : table) {
        if (v < 0 || v >= y.size()) throw error("uc: map value outside codomain");
    }
    for (const Partition& g : y.generators) {
        if (!contains(x, preimage_partition(table, g))) return false;
    }
    return true;
}

bool is_uniformly_continuous_full(const std::vector<int>& table, const NASpace& x,
                                  const NASpace& y) {
    for (const Partition& m : stack_members(y)) {
        if (!contains(x, preimage_partition(table, m))) return false;
    }
    return true;
}

UCMap UCMap::make(NASpace domain, NASpace codomain, std::vector<int> table) {
    if (static_cast<int>(table.size()) != domain.size()) {
        throw error("map is not total on its domain");
    }
    for (int v : table) {
        if (v < 0 || v >= codomain.size()) throw error("map value outside codomain carrier");
    }
    for (const Partition& g : codomain.generators) {
        if (!contains(domain, preimage_partition(table, g))) {
            throw error("map is not uniformly continuous: preimage of generator '" +
                        format_partition(codomain.carrier, g) + "' is outside the domain stack");
        }
    }
    return UCMap{std::move(domain), std::move(codomain), std::move(table)};
}

std::vector<int> UCMap::image() const {
    std::vector<int> out = table;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool UCMap::is_injective() const {
    return static_cast<int>(image().size()) == domain.size();
}

bool UCMap::is_surjective() const {
    return static_cast<int>(image().size()) == codomain.size();
}

UCMap identity_map(const NASpace& x) {
    std::vector<int> table(x.size());
    for (int i = 0; i < x.size(); ++i) table[i] = i;
    return UCMap::make(x, x, std::move(table));
}

UCMap compose(const UCMap& g, const UCMap& f) {
    if (f.codomain != g.domain) throw error("compose: domain/codomain mismatch");
    std::vector<int> table(f.table.size());
    for (size_t i = 0; i < table.size(); ++i) table[i] = g.table[f.table[i]];
    return UCMap::make(f.domain, g.codomain, std::move(table));
}

bool is_embedding(const UCMap& f) {
    if (!f.is_injective()) return false;
    NASpace initial = initial_structure(f.domain.carrier, {{f.table, f.codomain}});
    return initial.generators == f.domain.generators;
}

bool is_epimorphism(const UCMap& f) {
    if (!is_t0(f.domain) || !is_t0(f.codomain)) {
        throw error("is_epimorphism: requires T0 domain and codomain");
    }
    return is_zeta_dense(f.codomain, f.image());
}

bool is_extremal_mono(const UCMap& f) {
    if (!is_t0(f.domain) || !is_t0(f.codomain)) {
        throw error("is_extremal_mono: requires T0 domain and codomain");
    }
    return is_embedding(f) && is_zeta_closed(f.codomain, f.image());
}

bool is_isomorphism(const UCMap& f) {
    // bijective and initial; the inverse is then uniformly continuous
    return f.is_injective() && f.is_surjective() && is_embedding(f);
}

CogeneratorEmbedding cogenerator_embedding(const NASpace& x) {
    if (!is_t0(x)) throw error("cogenerator_embedding: requires a T0 space");
    std::vector<Partition> members = stack_members(x);

    std::vector<NASpace> factors;
    factors.reserve(members.size());
    for (const Partition& p : members) {
        std::vector<std::string> labels;
        for (const auto& block : p.blocks()) labels.push_back(format_set(x.carrier, block));
        factors.push_back(discrete_space(Carrier(std::move(labels))));
    }
    Product prod = product(factors);

    std::vector<int> table(x.size());
    for (int pt = 0; pt < x.size(); ++pt) {
        int idx = 0;
        for (const Partition& p : members) idx = idx * p.block_count() + p.block_id_of(pt);
        table[pt] = idx;
    }
    UCMap map = UCMap::make(x, prod.space, std::move(table));
    return CogeneratorEmbedding{std::move(members), std::move(prod), std::move(map)};
}

}  // namespace nac
