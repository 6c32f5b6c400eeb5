#include "nac/completion.hpp"

#include <algorithm>

#include "nac/closure.hpp"
#include "nac/enumerate.hpp"

namespace nac {

namespace {

// join_class[i][j][b] = block id of join(gen i, gen j) containing block b
// of gen i, for i < j.
struct JoinTables {
    std::vector<std::vector<std::vector<int>>> into_join_from_first;
    std::vector<std::vector<std::vector<int>>> into_join_from_second;

    explicit JoinTables(const NASpace& x) {
        const auto& gens = x.generators;
        size_t k = gens.size();
        into_join_from_first.assign(k, std::vector<std::vector<int>>(k));
        into_join_from_second.assign(k, std::vector<std::vector<int>>(k));
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = i + 1; j < k; ++j) {
                Partition jn = join(gens[i], gens[j]);
                auto& a = into_join_from_first[i][j];
                auto& b = into_join_from_second[i][j];
                a.resize(gens[i].block_count());
                b.resize(gens[j].block_count());
                for (int bl = 0; bl < gens[i].block_count(); ++bl) {
                    a[bl] = jn.block_id_of(gens[i].block_min(bl));
                }
                for (int bl = 0; bl < gens[j].block_count(); ++bl) {
                    b[bl] = jn.block_id_of(gens[j].block_min(bl));
                }
            }
        }
    }

    bool consistent(size_t i, size_t j, int bi, int bj) const {
        return into_join_from_first[i][j][bi] == into_join_from_second[i][j][bj];
    }
};

ChoiceFunction point_choice(const NASpace& x, int pt) {
    ChoiceFunction f;
    f.chosen.reserve(x.generators.size());
    for (const Partition& g : x.generators) f.chosen.push_back(g.block_id_of(pt));
    return f;
}

std::string fresh_label(const std::vector<std::string>& taken, int k) {
    std::string candidate = "w" + std::to_string(k);
    while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += '_';
    return candidate;
}

}  // namespace

std::vector<ChoiceFunction> enumerate_choice_functions(const NASpace& x) {
    const auto& gens = x.generators;
    std::vector<ChoiceFunction> out;
    if (gens.empty()) {
        out.push_back(ChoiceFunction{});
        return out;
    }
    JoinTables joins(x);
    std::vector<int> chosen(gens.size(), 0);
    // depth-first in block-index order yields lexicographic output
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == gens.size()) {
            out.push_back(ChoiceFunction{chosen});
            return;
        }
        for (int b = 0; b < gens[i].block_count(); ++b) {
            bool ok = true;
            for (size_t j = 0; j < i; ++j) {
                if (!joins.consistent(j, i, chosen[j], b)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[i] = b;
                self(self, i + 1);
            }
        }
    };
    rec(rec, 0);
    return out;
}

int value_block_id(const NASpace& x, const ChoiceFunction& f, const Partition& q) {
    if (f.chosen.size() != x.generators.size()) {
        throw error("choice function does not match the space's generators");
    }
    for (size_t i = 0; i < x.generators.size(); ++i) {
        if (refines(x.generators[i], q)) {
            return q.block_id_of(x.generators[i].block_min(f.chosen[i]));
        }
    }
    if (q.is_one_block()) return 0;
    throw error("partition is not a stack member");
}

std::vector<int> limit_points(const NASpace& x, const ChoiceFunction& f) {
    if (f.chosen.size() != x.generators.size()) {
        throw error("choice function does not match the space's generators");
    }
    std::vector<int> out;
    for (int pt = 0; pt < x.size(); ++pt) {
        bool inside = true;
        for (size_t i = 0; i < x.generators.size(); ++i) {
            if (x.generators[i].block_id_of(pt) != f.chosen[i]) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(pt);
    }
    return out;
}

std::optional<int> limit(const NASpace& x, const ChoiceFunction& f) {
    auto pts = limit_points(x, f);
    if (pts.size() == 1) return pts.front();
    return std::nullopt;
}

CompletenessReport completeness(const NASpace& x) {
    if (!is_t0(x)) throw error("completeness: requires a T0 space");
    for (const ChoiceFunction& f : enumerate_choice_functions(x)) {
        if (limit_points(x, f).empty()) return CompletenessReport{false, f};
    }
    return CompletenessReport{true, std::nullopt};
}

bool is_complete(const NASpace& x) { return completeness(x).complete; }

CompletionResult complete(const NASpace& x) {
    if (!is_t0(x)) throw error("complete: requires a T0 space");
    std::vector<ChoiceFunction> fns = enumerate_choice_functions(x);

    // carrier order: images of j first (in carrier order), then the new
    // points in lexicographic assignment order
    std::vector<ChoiceFunction> ordered;
    ordered.reserve(fns.size());
    std::vector<std::string> labels;
    for (int pt = 0; pt < x.size(); ++pt) {
        ordered.push_back(point_choice(x, pt));
        labels.push_back(x.carrier.names[pt]);
    }
    std::vector<int> new_points;
    for (const ChoiceFunction& f : fns) {
        if (limit_points(x, f).empty()) {
            new_points.push_back(static_cast<int>(ordered.size()));
            labels.push_back(fresh_label(labels, static_cast<int>(ordered.size()) - x.size()));
            ordered.push_back(f);
        }
    }
    if (ordered.size() != fns.size()) {
        throw error("complete: converging choice functions do not match carrier points");
    }

    // one partition per generator, grouping by the value at that generator
    std::vector<Partition> hats;
    for (size_t i = 0; i < x.generators.size(); ++i) {
        std::vector<int> ids(ordered.size());
        for (size_t h = 0; h < ordered.size(); ++h) ids[h] = ordered[h].chosen[i];
        hats.push_back(Partition::from_block_ids(ids));
    }
    NASpace hat = make_space(Carrier(labels), hats);

    std::vector<int> j_table(x.size());
    for (int pt = 0; pt < x.size(); ++pt) j_table[pt] = pt;
    UCMap j = UCMap::make(x, hat, std::move(j_table));

    if (!is_t0(hat)) throw error("complete: completion failed the separation check");
    if (!completeness(hat).complete) throw error("complete: completion is not complete");
    if (!is_embedding(j)) throw error("complete: canonical map is not an embedding");
    if (!is_zeta_dense(hat, j.image())) throw error("complete: image is not dense");

    return CompletionResult{std::move(hat), std::move(j), std::move(ordered),
                            std::move(new_points)};
}

std::vector<int> order_compatible_points(const CogeneratorEmbedding& e) {
    const auto& members = e.factors;
    const size_t k = members.size();

    // containment[i][j][b] = block of member j containing block b of
    // member i, when member i refines member j; empty otherwise
    std::vector<std::vector<std::vector<int>>> containment(k, std::vector<std::vector<int>>(k));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j || !refines(members[i], members[j])) continue;
            auto& tbl = containment[i][j];
            tbl.resize(members[i].block_count());
            for (int b = 0; b < members[i].block_count(); ++b) {
                tbl[b] = members[j].block_id_of(members[i].block_min(b));
            }
        }
    }

    std::vector<int> out;
    const int total = e.prod.space.size();
    for (int idx = 0; idx < total; ++idx) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
            for (size_t j = 0; j < k; ++j) {
                if (containment[i][j].empty()) continue;
                int bi = e.prod.projections[i][idx];
                int bj = e.prod.projections[j][idx];
                if (containment[i][j][bi] != bj) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(idx);
    }
    return out;
}

std::vector<int> order_compatible_points(const NASpace& x) {
    return order_compatible_points(cogenerator_embedding(x));
}

UCMap extend_map(const UCMap& u, const CompletionResult& domain_hat) {
    const NASpace& y = u.codomain;
    if (!completeness(y).complete) throw error("extend_map: codomain is not complete");

    std::vector<int> table(domain_hat.hat_space.size());
    for (size_t h = 0; h < domain_hat.points.size(); ++h) {
        const ChoiceFunction& f = domain_hat.points[h];
        ChoiceFunction pushed;
        pushed.chosen.reserve(y.generators.size());
        for (const Partition& p : y.generators) {
            Partition pre = preimage_partition(u.table, p);
            int block = value_block_id(u.domain, f, pre);
            pushed.chosen.push_back(p.block_id_of(u.table[pre.block_min(block)]));
        }
        auto lim = limit(y, pushed);
        if (!lim) throw error("extend_map: pushed-forward choice function has no limit");
        table[h] = *lim;
    }
    return UCMap::make(domain_hat.hat_space, y, std::move(table));
}

UCMap extend_map(const UCMap& u) { return extend_map(u, complete(u.domain)); }

InjectivityReport is_injective_within(const NASpace& x, int bound) {
    if (!is_t0(x)) throw error("is_injective_within: requires a T0 space");
    for (int a = 1; a <= bound; ++a) {
        for (const NASpace& dom : all_spaces(a, true)) {
            for (int b = a; b <= bound + 1; ++b) {
                for (const NASpace& cod : all_spaces(b, true)) {
                    for (const auto& vt : all_functions(dom, cod, true)) {
                        UCMap v = UCMap::make(dom, cod, vt);
                        if (!is_embedding(v) || !is_zeta_dense(cod, v.image())) continue;
                        for (const auto& ft : all_functions(dom, x, true)) {
                            UCMap f = UCMap::make(dom, x, ft);
                            bool extendable = false;
                            for (const auto& et : all_functions(cod, x, true)) {
                                bool matches = true;
                                for (int pt = 0; pt < dom.size(); ++pt) {
                                    if (et[vt[pt]] != ft[pt]) {
                                        matches = false;
                                        break;
                                    }
                                }
                                if (matches) {
                                    extendable = true;
                                    break;
                                }
                            }
                            if (!extendable) return InjectivityReport{false, v, f};
                        }
                    }
                }
            }
        }
    }
    return InjectivityReport{};
}

UCMap induced_completion_map(const UCMap& v, const CompletionResult& domain_hat,
                             const CompletionResult& codomain_hat) {
    return extend_map(compose(codomain_hat.j, v), domain_hat);
}

UCMap induced_completion_map(const UCMap& v) {
    return induced_completion_map(v, complete(v.domain), complete(v.codomain));
}

}  // namespace nac
