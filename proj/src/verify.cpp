#include "nac/verify.hpp"

#include <algorithm>
#include <ostream>

#include "nac/closure.hpp"
#include "nac/completion.hpp"
#include "nac/format.hpp"
#include "nac/uniform.hpp"

namespace nac {

namespace {

std::string space_counterexample(const NASpace& space, const std::string& note) {
    Document doc;
    doc.spaces.push_back(Document::SpaceDecl{"X", space});
    return "# " + note + "\n" + emit(doc);
}

std::string map_counterexample(const UCMap& map, const std::string& note) {
    Document doc;
    doc.spaces.push_back(Document::SpaceDecl{"A", map.domain});
    doc.spaces.push_back(Document::SpaceDecl{"B", map.codomain});
    doc.maps.push_back(Document::MapDecl{"f", "A", "B", map});
    return "# " + note + "\n" + emit(doc);
}

void fail(SuiteResult& result, const std::string& note, const std::string& counterexample) {
    if (result.passed) {
        result.passed = false;
        result.note = note;
        result.counterexample = counterexample;
    }
}

std::vector<NASpace> spaces_up_to(int n, bool t0_only) {
    std::vector<NASpace> out;
    for (int k = 1; k <= n; ++k) {
        auto spaces = all_spaces(k, t0_only);
        out.insert(out.end(), spaces.begin(), spaces.end());
    }
    return out;
}

std::vector<NASpace> sampled_spaces(const InstanceBudget& budget, bool t0_only) {
    std::vector<NASpace> out;
    for (const NASpace& x : sample_spaces(budget.max_carrier, budget)) {
        if (!t0_only || is_t0(x)) out.push_back(x);
    }
    return out;
}

std::vector<int> image_of(const std::vector<int>& table, const std::vector<int>& set) {
    std::vector<int> out;
    for (int p : set) out.push_back(table[p]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// The TRI fixture: three points with the two incomparable splits.
NASpace tri_fixture() {
    Carrier c = Carrier::indexed(3);
    return make_space(c, {Partition::from_blocks(3, {{0}, {1, 2}}),
                          Partition::from_blocks(3, {{0, 1}, {2}})});
}

void check_zeta_equals_oracle(SuiteResult& result, const NASpace& x) {
    for (const auto& m : all_subsets(x.size())) {
        ++result.instances;
        auto zc = zeta_closure(x, m).closure;
        auto oracle = regular_closure_oracle(x, m);
        if (zc != oracle) {
            fail(result, "zeta and regular closure disagree on " + format_set(x.carrier, m),
                 space_counterexample(x, "zeta_closure != regular_closure on set " +
                                             format_set(x.carrier, m)));
            return;
        }
    }
}

SuiteResult closure_oracle_exhaustive(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "closure-oracle-exhaustive";
    for (const NASpace& x : spaces_up_to(budget.exhaustive_to, false)) {
        check_zeta_equals_oracle(result, x);
        if (!result.passed) return result;
    }
    return result;
}

SuiteResult closure_oracle_sampled(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "closure-oracle-sampled";
    for (const NASpace& x : sample_spaces(budget.max_carrier, budget)) {
        check_zeta_equals_oracle(result, x);
        if (!result.passed) return result;
    }
    return result;
}

void check_completion(SuiteResult& result, const NASpace& x) {
    ++result.instances;
    CompletionResult c = complete(x);  // verifies its own invariants eagerly
    if (!is_t0(c.hat_space)) {
        fail(result, "completion not T0", space_counterexample(x, "completion not T0"));
        return;
    }
    if (!completeness(c.hat_space).complete) {
        fail(result, "completion not complete", space_counterexample(x, "completion not complete"));
        return;
    }
    if (!is_embedding(c.j)) {
        fail(result, "canonical map not an embedding",
             space_counterexample(x, "canonical map not an embedding"));
        return;
    }
    if (!is_zeta_dense(c.hat_space, c.j.image())) {
        fail(result, "image not dense", space_counterexample(x, "image not dense in completion"));
        return;
    }
    if (completeness(x).complete && !is_isomorphism(c.j)) {
        fail(result, "complete space with non-iso canonical map",
             space_counterexample(x, "space is complete but canonical map is not an isomorphism"));
    }
}

SuiteResult completion_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "completion";
    for (const NASpace& x : spaces_up_to(budget.exhaustive_to, true)) {
        check_completion(result, x);
        if (!result.passed) return result;
    }
    for (const NASpace& x : sampled_spaces(budget, true)) {
        check_completion(result, x);
        if (!result.passed) return result;
    }

    // fixture: the completion of TRI has one new point, the selection
    // ({0}, {2}), and the extension of 0,1,2 -> 0,1,1 sends it to 0
    NASpace tri = tri_fixture();
    CompletionResult hat = complete(tri);
    if (hat.hat_space.size() != 4 || hat.new_points != std::vector<int>{3} ||
        hat.points[3].chosen != std::vector<int>{0, 1}) {
        fail(result, "TRI fixture completion mismatch",
             space_counterexample(tri, "expected a 4-point completion with new point ({0},{2})"));
        return result;
    }
    NASpace dsc3 = discrete_space(Carrier::indexed(3));
    UCMap u = UCMap::make(tri, dsc3, {0, 1, 1});
    UCMap uhat = extend_map(u, hat);
    for (int pt = 0; pt < 3; ++pt) {
        if (uhat.table[pt] != u.table[pt]) {
            fail(result, "extension does not restrict to the original map",
                 map_counterexample(u, "extension fails uhat . j = u"));
            return result;
        }
    }
    if (uhat.table[3] != 0) {
        fail(result, "TRI fixture extension mismatch",
             map_counterexample(u, "expected the new point to extend to 0"));
    }
    return result;
}

SuiteResult order_tuples_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "order-tuples";
    for (const NASpace& x : spaces_up_to(budget.exhaustive_to, true)) {
        ++result.instances;
        CogeneratorEmbedding e = cogenerator_embedding(x);
        auto monotone = order_compatible_points(e);
        auto closed = zeta_closure(e.prod.space, e.map.image()).closure;
        if (monotone != closed) {
            fail(result, "order-compatible tuples differ from the closure of the image",
                 space_counterexample(x, "order-compatible tuples != zeta closure in the product"));
            return result;
        }
    }
    NASpace tri = tri_fixture();
    CogeneratorEmbedding e = cogenerator_embedding(tri);
    if (order_compatible_points(e).size() != 4) {
        fail(result, "TRI fixture: expected 4 order-compatible tuples",
             space_counterexample(tri, "expected 4 order-compatible tuples"));
    }
    return result;
}

SuiteResult three_way_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "three-way";
    for (const NASpace& x : spaces_up_to(budget.exhaustive_to, true)) {
        ++result.instances;
        bool complete_flag = completeness(x).complete;
        CogeneratorEmbedding e = cogenerator_embedding(x);
        bool closed_in_product = is_zeta_closed(e.prod.space, e.map.image());
        InjectivityReport inj = is_injective_within(x, budget.exhaustive_to);
        if (complete_flag != closed_in_product) {
            fail(result, "completeness differs from closedness in the product",
                 space_counterexample(x, "complete but not closed in the product (or conversely)"));
            return result;
        }
        if (complete_flag != inj.injective) {
            fail(result, "completeness differs from injectivity",
                 space_counterexample(x, "complete but not injective (or conversely)"));
            return result;
        }
        if (!complete_flag && !inj.witness_map) {
            fail(result, "incomplete space without a non-extendable witness",
                 space_counterexample(x, "missing witness"));
            return result;
        }
    }
    return result;
}

SuiteResult firmness_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "firmness";
    std::vector<NASpace> spaces = spaces_up_to(budget.exhaustive_to, true);
    std::vector<CompletionResult> hats;
    hats.reserve(spaces.size());
    for (const NASpace& x : spaces) hats.push_back(complete(x));
    for (size_t i = 0; i < spaces.size(); ++i) {
        for (size_t j = 0; j < spaces.size(); ++j) {
            for (const auto& table : all_functions(spaces[i], spaces[j], true)) {
                ++result.instances;
                UCMap u = UCMap::make(spaces[i], spaces[j], table);
                UCMap induced = induced_completion_map(u, hats[i], hats[j]);
                bool iso = is_isomorphism(induced);
                bool dense_embedding = is_embedding(u) && is_zeta_dense(spaces[j], u.image());
                if (iso != dense_embedding) {
                    fail(result,
                         iso ? "induced completion map is an isomorphism for a non-dense-embedding"
                             : "dense embedding whose induced completion map is not an isomorphism",
                         map_counterexample(u, "firmness violated"));
                    return result;
                }
            }
        }
    }
    return result;
}

void check_uniform_case(SuiteResult& result, const NASpace& x) {
    ++result.instances;
    auto fns = enumerate_choice_functions(x);
    auto filters = minimal_cauchy_filters(x);
    auto oracle = minimal_cauchy_filter_oracle(x);
    if (filters != oracle) {
        fail(result, "minimal Cauchy filters differ from the definition-level oracle",
             space_counterexample(x, "minimal Cauchy filters != oracle"));
        return;
    }
    if (filters.size() != fns.size()) {
        fail(result, "filter count differs from choice function count",
             space_counterexample(x, "correspondence is not bijective"));
        return;
    }
    for (const ChoiceFunction& f : fns) {
        SetFilter flt = filter_of_choice(x, f);
        if (!(choice_of_filter(x, flt) == f)) {
            fail(result, "choice_of_filter does not invert filter_of_choice",
                 space_counterexample(x, "G(F(f)) != f"));
            return;
        }
        for (int pt = 0; pt < x.size(); ++pt) {
            bool converges = filter_converges(x, flt, pt);
            bool limits_here = (limit(x, f) == std::optional<int>(pt));
            if (converges != limits_here) {
                fail(result, "filter convergence does not match choice function limits",
                     space_counterexample(x, "convergence correspondence violated"));
                return;
            }
        }
    }
    for (const SetFilter& flt : filters) {
        if (!(filter_of_choice(x, choice_of_filter(x, flt)) == flt)) {
            fail(result, "filter_of_choice does not invert choice_of_filter",
                 space_counterexample(x, "F(G(filter)) != filter"));
            return;
        }
    }
    // chosen blocks intersect along meets: z at (P meet Q) = z_P & z_Q
    auto members = stack_members(x);
    for (const ChoiceFunction& f : fns) {
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i; j < members.size(); ++j) {
                Partition mt = meet(members[i], members[j]);
                auto zp = members[i].block_members(value_block_id(x, f, members[i]));
                auto zq = members[j].block_members(value_block_id(x, f, members[j]));
                auto zm = mt.block_members(value_block_id(x, f, mt));
                std::vector<int> inter;
                std::set_intersection(zp.begin(), zp.end(), zq.begin(), zq.end(),
                                      std::back_inserter(inter));
                if (zm != inter) {
                    fail(result, "chosen blocks do not intersect along meets",
                         space_counterexample(x, "z at meet differs from intersection"));
                    return;
                }
            }
        }
    }
}

SuiteResult uniform_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "uniform";
    std::vector<NASpace> cases;
    for (const NASpace& x : spaces_up_to(budget.exhaustive_to, true)) {
        if (is_intersection_closed(x)) cases.push_back(x);
    }
    cases.push_back(discrete_space(Carrier::indexed(budget.max_carrier)));
    for (const NASpace& x : sampled_spaces(budget, true)) {
        if (is_intersection_closed(x)) cases.push_back(x);
    }
    for (const NASpace& x : cases) {
        check_uniform_case(result, x);
        if (!result.passed) return result;
    }
    return result;
}

SuiteResult closure_laws_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "closure-laws";
    long long idempotent = 0;
    long long closure_calls = 0;
    std::vector<NASpace> spaces = spaces_up_to(budget.exhaustive_to, false);

    for (const NASpace& x : spaces) {
        auto subsets = all_subsets(x.size());
        std::vector<std::vector<int>> closures(subsets.size());
        for (size_t mi = 0; mi < subsets.size(); ++mi) {
            ++result.instances;
            closures[mi] = zeta_closure(x, subsets[mi]).closure;
            if (!subset_of(subsets[mi], closures[mi])) {
                fail(result, "closure is not extensive",
                     space_counterexample(x, "M not contained in its closure"));
                return result;
            }
            ++closure_calls;
            if (zeta_closure(x, closures[mi]).closure == closures[mi]) ++idempotent;
        }
        if (!closures[0].empty()) {
            fail(result, "closure of the empty set is nonempty",
                 space_counterexample(x, "zeta(empty) != empty"));
            return result;
        }
        for (size_t mi = 0; mi < subsets.size(); ++mi) {
            for (size_t ni = 0; ni < subsets.size(); ++ni) {
                if (!subset_of(subsets[mi], subsets[ni])) continue;
                if (!subset_of(closures[mi], closures[ni])) {
                    fail(result, "closure is not monotone",
                         space_counterexample(x, "monotonicity violated"));
                    return result;
                }
            }
        }
        // hereditariness: closing inside a subspace is closing inside the
        // whole space intersected with the subspace
        for (const auto& s : all_subsets(x.size())) {
            if (s.empty()) continue;
            NASpace sub = subspace(x, s);
            for (const auto& m : all_subsets(static_cast<int>(s.size()))) {
                std::vector<int> m_in_x;
                for (int i : m) m_in_x.push_back(s[i]);
                auto inside = zeta_closure(sub, m).closure;
                std::vector<int> inside_in_x;
                for (int i : inside) inside_in_x.push_back(s[i]);
                auto outside = zeta_closure(x, m_in_x).closure;
                std::vector<int> expected;
                std::set_intersection(outside.begin(), outside.end(), s.begin(), s.end(),
                                      std::back_inserter(expected));
                if (inside_in_x != expected) {
                    fail(result, "closure is not hereditary",
                         space_counterexample(x, "hereditariness violated on subset " +
                                                     format_set(x.carrier, s)));
                    return result;
                }
            }
        }
    }

    // continuity: images of closures land in closures of images
    for (const NASpace& x : spaces) {
        for (const NASpace& y : spaces) {
            for (const auto& table : all_functions(x, y, true)) {
                for (const auto& m : all_subsets(x.size())) {
                    auto lhs = image_of(table, zeta_closure(x, m).closure);
                    auto rhs = zeta_closure(y, image_of(table, m)).closure;
                    if (!subset_of(lhs, rhs)) {
                        fail(result, "closure is not continuous along a map",
                             map_counterexample(UCMap::make(x, y, table),
                                                "f(zeta(M)) not inside zeta(f(M))"));
                        return result;
                    }
                }
            }
        }
    }
    result.note = "idempotent on " + std::to_string(idempotent) + "/" +
                  std::to_string(closure_calls) + " closures (informational)";
    return result;
}

// Brute-force enumeration of order-preserving selections over the full
// materialized stack, pruned prefix by prefix.
std::vector<std::vector<int>> order_preserving_member_maps(const NASpace& x) {
    auto members = stack_members(x);
    std::vector<std::vector<std::vector<int>>> blocks;
    blocks.reserve(members.size());
    for (const Partition& m : members) blocks.push_back(m.blocks());

    std::vector<std::vector<int>> out;
    std::vector<int> cur(members.size(), -1);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == members.size()) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b < members[i].block_count(); ++b) {
            bool ok = true;
            for (size_t k = 0; k < i && ok; ++k) {
                if (refines(members[k], members[i]) &&
                    !subset_of(blocks[k][cur[k]], blocks[i][b])) {
                    ok = false;
                }
                if (refines(members[i], members[k]) &&
                    !subset_of(blocks[i][b], blocks[k][cur[k]])) {
                    ok = false;
                }
            }
            if (ok) {
                cur[i] = b;
                self(self, i + 1);
                cur[i] = -1;
            }
        }
    };
    rec(rec, 0);
    return out;
}

void check_representations(SuiteResult& result, const NASpace& x) {
    ++result.instances;
    // compact assignments against the full-stack brute force
    auto compact = enumerate_choice_functions(x);
    auto brute = order_preserving_member_maps(x);
    if (compact.size() != brute.size()) {
        fail(result, "compact choice enumeration count differs from brute force",
             space_counterexample(x, "choice function representation mismatch"));
        return;
    }
    auto members = stack_members(x);
    std::vector<std::vector<int>> derived;
    for (const ChoiceFunction& f : compact) {
        std::vector<int> full(members.size());
        for (size_t i = 0; i < members.size(); ++i) full[i] = value_block_id(x, f, members[i]);
        derived.push_back(std::move(full));
    }
    std::sort(derived.begin(), derived.end());
    std::sort(brute.begin(), brute.end());
    if (derived != brute) {
        fail(result, "derived member values differ from brute force",
             space_counterexample(x, "choice function representation mismatch"));
        return;
    }
}

void check_hats(SuiteResult& result, const NASpace& x) {
    CompletionResult c = complete(x);
    std::vector<Partition> hats;
    for (const Partition& m : stack_members(x)) {
        std::vector<int> ids(c.points.size());
        for (size_t h = 0; h < c.points.size(); ++h) ids[h] = value_block_id(x, c.points[h], m);
        hats.push_back(Partition::from_block_ids(ids));
    }
    NASpace full = make_space(c.hat_space.carrier, hats);
    if (!(full == c.hat_space)) {
        fail(result, "generator hats differ from full-stack hats",
             space_counterexample(x, "completion structure mismatch"));
    }
}

SuiteResult representations_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "representations";
    std::vector<NASpace> exhaustive = spaces_up_to(budget.exhaustive_to, false);
    std::vector<NASpace> sampled = sample_spaces(budget.max_carrier, budget);

    for (const NASpace& x : exhaustive) {
        check_representations(result, x);
        if (!result.passed) return result;
    }
    for (const NASpace& x : sampled) {
        check_representations(result, x);
        if (!result.passed) return result;
    }

    // generator-level uniform continuity against the full-stack test
    auto check_uc_pair = [&](const NASpace& x, const NASpace& y) -> bool {
        for (const auto& table : all_functions(x, y, false)) {
            ++result.instances;
            if (is_uniformly_continuous(table, x, y) != is_uniformly_continuous_full(table, x, y)) {
                Document doc;
                doc.spaces.push_back(Document::SpaceDecl{"A", x});
                doc.spaces.push_back(Document::SpaceDecl{"B", y});
                fail(result, "generator-level UC test differs from the full-stack test",
                     "# UC test mismatch\n" + emit(doc));
                return false;
            }
        }
        return true;
    };
    for (const NASpace& x : exhaustive) {
        for (const NASpace& y : exhaustive) {
            if (!check_uc_pair(x, y)) return result;
        }
    }
    for (size_t i = 0; i < sampled.size(); ++i) {
        if (!check_uc_pair(sampled[i], sampled[(i + 1) % sampled.size()])) return result;
    }

    // completion structure from generator hats against all-member hats
    for (const NASpace& x : spaces_up_to(budget.exhaustive_to, true)) {
        check_hats(result, x);
        if (!result.passed) return result;
    }
    for (const NASpace& x : sampled_spaces(budget, true)) {
        check_hats(result, x);
        if (!result.passed) return result;
    }
    return result;
}

SuiteResult cli_suite(const InstanceBudget& budget) {
    SuiteResult result;
    result.name = "cli";
    const std::string fixture =
        "# fixtures\n"
        "space TRI\n"
        "points 0 1 2\n"
        "gen 0 | 1 2\n"
        "gen 0 1 | 2\n"
        "\n"
        "space DSC3\n"
        "points 0 1 2\n"
        "gen 2 | 1 | 0\n"
        "\n"
        "map u TRI -> DSC3\n"
        "0 -> 0\n"
        "1 -> 1\n"
        "2 -> 1\n";
    ++result.instances;
    std::string once = emit(parse(fixture));
    std::string twice = emit(parse(once));
    if (once != twice) {
        fail(result, "emit/parse round trip is not idempotent", "# round trip failure\n" + once);
        return result;
    }

    // emitted samples re-parse to equal spaces
    for (const NASpace& x : sample_spaces(budget.exhaustive_to, budget)) {
        ++result.instances;
        Document doc;
        doc.spaces.push_back(Document::SpaceDecl{"S", x});
        std::string text = emit(doc);
        Document back = parse(text);
        if (!(back.spaces.size() == 1 && back.spaces[0].space == x) || emit(back) != text) {
            fail(result, "emitted space does not round trip", "# round trip failure\n" + text);
            return result;
        }
    }

    // pinned generator: identical budgets yield identical samples
    ++result.instances;
    auto first = sample_spaces(budget.max_carrier, budget);
    auto second = sample_spaces(budget.max_carrier, budget);
    if (!(first == second)) {
        fail(result, "sampling is not deterministic", "# nondeterministic sampling\n");
    }
    return result;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"closure-oracle-exhaustive", "closure-oracle-sampled", "completion", "order-tuples",
            "three-way", "firmness", "uniform", "closure-laws", "representations", "cli"};
}

SuiteResult run_suite(const std::string& name, const InstanceBudget& budget) {
    budget.validate();
    if (name == "closure-oracle-exhaustive") return closure_oracle_exhaustive(budget);
    if (name == "closure-oracle-sampled") return closure_oracle_sampled(budget);
    if (name == "completion") return completion_suite(budget);
    if (name == "order-tuples") return order_tuples_suite(budget);
    if (name == "three-way") return three_way_suite(budget);
    if (name == "firmness") return firmness_suite(budget);
    if (name == "uniform") return uniform_suite(budget);
    if (name == "closure-laws") return closure_laws_suite(budget);
    if (name == "representations") return representations_suite(budget);
    if (name == "cli") return cli_suite(budget);
    throw error("unknown suite '" + name + "'");
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names = options.suites.empty() ? suite_names() : options.suites;
    const auto known = suite_names();
    for (const std::string& name : names) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            err << "error: unknown suite '" << name << "'\n";
            return 2;
        }
    }
    try {
        options.budget.validate();
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool all_passed = true;
    for (const std::string& name : names) {
        SuiteResult result = run_suite(name, options.budget);
        out << result.name << ": " << (result.passed ? "PASS" : "FAIL")
            << " instances=" << result.instances;
        if (!result.note.empty()) out << " (" << result.note << ")";
        out << "\n";
        if (!result.passed) {
            all_passed = false;
            out << result.counterexample;
            if (!result.counterexample.empty() && result.counterexample.back() != '\n') out << "\n";
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace nac
