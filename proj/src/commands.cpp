#include "nac/commands.hpp"

#include <ostream>

#include "nac/closure.hpp"
#include "nac/completion.hpp"
#include "nac/uniform.hpp"

namespace nac {

namespace {

std::string format_choice(const NASpace& x, const ChoiceFunction& f) {
    if (x.generators.empty()) return "()";
    std::string out;
    for (size_t i = 0; i < x.generators.size(); ++i) {
        if (i > 0) out += "; ";
        const Partition& g = x.generators[i];
        out += format_set(x.carrier, g.block_members(f.chosen[i])) + " of " +
               format_partition(x.carrier, g);
    }
    return out;
}

const NASpace* lookup_space(const Document& doc, const std::string& name, std::ostream& err) {
    const NASpace* space = doc.find_space(name);
    if (!space) err << "error: unknown space '" << name << "'\n";
    return space;
}

std::string hat_name(const Document& doc, const std::string& base) {
    std::string name = base + "_hat";
    while (doc.find_space(name) || doc.find_map(name)) name += "_";
    return name;
}

}  // namespace

int cmd_check(const Document& doc, const std::string& name, std::ostream& out, std::ostream& err) {
    const NASpace* space = lookup_space(doc, name, err);
    if (!space) return 2;

    bool t0 = is_t0(*space);
    if (t0) {
        out << "t0: true\n";
    } else {
        // first pair of points no generator separates
        Partition total = Partition::one_block(space->size());
        for (const Partition& g : space->generators) total = meet(total, g);
        int a = -1, b = -1;
        for (int i = 0; i < space->size() && a < 0; ++i) {
            for (int j = i + 1; j < space->size(); ++j) {
                if (total.block_id_of(i) == total.block_id_of(j)) {
                    a = i;
                    b = j;
                    break;
                }
            }
        }
        out << "t0: false (points " << space->carrier.names[a] << " and " << space->carrier.names[b]
            << " share a block of every generator)\n";
    }

    if (!t0) {
        out << "complete: n/a (requires t0)\n";
    } else {
        CompletenessReport report = completeness(*space);
        if (report.complete) {
            out << "complete: true\n";
        } else {
            out << "complete: false (witness: " << format_choice(*space, *report.witness) << ")\n";
        }
    }

    bool closed = is_intersection_closed(*space);
    if (closed) {
        out << "intersection-closed: true\n";
    } else {
        std::string witness;
        for (size_t i = 0; i < space->generators.size() && witness.empty(); ++i) {
            for (size_t j = i + 1; j < space->generators.size(); ++j) {
                if (!contains(*space, meet(space->generators[i], space->generators[j]))) {
                    witness = "meet of " + format_partition(space->carrier, space->generators[i]) +
                              " and " + format_partition(space->carrier, space->generators[j]) +
                              " is outside the stack";
                    break;
                }
            }
        }
        out << "intersection-closed: false (" << witness << ")\n";
    }
    return 0;
}

int cmd_closure(const Document& doc, const std::string& name,
                const std::vector<std::string>& set_labels, std::ostream& out, std::ostream& err) {
    const NASpace* space = lookup_space(doc, name, err);
    if (!space) return 2;
    std::vector<int> m;
    for (const std::string& label : set_labels) {
        int idx = space->carrier.index_of(label);
        if (idx < 0) {
            err << "error: unknown point '" << label << "'\n";
            return 2;
        }
        m.push_back(idx);
    }

    ClosureReport report = zeta_closure(*space, m);
    std::string kind;
    bool closed = report.closure == report.input;
    bool dense = static_cast<int>(report.closure.size()) == space->size();
    if (closed && dense) {
        kind = "closed, dense";
    } else if (closed) {
        kind = "closed";
    } else if (dense) {
        kind = "dense";
    } else {
        kind = "neither closed nor dense";
    }
    out << "closure: " << format_set(space->carrier, report.closure) << " (" << kind << ")\n";
    for (const ExclusionWitness& w : report.witnesses) {
        out << "point " << space->carrier.names[w.point] << " excluded by "
            << format_partition(space->carrier, w.first) << " and "
            << format_partition(space->carrier, w.second) << "\n";
    }
    return 0;
}

int cmd_complete(const Document& doc, const std::string& name, bool emit_space, std::ostream& out,
                 std::ostream& err) {
    const NASpace* space = lookup_space(doc, name, err);
    if (!space) return 2;
    if (!is_t0(*space)) {
        err << "error: space '" << name << "' is not t0\n";
        return 2;
    }

    CompletionResult hat = complete(*space);
    size_t fresh = hat.new_points.size();
    std::string summary = "completion has " + std::to_string(hat.hat_space.size()) + " point" +
                          (hat.hat_space.size() == 1 ? "" : "s") + "; " + std::to_string(fresh) +
                          " new point" + (fresh == 1 ? "" : "s");
    if (!emit_space) {
        out << summary << "\n";
    } else {
        // the whole output stays re-parseable: summary as a comment
        Document emitted;
        std::string hname = hat_name(doc, name);
        emitted.spaces.push_back(Document::SpaceDecl{name, *space});
        emitted.spaces.push_back(Document::SpaceDecl{hname, hat.hat_space});
        emitted.maps.push_back(Document::MapDecl{"j_" + name, name, hname, hat.j});
        out << "# " << summary << "\n" << emit(emitted);
    }
    return 0;
}

int cmd_extend(const Document& doc, const std::string& map_name, std::ostream& out,
               std::ostream& err) {
    const Document::MapDecl* decl = doc.find_map(map_name);
    if (!decl) {
        err << "error: unknown map '" << map_name << "'\n";
        return 2;
    }
    if (!is_t0(decl->map.domain) || !is_t0(decl->map.codomain)) {
        err << "error: extension requires t0 spaces\n";
        return 2;
    }
    if (!completeness(decl->map.codomain).complete) {
        err << "error: codomain '" << decl->codomain_name << "' is not complete\n";
        return 2;
    }

    CompletionResult hat = complete(decl->map.domain);
    UCMap extended = extend_map(decl->map, hat);

    Document emitted;
    std::string hname = hat_name(doc, decl->domain_name);
    emitted.spaces.push_back(Document::SpaceDecl{hname, hat.hat_space});
    emitted.spaces.push_back(Document::SpaceDecl{decl->codomain_name, decl->map.codomain});
    emitted.maps.push_back(
        Document::MapDecl{map_name + "_hat", hname, decl->codomain_name, extended});
    out << emit(emitted);
    return 0;
}

int cmd_cauchy(const Document& doc, const std::string& name, std::ostream& out, std::ostream& err) {
    const NASpace* space = lookup_space(doc, name, err);
    if (!space) return 2;
    try {
        require_uniform_case(*space);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<SetFilter> filters = minimal_cauchy_filters(*space);
    out << "minimal cauchy filters: " << filters.size() << "\n";
    for (const SetFilter& f : filters) {
        out << "filter " << format_set(space->carrier, f.generating_set) << " <-> choice "
            << format_choice(*space, choice_of_filter(*space, f)) << "\n";
    }
    return 0;
}

}  // namespace nac
